"""Combinatorics of the geometric realization: cell counts, 1-skeleton
export, fast degree-0 homology through equivalence classes, and the
commutativity / braid-relation equivalence check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .chains import VerificationReport
from .errors import IneligibleTable, UnknownFormat
from .magma import (MulTable, is_associative, is_idempotent, is_proto_unital,
                    satisfies_abbc)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:  # path compression
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            self.parent[max(ri, rj)] = min(ri, rj)

    def class_count(self) -> int:
        return sum(1 for i in range(len(self.parent)) if self.find(i) == i)


def cell_counts(t: MulTable, n_max: int) -> list[int]:
    """Number of k-cells of the realization, k = 0..n_max: one per basis
    tuple, so |X|^(k+1)."""
    return [t.order ** (k + 1) for k in range(n_max + 1)]


def h0_general(t: MulTable) -> int:
    """Betti_0 via the equivalence generated by x*y*x ~ y*x*y.

    Works for any associative table satisfying a*b*b*c = a*b*c; equals the
    free rank of the degree-0 homology.
    """
    if not (is_associative(t) and satisfies_abbc(t)):
        raise IneligibleTable("h0_general needs an associative table with "
                              "a*b*b*c = a*b*c")
    uf = UnionFind(t.order)
    r = t.rows
    for x in range(t.order):
        for y in range(t.order):
            uf.union(r[r[x][y]][x], r[r[y][x]][y])
    return uf.class_count()


def h0_classes(t: MulTable) -> list[list[int]]:
    """The equivalence classes behind h0_general, sorted by least element."""
    if not (is_associative(t) and satisfies_abbc(t)):
        raise IneligibleTable("h0_classes needs an associative table with "
                              "a*b*b*c = a*b*c")
    uf = UnionFind(t.order)
    r = t.rows
    for x in range(t.order):
        for y in range(t.order):
            uf.union(r[r[x][y]][x], r[r[y][x]][y])
    buckets: dict[int, list[int]] = {}
    for e in range(t.order):
        buckets.setdefault(uf.find(e), []).append(e)
    return [buckets[k] for k in sorted(buckets)]


def h0_commutator(t: MulTable) -> int:
    """Betti_0 via the simpler equivalence x*y ~ y*x.

    Only valid on proto-unital shelves and idempotent semigroups; outside
    that family the two relations differ and this shortcut is rejected.
    """
    if not (is_proto_unital(t) or (is_idempotent(t) and is_associative(t))):
        raise IneligibleTable(
            "the commutator shortcut needs a proto-unital shelf or an "
            "idempotent semigroup"
        )
    return commutator_class_count(t)


def commutator_class_count(t: MulTable) -> int:
    """Class count of the x*y ~ y*x equivalence, with no eligibility gate
    (informational outside the valid family)."""
    uf = UnionFind(t.order)
    r = t.rows
    for x in range(t.order):
        for y in range(t.order):
            uf.union(r[x][y], r[y][x])
    return uf.class_count()


def verify_braid_commutativity(t: MulTable) -> VerificationReport:
    """Check (a*b == b*a) <=> (a*b*a == b*a*b) over all pairs.

    The biconditional is a theorem for proto-unital shelves and idempotent
    semigroups; elsewhere it may fail, and failures are report content.
    """
    report = VerificationReport("commutativity <=> braid relation")
    r = t.rows
    for a in range(t.order):
        for b in range(t.order):
            report.checked += 1
            commutes = r[a][b] == r[b][a]
            braids = r[r[a][b]][a] == r[r[b][a]][b]
            if commutes != braids:
                report.violations.append((a, b, "a*b%s=b*a but a*b*a%s=b*a*b" %
                                          ("=" if commutes else "!",
                                           "=" if braids else "!")))
    return report


# ---------------------------------------------------------------------------
# skeleton export

@dataclass(frozen=True)
class SkeletonEdge:
    label: tuple  # the degree-1 tuple (x0, x1)
    source: int   # image under d1
    target: int   # image under d0
    loop: bool


@dataclass(frozen=True)
class SkeletonFace:
    label: tuple  # the degree-2 tuple (x0, x1, x2)
    boundary: tuple  # three (sign, edge label) pairs, signs (+1, -1, +1)


@dataclass(frozen=True)
class SkeletonExport:
    vertices: tuple
    edges: tuple
    faces: tuple


def skeleton(t: MulTable) -> SkeletonExport:
    """Vertices, oriented edges and 2-cells of the realization.

    An edge (x0, x1) runs from its d1-image x1*x0*x1 to its d0-image
    x0*x1*x0, matching the sign convention of the degree-1 boundary; loops
    are kept and flagged.
    """
    r = t.rows
    rng = range(t.order)
    edges = []
    for x0 in rng:
        for x1 in rng:
            src = r[r[x1][x0]][x1]
            dst = r[r[x0][x1]][x0]
            edges.append(SkeletonEdge((x0, x1), src, dst, src == dst))
    faces = []
    for x0 in rng:
        for x1 in rng:
            for x2 in rng:
                d0 = (r[x0][x1], r[x2][x0])
                d1 = (r[x0][x1], r[x1][x2])
                d2 = (r[x2][x0], r[x1][x2])
                faces.append(SkeletonFace((x0, x1, x2),
                                          ((1, d0), (-1, d1), (1, d2))))
    return SkeletonExport(tuple(rng), tuple(edges), tuple(faces))


def skeleton_component_count(t: MulTable) -> int:
    """Connected components of the 1-skeleton by graph traversal; an
    oracle for h0_general."""
    sk = skeleton(t)
    uf = UnionFind(t.order)
    for e in sk.edges:
        uf.union(e.source, e.target)
    return uf.class_count()


def export_skeleton(t: MulTable, fmt: str) -> str:
    """Serialize the skeleton; 'graph' is a DOT digraph of the 1-skeleton,
    'cells' a JSON document that also carries the signed 2-cells."""
    sk = skeleton(t)
    if fmt == "graph":
        lines = ["digraph skeleton {"]
        for v in sk.vertices:
            lines.append("  %d;" % v)
        for e in sk.edges:
            attrs = 'label="(%s)"' % ",".join(map(str, e.label))
            if e.loop:
                attrs += ", loop=true"
            lines.append("  %d -> %d [%s];" % (e.source, e.target, attrs))
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "cells":
        doc = {
            "vertices": list(sk.vertices),
            "edges": [
                {"label": list(e.label), "source": e.source,
                 "target": e.target, "loop": e.loop}
                for e in sk.edges
            ],
            "faces": [
                {"label": list(f.label),
                 "boundary": [{"sign": s, "edge": list(lbl)}
                              for s, lbl in f.boundary]}
                for f in sk.faces
            ],
        }
        return json.dumps(doc, indent=2) + "\n"
    raise UnknownFormat("unknown skeleton format %r (graph or cells)" % fmt)
