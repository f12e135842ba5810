"""Temperley-Lieb Kauffman diagrams and the Jones monoid.

A diagram on n strands is a non-crossing perfect matching of 2n boundary
points of a rectangle.  Points are labelled in circular order: top row left
to right (labels 0..n-1 for t1..tn), then bottom row right to left (labels
n..2n-1 for bn..b1).  In this order planarity is exactly the non-crossing
condition for chords of a disk, and a matching is non-crossing iff its
bracket sequence balances.

Composition stacks the first diagram on top of the second; closed loops
trapped in the glued middle row are counted and then discarded, which is
the Jones-monoid product.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import (InvalidPartition, NotClosed, ParseError,
                     PartitionMismatch, ResourceLimit, StrandMismatch)
from .magma import MulTable

DEFAULT_MAX_STRANDS = 12

Partition = tuple


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _is_noncrossing_involution(pairing) -> bool:
    size = len(pairing)
    if size % 2:
        return False
    for i, j in enumerate(pairing):
        if not 0 <= j < size or j == i or pairing[j] != i:
            return False
    stack = []
    for i, j in enumerate(pairing):
        if j > i:
            stack.append(j)
        elif not stack or stack.pop() != i:
            return False
    return True


@dataclass(frozen=True)
class Diagram:
    """Kauffman diagram as a fixed-point-free non-crossing involution on
    the 2n circularly ordered boundary labels."""

    pairing: tuple

    def __post_init__(self):
        if not _is_noncrossing_involution(self.pairing):
            raise ParseError("pairing %r is not a non-crossing perfect matching"
                             % (self.pairing,))

    @property
    def strands(self) -> int:
        return len(self.pairing) // 2

    def point_name(self, label: int) -> str:
        n = self.strands
        return "t%d" % (label + 1) if label < n else "b%d" % (2 * n - label)

    def text(self) -> str:
        """Text form 'n; p-q, p-q, ...' listing each matched pair once."""
        pairs = []
        for i, j in enumerate(self.pairing):
            if i < j:
                pairs.append("%s-%s" % (self.point_name(i), self.point_name(j)))
        return "%d; %s" % (self.strands, ", ".join(pairs))

    def __str__(self) -> str:
        return self.text()


def _parse_point(name: str, n: int) -> int:
    name = name.strip().lower()
    if len(name) < 2 or name[0] not in "tb":
        raise ParseError("bad point name %r" % name)
    try:
        idx = int(name[1:])
    except ValueError:
        raise ParseError("bad point name %r" % name) from None
    if not 1 <= idx <= n:
        raise ParseError("point %r out of range for %d strands" % (name, n))
    return idx - 1 if name[0] == "t" else 2 * n - idx


def parse_diagram(text: str) -> Diagram:
    """Parse the 'n; t1-b1, t2-t3, ...' text form."""
    head, sep, body = text.partition(";")
    if not sep:
        raise ParseError("diagram text needs 'n; pairs'")
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError("bad strand count %r" % head.strip()) from None
    if n < 1:
        raise ParseError("strand count must be positive")
    pairing = [-1] * (2 * n)
    for chunk in body.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        ends = chunk.split("-")
        if len(ends) != 2:
            raise ParseError("bad pair %r" % chunk)
        a, b = (_parse_point(e, n) for e in ends)
        if pairing[a] != -1 or pairing[b] != -1:
            raise ParseError("point repeated in %r" % chunk)
        pairing[a], pairing[b] = b, a
    if -1 in pairing:
        missing = [i for i, v in enumerate(pairing) if v == -1]
        raise ParseError("unmatched points at labels %r" % missing)
    return Diagram(tuple(pairing))


def identity_diagram(n: int) -> Diagram:
    return Diagram(tuple(2 * n - 1 - k for k in range(2 * n)))


def hook(n: int, i: int) -> Diagram:
    """Generator e_i: cups t_i-t_{i+1} and b_i-b_{i+1}, through strands
    elsewhere."""
    if not 1 <= i <= n - 1:
        raise ParseError("hook index %d out of range 1..%d" % (i, n - 1))
    pairing = [2 * n - 1 - k for k in range(2 * n)]
    a, b = i - 1, i
    pairing[a], pairing[b] = b, a
    c, d = 2 * n - i - 1, 2 * n - i
    pairing[c], pairing[d] = d, c
    return Diagram(tuple(pairing))


@lru_cache(maxsize=32)
def _enumerate_pairings(size: int) -> tuple:
    """All non-crossing perfect matchings of `size` points, as pairing
    tuples in lexicographic order.

    The first point must pair at odd distance, splitting the rest into an
    inside and an outside block; recursing on both yields each matching
    exactly once.
    """
    def rec(points):
        if not points:
            yield ()
            return
        first = points[0]
        for k in range(1, len(points), 2):
            for left in rec(points[1:k]):
                for right in rec(points[k + 1:]):
                    yield ((first, points[k]),) + left + right

    out = []
    for pairs in rec(tuple(range(size))):
        p = [-1] * size
        for a, b in pairs:
            p[a], p[b] = b, a
        out.append(tuple(p))
    out.sort()
    return tuple(out)


def enumerate_diagrams(n: int, max_strands: int = DEFAULT_MAX_STRANDS) -> list[Diagram]:
    """All diagrams on n strands in a fixed deterministic order; there are
    Catalan(n) of them."""
    if n < 1:
        raise ResourceLimit("strand count must be positive")
    if n > max_strands:
        raise ResourceLimit("strand count %d exceeds cap %d" % (n, max_strands))
    return [Diagram(p) for p in _enumerate_pairings(2 * n)]


def compose(d1: Diagram, d2: Diagram) -> tuple[Diagram, int]:
    """Stack d1 over d2, gluing d1's bottom row to d2's top row.

    Returns the induced diagram on the outer boundary and the number of
    closed loops confined to the middle; the Jones-monoid product discards
    the loop count.
    """
    n = d1.strands
    if d2.strands != n:
        raise StrandMismatch("cannot compose %d strands with %d" % (n, d2.strands))
    two_n = 2 * n
    # Product boundary: top = d1's top (labels 0..n-1), bottom = d2's
    # bottom (labels n..2n-1).  The glued middle identifies d1's bottom
    # label L with d2's top label 2n-1-L (and symmetrically back).
    visited1 = [False] * two_n  # d1's middle points carry labels >= n
    visited2 = [False] * two_n  # d2's middle points carry labels < n

    def trace(side, label):
        # follow a strand from an outer point to its outer endpoint
        while True:
            if side == 1:
                partner = d1.pairing[label]
                if partner < n:
                    return partner  # product top label
                visited1[partner] = True
                label = two_n - 1 - partner
                visited2[label] = True
                side = 2
            else:
                partner = d2.pairing[label]
                if partner >= n:
                    return partner  # product bottom label
                visited2[partner] = True
                label = two_n - 1 - partner
                visited1[label] = True
                side = 1

    result = [-1] * two_n
    for start in range(n):
        if result[start] == -1:
            end = trace(1, start)
            result[start], result[end] = end, start
    for start in range(n, two_n):
        if result[start] == -1:
            end = trace(2, start)
            result[start], result[end] = end, start

    # strands never seen from the outside close up into middle loops
    loops = 0
    for mid in range(n, two_n):
        if visited1[mid]:
            continue
        loops += 1
        label = mid
        while not visited1[label]:
            visited1[label] = True
            partner = d1.pairing[label]
            visited1[partner] = True
            over = two_n - 1 - partner
            visited2[over] = True
            partner2 = d2.pairing[over]
            visited2[partner2] = True
            label = two_n - 1 - partner2
    return Diagram(tuple(result)), loops


def is_idempotent_diagram(d: Diagram) -> bool:
    """True when d composed with itself returns d (loops ignored)."""
    return compose(d, d)[0] == d


def count_idempotents(n: int, max_strands: int = DEFAULT_MAX_STRANDS) -> int:
    return sum(1 for d in enumerate_diagrams(n, max_strands)
               if is_idempotent_diagram(d))


# ---------------------------------------------------------------------------
# partitions and sub-monoids

def parse_partition(text: str) -> Partition:
    """Parse '2+1+2+5' (also accepts commas) into a tuple of parts."""
    chunks = text.replace(",", "+").split("+")
    try:
        parts = tuple(int(c.strip()) for c in chunks if c.strip())
    except ValueError:
        raise ParseError("bad partition %r" % text) from None
    if not parts or any(p < 1 for p in parts):
        raise ParseError("partition parts must be positive integers")
    return parts


def _strand_position(label: int, n: int) -> int:
    """1-based column of a boundary label (top or bottom row)."""
    return label + 1 if label < n else 2 * n - label


def admits_partition(d: Diagram, parts: Partition) -> bool:
    """True when no strand of d crosses the vertical cuts after
    a_1, a_1+a_2, ... columns."""
    n = d.strands
    if sum(parts) != n:
        raise PartitionMismatch("partition %r does not sum to %d strands"
                                % (parts, n))
    bounds = []
    acc = 0
    for a in parts:
        acc += a
        bounds.append(acc)

    def block(pos: int) -> int:
        for idx, b in enumerate(bounds):
            if pos <= b:
                return idx
        raise AssertionError

    for i, j in enumerate(d.pairing):
        if i < j:
            if block(_strand_position(i, n)) != block(_strand_position(j, n)):
                return False
    return True


def jsmp(n: int, parts: Partition,
         max_strands: int = DEFAULT_MAX_STRANDS) -> list[Diagram]:
    """All diagrams admitting the partition: the sub-monoid J(S,M,P).

    For partitions with every part <= 3 the result is verified closed under
    composition and element-wise idempotent; larger parts are still
    constructible, but those assertions are skipped and flagged.
    """
    if sum(parts) != n:
        raise PartitionMismatch("partition %r does not sum to %d strands"
                                % (parts, n))
    members = [d for d in enumerate_diagrams(n, max_strands)
               if admits_partition(d, parts)]
    if any(p > 3 for p in parts):
        warnings.warn(
            "partition %r has a part exceeding 3; closure and idempotence "
            "are not guaranteed and were not checked" % (parts,),
            stacklevel=2,
        )
        return members
    index = {d.pairing: k for k, d in enumerate(members)}
    for a in members:
        if not is_idempotent_diagram(a):
            raise NotClosed("element %s of the sub-monoid is not idempotent" % a)
        for b in members:
            prod_, _ = compose(a, b)
            if prod_.pairing not in index:
                raise NotClosed("product of %s and %s leaves the set" % (a, b))
    return members


def to_mul_table(diagrams: list[Diagram]) -> MulTable:
    """Multiplication table of a composition-closed diagram list, indexed
    in the given order; raises NotClosed naming the offending pair."""
    index = {d.pairing: k for k, d in enumerate(diagrams)}
    rows = []
    for a_idx, a in enumerate(diagrams):
        row = []
        for b_idx, b in enumerate(diagrams):
            prod_, _ = compose(a, b)
            k = index.get(prod_.pairing)
            if k is None:
                raise NotClosed(
                    "product of element %d (%s) and element %d (%s) is not in "
                    "the set" % (a_idx, a, b_idx, b)
                )
            row.append(k)
        rows.append(tuple(row))
    return MulTable(tuple(rows))


def partition_count_exact_parts(n: int, k: int) -> int:
    """Partitions of n with exactly k parts, by the recurrence
    n_k = (n-k)_k + (n-1)_{k-1}; equals the count with largest part k."""
    if k == 0:
        return 1 if n == 0 else 0
    if n < k:
        return 0
    return (partition_count_exact_parts(n - k, k)
            + partition_count_exact_parts(n - 1, k - 1))


def partition_count_largest3(n: int) -> int:
    """Partitions of n whose largest part is 3 (= partitions with exactly
    three parts, by conjugation)."""
    if n < 1:
        raise ValueError("n must be positive")
    return partition_count_exact_parts(n, 3)


def partition_count_sequence(m: int) -> list[int]:
    """First m values of partition_count_largest3, starting at n = 1.

    Note the first nonzero value appears at n = 3; the documented sequence
    1,2,3,4,5,7,8,10,12,14 is this function on the window n = 4..13.
    """
    return [partition_count_largest3(n) for n in range(1, m + 1)]


def partitions_of(n: int, max_part: int | None = None):
    """Brute-force generator of all partitions (descending parts)."""
    cap = n if max_part is None else min(max_part, n)

    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    yield from rec(n, cap)
