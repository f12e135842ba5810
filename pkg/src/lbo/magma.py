"""Finite magmas as multiplication tables: parsing, axiom predicates,
classification, isomorphism, and exhaustive enumeration of small families.

Elements are dense indices 0..n-1.  Products written a*b*c associate to the
left throughout: a*b*c = (a*b)*c.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations, product

from .errors import OrderMismatch, ParseError, RangeError, Unsupported

FAMILIES = ("assoc-shelf", "idem-sg", "abbc-sg", "proto-unital")

ENUM_MAX_ORDER = 4
ISO_MAX_ORDER = 8


@dataclass(frozen=True)
class MulTable:
    """An n x n multiplication table; entry rows[a][b] is the product a*b."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        if n == 0:
            raise ParseError("empty table")
        for row in self.rows:
            if len(row) != n:
                raise ParseError("table is ragged: expected %d entries per row" % n)
            for v in row:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise ParseError("table entries must be integers, got %r" % (v,))
                if not 0 <= v < n:
                    raise RangeError("entry %d out of range for order %d" % (v, n))

    @property
    def order(self) -> int:
        return len(self.rows)

    def apply(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def __call__(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def prod(self, elems) -> int:
        """Left-associated product of a nonempty element sequence."""
        it = iter(elems)
        acc = next(it)
        for e in it:
            acc = self.rows[acc][e]
        return acc

    def brace(self) -> str:
        """Render in brace notation, e.g. '{{0,0},{0,1}}'."""
        return "{%s}" % ",".join(
            "{%s}" % ",".join(str(v) for v in row) for row in self.rows
        )

    def __str__(self) -> str:
        return self.brace()


def parse_table(text: str) -> MulTable:
    """Parse brace notation '{{0,0},{0,1}}' or a JSON nested list.

    Whitespace-insensitive.  Raises ParseError on malformed syntax and
    RangeError when an entry is negative or >= the table order.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped[0] == "{":
        stripped = stripped.replace("{", "[").replace("}", "]")
    try:
        data = json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise ParseError("cannot parse table: %s" % exc) from None
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ParseError("expected a list of rows")
    return MulTable(tuple(tuple(r) for r in data))


# ---------------------------------------------------------------------------
# axiom predicates (exhaustive over pairs / triples)

def is_associative(t: MulTable) -> bool:
    r = t.rows
    rng = range(t.order)
    return all(r[r[a][b]][c] == r[a][r[b][c]] for a in rng for b in rng for c in rng)


def is_right_self_distributive(t: MulTable) -> bool:
    r = t.rows
    rng = range(t.order)
    return all(
        r[r[a][b]][c] == r[r[a][c]][r[b][c]] for a in rng for b in rng for c in rng
    )


def is_idempotent(t: MulTable) -> bool:
    return all(t.rows[a][a] == a for a in range(t.order))


def is_commutative(t: MulTable) -> bool:
    r = t.rows
    rng = range(t.order)
    return all(r[a][b] == r[b][a] for a in rng for b in rng)


def satisfies_abbc(t: MulTable) -> bool:
    """a*b*b*c == a*b*c for all triples, associating left to right."""
    r = t.rows
    rng = range(t.order)
    for a in rng:
        for b in rng:
            ab = r[a][b]
            abb = r[ab][b]
            if ab == abb:
                continue
            if any(r[abb][c] != r[ab][c] for c in rng):
                return False
    return True


def _pair_axioms(t: MulTable) -> bool:
    # a*b == b*(a*b) and a*b == (a*b)*b for all pairs
    r = t.rows
    rng = range(t.order)
    for a in rng:
        for b in rng:
            ab = r[a][b]
            if r[b][ab] != ab or r[ab][b] != ab:
                return False
    return True


def is_proto_unital(t: MulTable) -> bool:
    """Shelf satisfying a*b = b*(a*b) and a*b = (a*b)*b.

    The ambient self-distributivity is part of the definition; the pair
    axioms alone do not force associativity.
    """
    return _pair_axioms(t) and is_right_self_distributive(t)


def is_pre_unital(t: MulTable) -> bool:
    return is_proto_unital(t) and is_idempotent(t)


def find_units(t: MulTable) -> list[int]:
    r = t.rows
    rng = range(t.order)
    return [e for e in rng if all(r[e][x] == x and r[x][e] == x for x in rng)]


def is_unital(t: MulTable) -> bool:
    return bool(find_units(t))


def find_left_zeros(t: MulTable) -> list[int]:
    """Elements e with e*x = e for all x."""
    return [e for e in range(t.order) if all(v == e for v in t.rows[e])]


def find_right_zeros(t: MulTable) -> list[int]:
    """Elements e with x*e = e for all x."""
    rng = range(t.order)
    return [e for e in rng if all(t.rows[x][e] == e for x in rng)]


def find_zeros(t: MulTable) -> list[int]:
    """Two-sided zeros: x*e = e = e*x for all x."""
    left = set(find_left_zeros(t))
    return [e for e in find_right_zeros(t) if e in left]


def _right_translations_bijective(t: MulTable) -> bool:
    rng = range(t.order)
    return all(len({t.rows[a][b] for a in rng}) == t.order for b in rng)


def adjoin_zero(t: MulTable) -> MulTable:
    """Extend by one element z (the new largest index) with z*x = x*z = z.

    Preserves each of associativity, self-distributivity, idempotency and
    the a*b*b*c = a*b*c axiom; asserted by re-running the predicates.
    """
    n = t.order
    rows = tuple(row + (n,) for row in t.rows) + ((n,) * (n + 1),)
    out = MulTable(rows)
    for pred in (is_associative, is_right_self_distributive, is_idempotent,
                 satisfies_abbc):
        if pred(out) != pred(t):
            raise RuntimeError("adjoin_zero changed %s" % pred.__name__)
    return out


@dataclass(frozen=True)
class ClassReport:
    associative: bool
    right_self_distributive: bool
    idempotent: bool
    commutative: bool
    abbc: bool
    proto_unital: bool
    pre_unital: bool
    unital: bool
    is_shelf: bool
    is_spindle: bool
    is_rack: bool
    homology_eligible: bool
    units: tuple[int, ...]
    zeros: tuple[int, ...]
    left_zeros: tuple[int, ...]
    right_zeros: tuple[int, ...]

    def flags(self) -> dict[str, bool]:
        return {
            "associative": self.associative,
            "right-self-distributive": self.right_self_distributive,
            "idempotent": self.idempotent,
            "commutative": self.commutative,
            "abbc": self.abbc,
            "proto-unital": self.proto_unital,
            "pre-unital": self.pre_unital,
            "unital": self.unital,
            "shelf": self.is_shelf,
            "spindle": self.is_spindle,
            "rack": self.is_rack,
            "homology-eligible": self.homology_eligible,
        }


def classify(t: MulTable) -> ClassReport:
    """Evaluate every predicate and cross-check the structural implications.

    A violated implication (proto-unital table that is not associative,
    associative shelf without a*b*b*c = a*b*c, ...) can only come from a bug
    in the predicates, so it raises rather than returning a report.
    """
    assoc = is_associative(t)
    rsd = is_right_self_distributive(t)
    idem = is_idempotent(t)
    abbc = satisfies_abbc(t)
    proto = is_proto_unital(t)
    report = ClassReport(
        associative=assoc,
        right_self_distributive=rsd,
        idempotent=idem,
        commutative=is_commutative(t),
        abbc=abbc,
        proto_unital=proto,
        pre_unital=proto and idem,
        unital=is_unital(t),
        is_shelf=rsd,
        is_spindle=rsd and idem,
        is_rack=rsd and _right_translations_bijective(t),
        homology_eligible=assoc and abbc,
        units=tuple(find_units(t)),
        zeros=tuple(find_zeros(t)),
        left_zeros=tuple(find_left_zeros(t)),
        right_zeros=tuple(find_right_zeros(t)),
    )
    if report.proto_unital and not report.associative:
        raise RuntimeError("internal consistency: proto-unital table not associative")
    if report.pre_unital and not report.proto_unital:
        raise RuntimeError("internal consistency: pre-unital table not proto-unital")
    if report.associative and report.right_self_distributive and not report.abbc:
        raise RuntimeError("internal consistency: associative shelf without abbc")
    if report.associative and report.idempotent and not report.abbc:
        raise RuntimeError("internal consistency: idempotent semigroup without abbc")
    return report


# ---------------------------------------------------------------------------
# isomorphism and enumeration

def _relabel(rows, perm):
    n = len(rows)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(
        tuple(perm[rows[inv[a]][inv[b]]] for b in range(n)) for a in range(n)
    )


def are_isomorphic(t1: MulTable, t2: MulTable) -> bool:
    """Brute force over all permutations; intended for order <= 6."""
    if t1.order != t2.order:
        raise OrderMismatch("orders %d and %d differ" % (t1.order, t2.order))
    if t1.order > ISO_MAX_ORDER:
        raise Unsupported("isomorphism search is exhaustive; order capped at %d"
                          % ISO_MAX_ORDER)
    target = t2.rows
    return any(_relabel(t1.rows, perm) == target
               for perm in permutations(range(t1.order)))


def canonical_form(t: MulTable) -> tuple[tuple[int, ...], ...]:
    """Lexicographically smallest relabeling; equal iff isomorphic."""
    if t.order > ISO_MAX_ORDER:
        raise Unsupported("canonical form is exhaustive; order capped at %d"
                          % ISO_MAX_ORDER)
    return min(_relabel(t.rows, perm) for perm in permutations(range(t.order)))


def _family_predicate(family: str):
    if family == "assoc-shelf":
        return lambda t: is_associative(t) and is_right_self_distributive(t)
    if family == "idem-sg":
        return lambda t: is_associative(t) and is_idempotent(t)
    if family == "abbc-sg":
        return lambda t: is_associative(t) and satisfies_abbc(t)
    if family == "proto-unital":
        return is_proto_unital
    raise Unsupported("unknown family %r (choose from %s)" % (family, ", ".join(FAMILIES)))


def _partial_ok(rows, r, n, family):
    """Constraint checks after filling row r (rows 0..r defined).

    A triple is checkable once every row it reads exists; only triples whose
    deepest lookup is row r are tested here (older ones were tested when the
    earlier rows were completed).  Pruning is a filter: the final full
    predicate pass decides membership.
    """
    rng = range(n)
    defined = r + 1
    for a in range(defined):
        ra = rows[a]
        for b in range(defined):
            ab = ra[b]
            if ab >= defined:
                continue
            rb = rows[b]
            rab = rows[ab]
            if max(a, b, ab) == r:
                # associativity: (a*b)*c == a*(b*c)
                for c in rng:
                    if rab[c] != ra[rb[c]]:
                        return False
                if family == "proto-unital":
                    if rb[ab] != ab or rab[b] != ab:
                        return False
            if family in ("assoc-shelf", "proto-unital"):
                # self-distributivity: (a*b)*c == (a*c)*(b*c)
                for c in rng:
                    ac = ra[c]
                    if ac >= defined or max(a, b, ab, ac) != r:
                        continue
                    if rab[c] != rows[ac][rb[c]]:
                        return False
    if family == "abbc-sg":
        for a in range(defined):
            ra = rows[a]
            for b in rng:
                ab = ra[b]
                if ab >= defined:
                    continue
                abb = rows[ab][b]
                if abb >= defined or abb == ab or max(a, ab, abb) != r:
                    continue
                rab, rabb = rows[ab], rows[abb]
                if any(rabb[c] != rab[c] for c in rng):
                    return False
    return True


def enumerate_tables(order: int, family: str, up_to_iso: bool = False) -> list[MulTable]:
    """All order-n tables of the family, in lexicographic row-major order.

    With up_to_iso the lexicographically smallest representative of each
    isomorphism class is kept (the family is closed under relabeling, so the
    first table seen in a class is its smallest member).
    """
    pred = _family_predicate(family)
    if order < 1:
        raise Unsupported("order must be positive")
    if order > ENUM_MAX_ORDER:
        raise Unsupported("exhaustive enumeration capped at order %d" % ENUM_MAX_ORDER)

    pin_diagonal = family == "idem-sg"
    n = order
    results: list[MulTable] = []
    seen_canon: set = set()

    def row_candidates(a):
        slots = [(a,) if (pin_diagonal and b == a) else tuple(range(n))
                 for b in range(n)]
        return product(*slots)

    def extend(rows, a):
        for cand in row_candidates(a):
            rows.append(cand)
            if _partial_ok(rows, a, n, family):
                if a == n - 1:
                    t = MulTable(tuple(rows))
                    if pred(t):
                        if up_to_iso:
                            c = canonical_form(t)
                            if c not in seen_canon:
                                seen_canon.add(c)
                                results.append(t)
                        else:
                            results.append(t)
                else:
                    extend(rows, a + 1)
            rows.pop()

    extend([], 0)
    # final full predicate pass is authoritative; pruning is only a filter
    return results
