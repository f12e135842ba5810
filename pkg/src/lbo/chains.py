"""Face maps, formal chains, boundary operators and boundary matrices for
the six homology theories, plus machine verification of the simplicial
identities.

Chain modules are free on X^(k+1): a degree-k basis element is a tuple of
k+1 elements of the table.  Tuple bases are ordered lexicographically with
the first coordinate most significant, so the rank of a tuple is its value
read as a base-|X| numeral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product

import numpy as np

from .errors import DegreeMismatch, IneligibleTable, NotAZero, ResourceLimit
from .magma import (MulTable, find_zeros, is_associative,
                    is_right_self_distributive, satisfies_abbc)

DEFAULT_MAX_COLUMNS = 4096

Tup = tuple


class Theory(Enum):
    """The six boundary-operator conventions and their eligibility axioms."""

    LBO = "lbo"
    LBO_NC = "lbo-nc"
    GROUP = "group"
    HOCHSCHILD = "hochschild"
    ONE_TERM = "one-term"
    RACK = "rack"

    @property
    def label(self) -> str:
        return self.value

    def eligible(self, t: MulTable) -> bool:
        if self in (Theory.LBO, Theory.LBO_NC):
            return is_associative(t) and satisfies_abbc(t)
        if self in (Theory.GROUP, Theory.HOCHSCHILD):
            return is_associative(t)
        return is_right_self_distributive(t)

    def eligibility_description(self) -> str:
        if self in (Theory.LBO, Theory.LBO_NC):
            return "associative and a*b*b*c = a*b*c"
        if self in (Theory.GROUP, Theory.HOCHSCHILD):
            return "associative"
        return "right self-distributive"

    def require_eligible(self, t: MulTable, force: bool = False) -> None:
        if force:
            return
        if not self.eligible(t):
            raise IneligibleTable(
                "table %s is not %s (required by theory %s)"
                % (t.brace(), self.eligibility_description(), self.label)
            )

    def face_range(self, degree: int) -> range:
        # rack faces are indexed 1..n, the rest 0..n
        if self is Theory.RACK:
            return range(1, degree + 1)
        return range(0, degree + 1)


THEORIES = tuple(Theory)


def theory_from_label(label: str) -> Theory:
    for th in Theory:
        if th.value == label:
            return th
    raise KeyError(label)


# ---------------------------------------------------------------------------
# chains

class Chain:
    """Formal integer combination of equal-length tuples.

    Zero coefficients are never stored.  Addition cancels term-wise.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms=None):
        self.degree = degree
        self.terms: dict[tuple, int] = {}
        if terms:
            for tup, coef in (terms.items() if isinstance(terms, dict) else terms):
                if len(tup) != degree + 1:
                    raise DegreeMismatch(
                        "tuple %r has length %d, expected %d"
                        % (tup, len(tup), degree + 1)
                    )
                if coef:
                    new = self.terms.get(tup, 0) + coef
                    if new:
                        self.terms[tup] = new
                    else:
                        self.terms.pop(tup, None)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, Chain) and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch("cannot add chains of degrees %d and %d"
                                 % (self.degree, other.degree))
        out = dict(self.terms)
        for tup, coef in other.terms.items():
            new = out.get(tup, 0) + coef
            if new:
                out[tup] = new
            else:
                out.pop(tup, None)
        c = Chain(self.degree)
        c.terms = out
        return c

    def __neg__(self):
        c = Chain(self.degree)
        c.terms = {tup: -coef for tup, coef in self.terms.items()}
        return c

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        c = Chain(self.degree)
        if k:
            c.terms = {tup: k * coef for tup, coef in self.terms.items()}
        return c

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for tup in sorted(self.terms):
            coef = self.terms[tup]
            sign = "+" if coef > 0 else "-"
            mag = abs(coef)
            coef_s = "" if mag == 1 else "%d*" % mag
            bits.append("%s %s%s" % (sign, coef_s, "(%s)" % ",".join(map(str, tup))))
        text = " ".join(bits)
        return text[2:] if text.startswith("+ ") else text


# ---------------------------------------------------------------------------
# face maps

def _check_face_args(n: int, i: int, x, lo: int = 0) -> None:
    if n < 1:
        raise DegreeMismatch("face maps need degree >= 1")
    if len(x) != n + 1:
        raise DegreeMismatch("tuple %r has length %d, expected %d" % (x, len(x), n + 1))
    if not lo <= i <= n:
        raise DegreeMismatch("face index %d out of range %d..%d" % (i, lo, n))


def face_lbo(t: MulTable, n: int, i: int, x, force: bool = False) -> Tup:
    """Cyclic face map.  At degree 1 both end faces are the triple products
    d0 = x0*x1*x0 and d1 = x1*x0*x1; the general end rules below would
    collide there."""
    _check_face_args(n, i, x)
    Theory.LBO.require_eligible(t, force)
    m = t.rows
    if n == 1:
        x0, x1 = x
        if i == 0:
            return (m[m[x0][x1]][x0],)
        return (m[m[x1][x0]][x1],)
    if i == 0:
        return (m[x[0]][x[1]],) + x[2:n] + (m[x[n]][x[0]],)
    if i == n:
        return (m[x[n]][x[0]],) + x[1:n - 1] + (m[x[n - 1]][x[n]],)
    return x[:i - 1] + (m[x[i - 1]][x[i]], m[x[i]][x[i + 1]]) + x[i + 2:]


def face_lbo_nc(t: MulTable, n: int, i: int, x, force: bool = False) -> Tup:
    """Non-cyclic variant: the end faces drop the wrap-around product."""
    _check_face_args(n, i, x)
    Theory.LBO_NC.require_eligible(t, force)
    m = t.rows
    if n == 1:
        return (m[x[0]][x[1]],)
    if i == 0:
        return (m[x[0]][x[1]],) + x[2:]
    if i == n:
        return x[:n - 1] + (m[x[n - 1]][x[n]],)
    return x[:i - 1] + (m[x[i - 1]][x[i]], m[x[i]][x[i + 1]]) + x[i + 2:]


def _face_group(m, n, i, x) -> Tup:
    # bar-type faces: merge neighbours, final face drops the last entry
    if i == n:
        return x[:n]
    return x[:i] + (m[x[i]][x[i + 1]],) + x[i + 2:]


def _face_hochschild(m, n, i, x) -> Tup:
    if i == n:
        return (m[x[n]][x[0]],) + x[1:n]
    return x[:i] + (m[x[i]][x[i + 1]],) + x[i + 2:]


def _face_one_term(m, n, i, x) -> Tup:
    if i == 0:
        return x[1:]
    xi = x[i]
    return tuple(m[x[k]][xi] for k in range(i)) + x[i + 1:]


def _face_rack_pair(m, n, i, x):
    xi = x[i]
    deleted = x[:i] + x[i + 1:]
    multiplied = tuple(m[x[k]][xi] for k in range(i)) + x[i + 1:]
    return deleted, multiplied


def face_terms(theory: Theory, t: MulTable, n: int, i: int, x,
               force: bool = False):
    """Signed monomials of the i-th face applied to basis tuple x.

    Single-term theories return one (+1, tuple) pair; the two-term rack face
    returns the deletion minus the multiplied deletion.
    """
    theory.require_eligible(t, force)
    _check_face_args(n, i, x, lo=1 if theory is Theory.RACK else 0)
    m = t.rows
    if theory is Theory.LBO:
        return ((1, face_lbo(t, n, i, x, force=True)),)
    if theory is Theory.LBO_NC:
        return ((1, face_lbo_nc(t, n, i, x, force=True)),)
    if theory is Theory.GROUP:
        return ((1, _face_group(m, n, i, x)),)
    if theory is Theory.HOCHSCHILD:
        return ((1, _face_hochschild(m, n, i, x)),)
    if theory is Theory.ONE_TERM:
        return ((1, _face_one_term(m, n, i, x)),)
    deleted, multiplied = _face_rack_pair(m, n, i, x)
    return ((1, deleted), (-1, multiplied))


def apply_face(theory: Theory, t: MulTable, i: int, chain: Chain,
               force: bool = False) -> Chain:
    """Linear extension of the i-th face map to chains."""
    n = chain.degree
    out = Chain(n - 1)
    acc = out.terms
    for tup, coef in chain.terms.items():
        for sign, img in face_terms(theory, t, n, i, tup, force=force):
            new = acc.get(img, 0) + sign * coef
            if new:
                acc[img] = new
            else:
                acc.pop(img, None)
    return out


def boundary_terms(theory: Theory, t: MulTable, x, force: bool = False):
    """All signed monomials of the boundary of x, before any cancellation,
    in definition order."""
    n = len(x) - 1
    out = []
    for i in theory.face_range(n):
        sign = -1 if i % 2 else 1
        for s, img in face_terms(theory, t, n, i, x, force=force):
            out.append((sign * s, img))
    return out


def boundary(theory: Theory, t: MulTable, x, force: bool = False) -> Chain:
    """Alternating sum of the face maps applied to basis tuple x."""
    n = len(x) - 1
    if n < 1:
        raise DegreeMismatch("boundary needs degree >= 1")
    return Chain(n - 1, boundary_terms(theory, t, x, force=force))


# ---------------------------------------------------------------------------
# matrices

def tuple_rank(x, order: int) -> int:
    r = 0
    for v in x:
        r = r * order + v
    return r


def all_tuples(order: int, length: int):
    return product(range(order), repeat=length)


def boundary_matrix(theory: Theory, t: MulTable, n: int,
                    max_columns: int = DEFAULT_MAX_COLUMNS,
                    force: bool = False) -> np.ndarray:
    """Matrix of the degree-n boundary in the lexicographic tuple bases.

    Columns are indexed by source tuples (degree n), rows by target tuples
    (degree n-1).  Degree 0 maps to the trivial module: a matrix with no
    rows.
    """
    theory.require_eligible(t, force)
    order = t.order
    cols = order ** (n + 1)
    if max_columns is not None and cols > max_columns:
        raise ResourceLimit(
            "boundary matrix would have %d columns (cap %d)" % (cols, max_columns)
        )
    if n == 0:
        return np.zeros((0, cols), dtype=np.int64)
    rows = order ** n
    mat = np.zeros((rows, cols), dtype=np.int64)
    for c, x in enumerate(all_tuples(order, n + 1)):
        for coef, img in boundary_terms(theory, t, x, force=True):
            mat[tuple_rank(img, order), c] += coef
    return mat


def export_matrix_triplets(mat: np.ndarray) -> str:
    """Plain-text triplet stream: header '% dims R C', then 'row col value'
    per nonzero entry in row-major order."""
    lines = ["% dims {} {}".format(mat.shape[0], mat.shape[1])]
    rr, cc = np.nonzero(mat)
    for r, c in zip(rr.tolist(), cc.tolist()):
        lines.append("%d %d %d" % (r, c, int(mat[r, c])))
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# degeneracies

def degeneracy(t: MulTable, e: int, j: int, x) -> Tup:
    """Degeneracy map: replace x_j by the pair (e, e); e must be a zero."""
    if e not in find_zeros(t):
        raise NotAZero("element %d is not a two-sided zero of %s" % (e, t.brace()))
    n = len(x) - 1
    if not 0 <= j <= n:
        raise DegreeMismatch("degeneracy index %d out of range 0..%d" % (j, n))
    return x[:j] + (e, e) + x[j + 1:]


def _apply_degeneracy(e: int, j: int, chain: Chain) -> Chain:
    out = Chain(chain.degree + 1)
    acc = out.terms
    for tup, coef in chain.terms.items():
        img = tup[:j] + (e, e) + tup[j + 1:]
        new = acc.get(img, 0) + coef
        if new:
            acc[img] = new
        else:
            acc.pop(img, None)
    return out


# ---------------------------------------------------------------------------
# verification

@dataclass
class VerificationReport:
    title: str
    checked: int = 0
    violations: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        status = "ok" if self.ok else "FAILED (%d violations)" % len(self.violations)
        lines = ["%s: %s (%d identities checked)" % (self.title, status, self.checked)]
        for v in self.violations[:20]:
            lines.append("  violation: %s" % (v,))
        if len(self.violations) > 20:
            lines.append("  ... %d more" % (len(self.violations) - 20))
        for n in self.notes:
            lines.append("  note: %s" % n)
        return "\n".join(lines)


def _face_index_arrays(theory, t, degree, force):
    """Each single-term face at this degree as a rank->rank gather array."""
    order = t.order
    arrays = {}
    for i in theory.face_range(degree):
        img = np.empty(order ** (degree + 1), dtype=np.int64)
        for c, x in enumerate(all_tuples(order, degree + 1)):
            (_, y), = face_terms(theory, t, degree, i, x, force=force)
            img[c] = tuple_rank(y, order)
        arrays[i] = img
    return arrays


def _face_matrices(theory, t, degree, force):
    """Dense face matrices, for theories whose faces have several terms."""
    order = t.order
    rows, cols = order ** degree, order ** (degree + 1)
    mats = {}
    for i in theory.face_range(degree):
        m = np.zeros((rows, cols), dtype=np.int64)
        for c, x in enumerate(all_tuples(order, degree + 1)):
            for coef, y in face_terms(theory, t, degree, i, x, force=force):
                m[tuple_rank(y, order), c] += coef
        mats[i] = m
    return mats


def _unrank(r, order, length):
    out = [0] * length
    for k in range(length - 1, -1, -1):
        out[k] = r % order
        r //= order
    return tuple(out)


def verify_presimplicial(theory: Theory, t: MulTable, n_max: int,
                         force: bool = False) -> VerificationReport:
    """Check d_i(d_j(x)) == d_{j-1}(d_i(x)) for all i < j on every basis
    tuple of degree 2..n_max."""
    theory.require_eligible(t, force)
    report = VerificationReport("pre-simplicial identities [%s]" % theory.label)
    order = t.order
    single = theory is not Theory.RACK
    for m in range(2, n_max + 1):
        if single:
            hi = _face_index_arrays(theory, t, m, force=True)
            lo = _face_index_arrays(theory, t, m - 1, force=True)
        else:
            hi = _face_matrices(theory, t, m, force=True)
            lo = _face_matrices(theory, t, m - 1, force=True)
        for j in theory.face_range(m):
            for i in theory.face_range(m - 1):
                if not i < j:
                    continue
                if single:
                    left = lo[i][hi[j]]
                    right = lo[j - 1][hi[i]]
                    bad = np.nonzero(left != right)[0]
                else:
                    left = lo[i] @ hi[j]
                    right = lo[j - 1] @ hi[i]
                    bad = np.nonzero((left != right).any(axis=0))[0]
                report.checked += order ** (m + 1)
                for c in bad.tolist():
                    report.violations.append(
                        (i, j, _unrank(c, order, m + 1),
                         "d_%d(d_%d(x)) != d_%d(d_%d(x))" % (i, j, j - 1, i))
                    )
    return report


def verify_boundary_squared(theory: Theory, t: MulTable, n_max: int,
                            max_columns: int = DEFAULT_MAX_COLUMNS,
                            force: bool = False) -> VerificationReport:
    """Check that consecutive boundary matrices multiply to zero."""
    theory.require_eligible(t, force)
    report = VerificationReport("boundary squared is zero [%s]" % theory.label)
    prev = boundary_matrix(theory, t, 0, max_columns, force=True)
    for n in range(0, n_max + 1):
        nxt = boundary_matrix(theory, t, n + 1, max_columns, force=True)
        prod_ = prev @ nxt
        report.checked += prod_.size
        if prod_.size and np.any(prod_):
            rr, cc = np.nonzero(prod_)
            for r, c in list(zip(rr.tolist(), cc.tolist()))[:50]:
                report.violations.append(
                    (n, r, c, int(prod_[r, c]),
                     "(boundary_%d . boundary_%d) nonzero" % (n, n + 1))
                )
        prev = nxt
    return report


def verify_very_weak_simplicial(t: MulTable, e: int, n_max: int) -> VerificationReport:
    """Exhaustively check degeneracy axioms A2 and A3 against the cyclic
    face maps, and record (as a note, never a failure) whether the identity
    axiom d_j s_j = d_{j+1} s_j = Id happens to hold."""
    if e not in find_zeros(t):
        raise NotAZero("element %d is not a two-sided zero of %s" % (e, t.brace()))
    Theory.LBO.require_eligible(t)
    report = VerificationReport("very weak simplicial axioms (zero element %d)" % e)
    order = t.order

    def chain_of(x):
        return Chain(len(x) - 1, [(x, 1)])

    def s(j, chain):
        return _apply_degeneracy(e, j, chain)

    def d(i, chain):
        return apply_face(Theory.LBO, t, i, chain)

    # A2: s_i s_j == s_{j+1} s_i  for i <= j
    for m in range(0, n_max + 1):
        for x in all_tuples(order, m + 1):
            cx = chain_of(x)
            for j in range(0, m + 1):
                sj = s(j, cx)
                for i in range(0, j + 1):
                    report.checked += 1
                    if s(i, sj) != s(j + 1, s(i, cx)):
                        report.violations.append(("A2", i, j, x))
    # A3 first branch: d_i s_j == s_{j-1} d_i  for i < j
    for m in range(1, n_max + 1):
        for x in all_tuples(order, m + 1):
            cx = chain_of(x)
            for j in range(0, m + 1):
                sj = s(j, cx)
                for i in range(0, j):
                    report.checked += 1
                    if d(i, sj) != s(j - 1, d(i, cx)):
                        report.violations.append(("A3(i<j)", i, j, x))
    # A3 second branch: d_i s_j == s_j d_{i-1}  for i > j+1
    for m in range(1, n_max + 1):
        for x in all_tuples(order, m + 1):
            cx = chain_of(x)
            for j in range(0, m):
                sj = s(j, cx)
                for i in range(j + 2, m + 2):
                    report.checked += 1
                    if d(i, sj) != s(j, d(i - 1, cx)):
                        report.violations.append(("A3(i>j+1)", i, j, x))
    # informational: the simplicial identity axiom
    axiom4_failures = 0
    axiom4_checked = 0
    for m in range(0, n_max + 1):
        for x in all_tuples(order, m + 1):
            cx = chain_of(x)
            for j in range(0, m + 1):
                sj = s(j, cx)
                axiom4_checked += 2
                if d(j, sj) != cx:
                    axiom4_failures += 1
                if d(j + 1, sj) != cx:
                    axiom4_failures += 1
    if axiom4_failures:
        report.notes.append(
            "identity axiom d_j s_j = d_{j+1} s_j = Id fails for %d of %d composites "
            "(expected: this structure is only very weakly simplicial)"
            % (axiom4_failures, axiom4_checked)
        )
    else:
        report.notes.append("identity axiom d_j s_j = d_{j+1} s_j = Id holds here")
    return report
