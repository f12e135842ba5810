"""Exact integer linear algebra: Smith normal form, ranks, and assembly of
homology groups from consecutive boundary matrices.

Elimination runs on int64 numpy arrays with an overflow guard; if entries
ever threaten the guard bound the whole computation restarts on a
Python-integer (object dtype) copy, so arithmetic never silently wraps.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .chains import DEFAULT_MAX_COLUMNS, Theory, boundary_matrix
from .errors import ParseError, ResourceLimit
from .magma import MulTable

# per-step growth is at most quadratic, so int64 cannot wrap between guards
_GUARD = 1 << 31


class _Overflow(Exception):
    pass


def _swap_rows(a, i, j):
    if i != j:
        a[[i, j], :] = a[[j, i], :]


def _swap_cols(a, i, j):
    if i != j:
        a[:, [i, j]] = a[:, [j, i]]


def _diagonalize(a: np.ndarray, guarded: bool) -> list[int]:
    """Reduce to diagonal form by unimodular row/column operations.

    Pivots on the smallest nonzero magnitude (ties: lowest row, then
    column).  Returns the nonzero diagonal entries in elimination order;
    divisibility is fixed up separately.
    """
    rows, cols = a.shape
    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        sub = a[t:, t:]
        absz = np.abs(sub)
        maxabs = absz.max(initial=0)
        if maxabs == 0:
            break
        if guarded and maxabs > _GUARD:
            raise _Overflow
        nzr, nzc = np.nonzero(sub)
        k = int(np.argmin(absz[nzr, nzc]))  # row-major order breaks ties
        _swap_rows(a, t, int(nzr[k]) + t)
        _swap_cols(a, t, int(nzc[k]) + t)
        while True:
            if a[t, t] < 0:
                a[t, :] = -a[t, :]
            p = a[t, t]
            col = a[t + 1:, t]
            idx = np.nonzero(col)[0]
            if idx.size:
                q = col[idx] // p
                a[t + 1 + idx, :] -= q[:, None] * a[t, :]
                col = a[t + 1:, t]
                idx = np.nonzero(col)[0]
                if idx.size:
                    # some remainder is smaller than the pivot: promote it
                    k = int(np.argmin(np.abs(col[idx])))
                    _swap_rows(a, t, int(idx[k]) + t + 1)
                    if guarded and np.abs(a[t:, t:]).max(initial=0) > _GUARD:
                        raise _Overflow
                    continue
            row = a[t, t + 1:]
            idx = np.nonzero(row)[0]
            if idx.size:
                q = row[idx] // p
                a[:, t + 1 + idx] -= a[:, t][:, None] * q[None, :]
                row = a[t, t + 1:]
                idx = np.nonzero(row)[0]
                if idx.size:
                    k = int(np.argmin(np.abs(row[idx])))
                    _swap_cols(a, t, int(idx[k]) + t + 1)
                    if guarded and np.abs(a[t:, t:]).max(initial=0) > _GUARD:
                        raise _Overflow
                    continue
            break
        diag.append(int(a[t, t]))
        t += 1
    return diag


def _divisibility_chain(diag: list[int]) -> list[int]:
    d = [abs(v) for v in diag]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            if d[j] % d[i]:
                g = gcd(d[i], d[j])
                d[i], d[j] = g, d[i] // g * d[j]
    return d


def smith_normal_form(mat) -> tuple[list[int], int]:
    """Invariant factors (positive, each dividing the next) and the rank."""
    a = np.asarray(mat)
    if a.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    if a.size == 0:
        return [], 0
    try:
        work = np.array(a, dtype=np.int64)
        if np.abs(work).max(initial=0) > _GUARD:
            raise _Overflow
        diag = _diagonalize(work, guarded=True)
    except (_Overflow, OverflowError):
        work = np.array([[int(v) for v in row] for row in a.tolist()], dtype=object)
        diag = _diagonalize(work, guarded=False)
    factors = _divisibility_chain(diag)
    return factors, len(factors)


def rank_rational(mat) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination.

    Independent of the Smith normal form path; exact Python integers.
    """
    a = [[int(v) for v in row] for row in np.asarray(mat).tolist()]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    rank = 0
    prev = 1
    for c in range(cols):
        pivot_row = next((r for r in range(rank, rows) if a[r][c]), None)
        if pivot_row is None:
            continue
        a[rank], a[pivot_row] = a[pivot_row], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            arc = a[r][c]
            ar, apiv = a[r], a[rank]
            for j in range(c, cols):
                num = ar[j] * p - arc * apiv[j]
                q, rem = divmod(num, prev)
                if rem:
                    raise RuntimeError("fraction-free elimination lost exactness")
                ar[j] = q
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


# ---------------------------------------------------------------------------
# homology groups

_GROUP_RE = re.compile(r"^Z(?:\^(\d+))?$|^Z/(\d+)$|^0$")


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group: free rank plus invariant factors."""

    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError("negative betti rank")
        for prev, nxt in zip(self.torsion, self.torsion[1:]):
            if nxt % prev:
                raise ValueError("torsion coefficients must form a divisibility chain")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion coefficients must exceed 1")

    @property
    def trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        if self.trivial:
            return "0"
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append("Z^%d" % self.betti)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " (+) ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "HomologyGroup":
        text = text.strip()
        if text == "0":
            return cls(0)
        betti = 0
        torsion = []
        for part in text.split("(+)"):
            part = part.strip()
            m = _GROUP_RE.match(part)
            if not m:
                raise ParseError("cannot parse group %r" % part)
            if part.startswith("Z/"):
                torsion.append(int(m.group(2)))
            else:
                betti += int(m.group(1)) if m.group(1) else 1
        return cls(betti, tuple(torsion))


@lru_cache(maxsize=None)
def _boundary_snf(theory: Theory, t: MulTable, n: int, max_columns,
                  force: bool) -> tuple[tuple[int, ...], int]:
    mat = boundary_matrix(theory, t, n, max_columns, force=force)
    factors, rank = smith_normal_form(mat)
    return tuple(factors), rank


def homology(theory: Theory, t: MulTable, n: int,
             max_columns: int = DEFAULT_MAX_COLUMNS,
             force: bool = False) -> HomologyGroup:
    """Degree-n homology: Z^betti plus the invariant factors (>1) of the
    incoming boundary."""
    theory.require_eligible(t, force)
    if n < 0:
        raise ValueError("degree must be nonnegative")
    dim = t.order ** (n + 1)
    _, rank_in = _boundary_snf(theory, t, n, max_columns, force)
    factors_out, rank_out = _boundary_snf(theory, t, n + 1, max_columns, force)
    betti = dim - rank_in - rank_out
    if betti < 0:
        raise RuntimeError("rank bookkeeping produced negative betti")
    return HomologyGroup(betti, tuple(d for d in factors_out if d > 1))


def homology_range(theory: Theory, t: MulTable, n_max: int,
                   max_columns: int = DEFAULT_MAX_COLUMNS,
                   force: bool = False) -> list[HomologyGroup]:
    """Homology in degrees 0..n_max; boundary factorizations are shared
    between adjacent degrees through the cache."""
    return [homology(theory, t, n, max_columns, force) for n in range(n_max + 1)]


def torsion_findings(labelled_groups) -> list[tuple[str, tuple[int, ...]]]:
    """Scan (label, HomologyGroup) pairs for any torsion; empty means all
    groups are free."""
    return [(label, g.torsion) for label, g in labelled_groups if g.torsion]


def clear_cache() -> None:
    _boundary_snf.cache_clear()
