"""h-vectors and Hilbert series of K[W] for a strongly stable quadratic W.

Three independent routes to the numerator:

* :func:`hvector_dp` counts maximal NE-paths by number of maximal N-parts.
* :func:`antichain_counts` counts antichains in the diagram minus row 1.
* :func:`enumerate_paths` lists the paths explicitly.

:func:`direct_hf` computes the Hilbert function straight from the semigroup
and is the oracle for the series expansion.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .core import Diagram, Monomial

DEFAULT_WORK_CAP = 10**7


class InconsistencyError(RuntimeError):
    """Two independent computations disagreed. Always a bug."""


class WorkCapExceeded(RuntimeError):
    pass


def work_cap(cap: int | None = None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get("SSQ_WORK_CAP")
    return int(env) if env else DEFAULT_WORK_CAP


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _add(p: list[int], q: Sequence[int], shift: int = 0) -> None:
    """In place ``p += t^shift * q``."""
    need = len(q) + shift
    if len(p) < need:
        p.extend([0] * (need - len(p)))
    for idx, c in enumerate(q):
        if c:
            p[idx + shift] += c


class HVector(tuple):
    """Exact integer numerator ``(h_0, ..., h_k)`` with trailing zeros removed."""

    def __new__(cls, entries=(1,)):
        entries = _trim([int(e) for e in entries]) if len(entries) else (0,)
        return super().__new__(cls, entries)

    @property
    def degree(self) -> int:
        return len(self) - 1

    def is_palindrome(self) -> bool:
        return tuple(self) == tuple(reversed(self))

    def __add__(self, other):
        out = list(self)
        _add(out, other)
        return HVector(out)

    def __repr__(self):
        return f"HVector({list(self)})"

    def polynomial(self, var: str = "t") -> str:
        terms = []
        for i, c in enumerate(self):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                power = var if i == 1 else f"{var}^{i}"
                terms.append(f"{coef}{power}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class HilbertSeries:
    numerator: HVector
    denom_power: int

    def __str__(self):
        return f"({self.numerator.polynomial()})/(1-t)^{self.denom_power}"

    def expand(self, upto: int) -> list[int]:
        return expand(self, upto)


@dataclass(frozen=True)
class NEPath:
    """Maximal NE-path, stored as its sequence of boxes."""

    boxes: tuple[Monomial, ...]

    @property
    def start(self) -> Monomial:
        return self.boxes[0]

    @property
    def steps(self) -> str:
        out = []
        for p, q in zip(self.boxes, self.boxes[1:]):
            out.append("N" if q.i == p.i - 1 else "E")
        return "".join(out)

    @property
    def n_parts(self) -> int:
        """Number of maximal runs of N steps."""
        s = self.steps
        return sum(1 for idx, ch in enumerate(s) if ch == "N" and (idx == 0 or s[idx - 1] != "N"))

    @property
    def corners(self) -> tuple[Monomial, ...]:
        s = self.steps
        return tuple(self.boxes[idx] for idx, ch in enumerate(s)
                     if ch == "N" and (idx == 0 or s[idx - 1] != "N"))

    def __str__(self):
        return "-".join(str(m) for m in self.boxes)


def hvector_dp(d: Diagram) -> HVector:
    """Count maximal NE-paths by number of maximal N-parts.

    Boxes are swept column by column, bottom row first. Each box keeps two
    polynomials in t: paths that are not inside an N-run (they started here or
    just made an E step) and paths that just made an N step. Stepping north
    out of the first kind opens a new N-part and picks up a factor t.
    """
    n = d.n
    free: dict[tuple[int, int], list[int]] = {}
    north: dict[tuple[int, int], list[int]] = {}
    for b in range(1, n + 1):
        last_row = min(b, _last_row_reaching(d, b))
        for a in range(last_row, 0, -1):
            f: list[int] = [1] if a == b else [0]
            nn: list[int] = [0]
            left = (a, b - 1)
            if left in free:
                _add(f, free[left])
                _add(f, north[left])
            below = (a + 1, b)
            if below in free:
                _add(nn, free[below], shift=1)
                _add(nn, north[below])
            free[(a, b)] = f
            north[(a, b)] = nn
    total: list[int] = []
    _add(total, free[(1, n)])
    _add(total, north[(1, n)])
    return HVector(total)


def _last_row_reaching(d: Diagram, col: int) -> int:
    """Lowest row whose bound reaches ``col``."""
    r = 0
    for i, c in enumerate(d.bounds, start=1):
        if c >= col and c >= i:
            r = i
        elif c < i:
            break
    return r


def path_count(d: Diagram) -> int:
    return sum(hvector_dp(d))


def antichain_counts(d: Diagram) -> HVector:
    """Antichains of each size in the diagram with row 1 removed.

    In a shifted diagram a set of boxes is an antichain iff its rows are
    distinct and its columns strictly decrease as the row index grows, so
    the count is a DP over rows carrying, per column, the antichains whose
    lowest box sits in that column.
    """
    n = d.n
    # ending[c] = polynomial counting antichains whose bottom box is in column c
    ending: dict[int, list[int]] = {}
    total: list[int] = [1]
    for row in range(2, n + 1):
        c_row = d.bound(row)
        if c_row < row:
            break
        new: dict[int, list[int]] = {}
        for col in range(row, c_row + 1):
            p = [0, 1]
            for prev_col, q in ending.items():
                if prev_col > col:
                    _add(p, q, shift=1)
            new[col] = p
        for col, p in new.items():
            _add(total, p)
            if col in ending:
                _add(ending[col], p)
            else:
                ending[col] = p
    return HVector(total)


def enumerate_paths(d: Diagram, cap: int | None = None) -> list[NEPath]:
    """All maximal NE-paths, by start row then step word with N < E."""
    limit = work_cap(cap)
    predicted = path_count(d)
    if predicted > limit:
        raise WorkCapExceeded(f"{predicted} paths exceed the cap of {limit}")
    n = d.n
    out: list[NEPath] = []

    def walk(a: int, b: int, trail: list[Monomial]) -> Iterator[tuple[Monomial, ...]]:
        if (a, b) == (1, n):
            yield tuple(trail)
            return
        if a > 1:
            trail.append(Monomial(a - 1, b))
            yield from walk(a - 1, b, trail)
            trail.pop()
        if b < n and (a, b + 1) in d:
            trail.append(Monomial(a, b + 1))
            yield from walk(a, b + 1, trail)
            trail.pop()

    for i in range(1, n + 1):
        if (i, i) not in d:
            break
        for boxes in walk(i, i, [Monomial(i, i)]):
            out.append(NEPath(boxes))
    return out


def path_histogram(paths: Sequence[NEPath]) -> HVector:
    counts: list[int] = [0]
    for p in paths:
        k = p.n_parts
        if len(counts) <= k:
            counts.extend([0] * (k + 1 - len(counts)))
        counts[k] += 1
    return HVector(counts)


def hilbert_series(d: Diagram) -> HilbertSeries:
    h = hvector_dp(d)
    other = antichain_counts(d)
    if h != other:
        raise InconsistencyError(
            f"path DP gives {list(h)} but antichain count gives {list(other)} for {d.bounds}"
        )
    return HilbertSeries(h, d.n)


def expand(s: HilbertSeries, upto: int) -> list[int]:
    """Coefficients of t^0..t^upto of h(t)/(1-t)^n."""
    n = s.denom_power
    out = []
    for i in range(upto + 1):
        total = 0
        for j, h in enumerate(s.numerator):
            if j > i:
                break
            if n == 0:
                total += h if j == i else 0
            else:
                total += h * comb(i - j + n - 1, n - 1)
        out.append(total)
    return out


def direct_hf(d: Diagram, i: int, cap: int | None = None) -> int:
    """Number of distinct monomials that are products of ``i`` boxes of ``d``.

    Exponent vectors are packed into one int, ``2i + 1`` values per variable,
    so each sum-set step is plain integer addition.
    """
    if i == 0:
        return 1
    limit = work_cap(cap)
    n = d.n
    width = (2 * i + 1).bit_length()
    gens = set()
    for m in d.boxes():
        gens.add((1 << (width * (m.i - 1))) + (1 << (width * (m.j - 1))))
    current = {0}
    for _ in range(i):
        nxt = set()
        for v in current:
            for g in gens:
                nxt.add(v + g)
            if len(nxt) > limit:
                raise WorkCapExceeded(f"more than {limit} exponent vectors in degree {i}")
        current = nxt
    return len(current)
