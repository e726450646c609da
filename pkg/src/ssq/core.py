"""Quadratic monomials and strongly stable sets as shifted Ferrers diagrams.

A box ``(i, j)`` with ``i <= j`` stands for the monomial ``x_i x_j``. A strongly
stable set of such boxes is closed up and to the left, so it is determined by
the last column ``c_i`` of every row. Indices are 1-based throughout.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class ParseError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1:
            raise ValueError(f"variable indices must be >= 1, got ({self.i}, {self.j})")
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def __iter__(self):
        yield self.i
        yield self.j

    def __str__(self):
        if self.i == self.j:
            return f"x{self.i}^2"
        return f"x{self.i}x{self.j}"

    @property
    def is_square(self) -> bool:
        return self.i == self.j


def as_monomial(m) -> Monomial:
    return m if isinstance(m, Monomial) else Monomial(*m)


_PAIR = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def parse_generators(text: str) -> list[Monomial]:
    """Parse ``"3,4;2,6"`` into canonical monomials, dropping duplicates.

    Order of first appearance is kept.
    """
    if text is None or not text.strip():
        raise ParseError("empty generator string")
    out: list[Monomial] = []
    seen = set()
    for chunk in text.split(";"):
        match = _PAIR.match(chunk)
        if match is None:
            raise ParseError(f"malformed generator {chunk.strip()!r}; expected 'i,j'")
        a, b = int(match.group(1)), int(match.group(2))
        if a < 1 or b < 1:
            raise ParseError(f"indices must be >= 1, got {a},{b}")
        m = Monomial(a, b)
        if m not in seen:
            seen.add(m)
            out.append(m)
    return out


def format_generators(gens: Iterable) -> str:
    """Inverse of :func:`parse_generators`."""
    return ";".join(f"{m.i},{m.j}" for m in map(as_monomial, gens))


@dataclass(frozen=True, order=True)
class Diagram:
    """Strongly stable set of quadratic monomials, stored by row bounds.

    ``bounds[i-1]`` is ``c_i``: row ``i`` holds columns ``i..c_i``, and
    ``c_i == i - 1`` marks an empty row. ``c_1 == n`` always.
    """

    bounds: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(c) for c in self.bounds)
        object.__setattr__(self, "bounds", b)
        n = len(b)
        if n == 0:
            raise ValueError("empty diagram")
        if b[0] != n:
            raise ValueError(f"row 1 must span all {n} columns, got c_1={b[0]}")
        empty = False
        prev = n
        for i, c in enumerate(b, start=1):
            if c == i - 1:
                empty = True
                continue
            if empty:
                raise ValueError(f"row {i} is nonempty below an empty row")
            if c < i or c > prev:
                raise ValueError(f"invalid bound c_{i}={c} (previous {prev})")
            prev = c

    @property
    def n(self) -> int:
        return len(self.bounds)

    @property
    def rows(self) -> int:
        """Number of nonempty rows."""
        return sum(1 for i, c in enumerate(self.bounds, start=1) if c >= i)

    def bound(self, i: int) -> int:
        if 1 <= i <= self.n:
            return self.bounds[i - 1]
        return i - 1

    def __contains__(self, box) -> bool:
        a, b = as_monomial(box)
        return b <= self.bound(a)

    def boxes(self) -> Iterator[Monomial]:
        for i, c in enumerate(self.bounds, start=1):
            for j in range(i, c + 1):
                yield Monomial(i, j)

    def box_set(self) -> frozenset[Monomial]:
        return frozenset(self.boxes())

    def __len__(self) -> int:
        return sum(max(0, c - i + 1) for i, c in enumerate(self.bounds, start=1))

    def issubset(self, other: "Diagram") -> bool:
        return all(self.bound(i) <= other.bound(i) or self.bound(i) < i
                   for i in range(1, self.n + 1))

    def union(self, other: "Diagram") -> "Diagram":
        n = max(self.n, other.n)
        bounds = []
        for i in range(1, n + 1):
            c = max(self.bound(i), other.bound(i))
            bounds.append(c if c >= i else i - 1)
        bounds[0] = n
        return Diagram(tuple(bounds))

    def with_row1(self, n: int) -> "Diagram":
        """Same rows below row 1, with row 1 stretched or trimmed to ``n`` columns."""
        lower = self.bound(2) if self.n >= 2 else 1
        if n < max(lower, 1):
            raise ValueError(f"row 1 cannot be shorter than row 2 (c_2={lower})")
        bounds = [n] + [self.bound(i) for i in range(2, n + 1)]
        return Diagram(tuple(bounds))

    def __str__(self):
        return render_ascii(self)


def closure(gens: Iterable) -> Diagram:
    """Smallest strongly stable set containing ``gens``.

    Box ``(a, b)`` is in the closure iff some generator ``(i, j)`` has
    ``a <= i`` and ``b <= j``.
    """
    gens = [as_monomial(m) for m in gens]
    if not gens:
        raise ValueError("closure of an empty generator list")
    n = max(m.j for m in gens)
    bounds = []
    for a in range(1, n + 1):
        c = max((m.j for m in gens if m.i >= a), default=a - 1)
        bounds.append(c if c >= a else a - 1)
    return Diagram(tuple(bounds))


def is_strongly_stable(boxes: Iterable) -> bool:
    box_set = {as_monomial(m) for m in boxes}
    for m in box_set:
        if m.i >= 2 and Monomial(m.i - 1, m.j) not in box_set:
            return False
        if m.j >= 2 and Monomial(m.i, m.j - 1) not in box_set:
            return False
    return True


def from_boxes(boxes: Iterable) -> Diagram:
    box_set = {as_monomial(m) for m in boxes}
    if not is_strongly_stable(box_set):
        raise ValueError("box set is not strongly stable")
    return closure(box_set)


def borel_generators(d: Diagram) -> list[Monomial]:
    """Maximal boxes of ``d`` under the componentwise order, sorted by row."""
    out = []
    for i in range(1, d.n + 1):
        c = d.bound(i)
        if c < i:
            break
        below = d.bound(i + 1)
        if below <= i or below < c:
            out.append(Monomial(i, c))
    return out


def normalize(d: Diagram) -> Diagram:
    """Trim row 1 to the length of row 2 (to one box if row 2 is empty)."""
    return d.with_row1(max(d.bound(2) if d.n >= 2 else 1, 1))


def has_free_variable(d: Diagram) -> bool:
    return normalize(d).n != d.n


def v2k(k: int) -> Diagram:
    """``V_{2k} = st(x_{k+1}^2, x_k x_{k+2}, ..., x_2 x_{2k})``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return closure(Monomial(i, 2 * k + 2 - i) for i in range(2, k + 2))


def veronese(n: int) -> Diagram:
    """Full staircase ``st(x_n^2)``."""
    return closure([(n, n)])


def diagonal_band(d: Diagram, s: int) -> frozenset[Monomial]:
    """Boxes ``(a, b)`` of ``d`` with ``a + b == s``."""
    return frozenset(
        Monomial(a, s - a) for a in range(1, s // 2 + 1) if (a, s - a) in d
    )


def render_ascii(d: Diagram, fill: str = "[]", blank: str = "  ") -> str:
    lines = []
    for i, c in enumerate(d.bounds, start=1):
        if c < i:
            break
        lines.append(blank * (i - 1) + fill * (c - i + 1))
    return "\n".join(lines)


def union_all(diagrams: Sequence[Diagram]) -> Diagram:
    it = iter(diagrams)
    out = next(it)
    for d in it:
        out = out.union(d)
    return out
