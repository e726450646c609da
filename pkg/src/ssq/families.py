"""Closed-form h-vectors for the known Gorenstein families."""

from __future__ import annotations

from math import comb

from .core import Diagram, Monomial, closure, v2k
from .hilbert import HVector


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def narayana(k: int, i: int) -> int:
    """Dyck paths of semilength ``k`` with ``i`` peaks."""
    if k < 1:
        raise ValueError(f"narayana needs k >= 1, got {k}")
    if not 1 <= i <= k:
        return 0
    q, r = divmod(binom(k, i) * binom(k, i - 1), k)
    assert r == 0
    return q


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def hvec_v2k(k: int) -> HVector:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return HVector([binom(k, i) ** 2 for i in range(k + 1)])


def hvec_veronese(n: int) -> HVector:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return HVector([binom(n, 2 * i) for i in range(n // 2 + 1)])


def square_increment(k: int, j: int) -> HVector:
    """New paths gained going from ``V_{2k} + st(x_{j-1}^2)`` to ``V_{2k} + st(x_j^2)``."""
    out = [0] * (k + 1)
    for i1 in range(0, j - k - 1):
        left = binom(2 * (j - k - 1), 2 * i1 + 1)
        for i2 in range(1, 2 * k - j + 2):
            out[i1 + i2] += left * narayana(2 * k - j + 1, i2)
    return HVector(out)


def hvec_v2k_square(k: int, j: int) -> HVector:
    """h-vector of ``V_{2k} + st(x_j^2)``, built up one column at a time from j = k+1."""
    if k < 1 or not k + 1 <= j <= 2 * k:
        raise ValueError(f"need k >= 1 and k+1 <= j <= 2k, got k={k}, j={j}")
    h = hvec_v2k(k)
    for step in range(k + 2, j + 1):
        h = h + square_increment(k, step)
    return h


def hvec_hook(k: int) -> HVector:
    """h-vector of ``st(x_2 x_{2k}, x_{2k-1}^2)``."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    return HVector([binom(2 * k - 1, 2 * i) + binom(2 * k - 2, 2 * i - 2) for i in range(k + 1)])


def hvec_onebox(k: int, a: int) -> HVector:
    """h-vector of ``V_{2k} + st(x_a x_{2k+3-a})`` for ``3 <= a <= k+1``."""
    if k < 2 or not 3 <= a <= k + 1:
        raise ValueError(f"need k >= 2 and 3 <= a <= k+1, got k={k}, a={a}")
    inner = [binom(k - a + 1, j) ** 2 for j in range(k - a + 2)]
    outer = [narayana(a - 2, m) for m in range(a - 1)]
    out = list(hvec_v2k(k)) + [0] * (len(inner) + len(outer))
    for j, x in enumerate(inner):
        for m, y in enumerate(outer):
            out[j + m] += x * y
    return HVector(out)


# diagrams the closed forms describe

def v2k_square_diagram(k: int, j: int) -> Diagram:
    return v2k(k).union(closure([(j, j)]))


def hook_diagram(k: int) -> Diagram:
    return closure([(2, 2 * k), (2 * k - 1, 2 * k - 1)])


def onebox_diagram(k: int, a: int) -> Diagram:
    base = v2k(k)
    m = Monomial(a, 2 * k + 3 - a)
    d = base.union(closure([m]))
    # st(m) adds exactly the one box m on top of V_2k
    assert d.box_set() == base.box_set() | {m}
    return d


FAMILIES = ("v2k", "veronese", "v2k-square", "hook", "onebox")


def family_hvector(name: str, k: int | None = None, n: int | None = None,
                   j: int | None = None, a: int | None = None) -> tuple[HVector, int]:
    """Numerator and denominator power for a named family."""
    if name == "v2k":
        return hvec_v2k(_need(k, "k")), 2 * k
    if name == "veronese":
        if n is None and k is not None:
            n = 2 * k
        return hvec_veronese(_need(n, "n")), n
    if name == "v2k-square":
        return hvec_v2k_square(_need(k, "k"), _need(j, "j")), 2 * k
    if name == "hook":
        return hvec_hook(_need(k, "k")), 2 * k
    if name == "onebox":
        return hvec_onebox(_need(k, "k"), _need(a, "a")), 2 * k
    raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def family_diagram(name: str, k: int | None = None, n: int | None = None,
                   j: int | None = None, a: int | None = None) -> Diagram:
    if name == "v2k":
        return v2k(_need(k, "k"))
    if name == "veronese":
        if n is None and k is not None:
            n = 2 * k
        return closure([(_need(n, "n"),) * 2])
    if name == "v2k-square":
        return v2k_square_diagram(_need(k, "k"), _need(j, "j"))
    if name == "hook":
        return hook_diagram(_need(k, "k"))
    if name == "onebox":
        return onebox_diagram(_need(k, "k"), _need(a, "a"))
    raise ValueError(f"unknown family {name!r}")


def _need(value, name):
    if value is None:
        raise ValueError(f"missing parameter --{name}")
    return value
