"""Gorenstein test for K[W], done twice: h-vector symmetry and structure.

The structural test works on the normalized diagram (no free variable). It
requires ``n == 2k`` and ``V_{2k} <= W <= st(x_{2k}^2)``, then looks at the
Borel generators of ``W`` outside ``V_{2k}``. Each such ``x_i x_j`` must have
``i <= k+1 < j`` or ``i == j > k+1``, and for any two distinct generators the
parts of their closures on the anti-diagonal ``i + j == 2k + 2`` must be
disjoint.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .core import Diagram, Monomial, borel_generators, closure, diagonal_band, normalize, v2k, veronese
from .hilbert import HVector, InconsistencyError, hilbert_series, hvector_dp


def is_symmetric(h) -> bool:
    h = tuple(h)
    return h == h[::-1]


def necessary_check(d: Diagram, h: HVector | None = None) -> Optional[int]:
    """Return ``k`` if ``n == 2k`` and ``V_{2k} <= d <= st(x_{2k}^2)``, else None."""
    if h is None:
        h = hvector_dp(d)
    k = h.degree
    if k < 1 or d.n != 2 * k:
        return None
    if not v2k(k).issubset(d):
        return None
    # implied by n == 2k; kept as a guard
    assert d.issubset(veronese(2 * k))
    return k


def quick_check(d: Diagram, h: HVector | None = None) -> bool:
    """``h_0 == h_k`` and ``h_1 == h_{k-1}``."""
    if h is None:
        h = hvector_dp(d)
    k = h.degree
    if h[0] != h[k]:
        return False
    if k >= 1 and h[1] != h[k - 1]:
        return False
    return True


@dataclass
class StructuralEvidence:
    k: Optional[int]
    extra_generators: list[Monomial] = field(default_factory=list)
    verdict: bool = False
    condition: str = ""
    offending: list[Monomial] = field(default_factory=list)
    shared: list[Monomial] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "extra_generators": [[m.i, m.j] for m in self.extra_generators],
            "verdict": self.verdict,
            "condition": self.condition,
            "offending": [[m.i, m.j] for m in self.offending],
            "shared_diagonal_boxes": [[m.i, m.j] for m in self.shared],
        }


def extra_generators(d: Diagram, k: int) -> list[Monomial]:
    base = v2k(k)
    return [m for m in borel_generators(d) if m not in base]


def condition_one(m: Monomial, k: int) -> bool:
    return (m.i <= k + 1 < m.j) or (m.i == m.j > k + 1)


def classify_structural(d: Diagram, h: HVector | None = None) -> StructuralEvidence:
    """Structural verdict for a normalized diagram."""
    if h is None:
        h = hvector_dp(d)
    if d.n == 1:
        # K[x_1^2] is a polynomial ring
        return StructuralEvidence(k=0, verdict=True, condition="polynomial ring")
    k = necessary_check(d, h)
    if k is None:
        k_h = h.degree
        if d.n != 2 * k_h:
            why = f"necessary: n={d.n} != 2k={2 * k_h}"
        else:
            why = f"necessary: V_{2 * k_h} not contained in W"
        return StructuralEvidence(k=None, verdict=False, condition=why)
    extra = extra_generators(d, k)
    ev = StructuralEvidence(k=k, extra_generators=extra)
    for m in extra:
        if not condition_one(m, k):
            ev.condition = "condition 1 violated"
            ev.offending = [m]
            return ev
    bands = {m: diagonal_band(closure([m]), 2 * k + 2) for m in extra}
    for r, s in combinations(extra, 2):
        shared = bands[r] & bands[s]
        if shared:
            ev.condition = "condition 2 violated"
            ev.offending = [r, s]
            ev.shared = sorted(shared)
            return ev
    ev.verdict = True
    ev.condition = "V_2k" if not extra else "conditions 1 and 2 hold"
    return ev


@dataclass
class ClassificationReport:
    gorenstein: bool
    n: int
    normalized_n: int
    k: int
    hvector: HVector
    structural: StructuralEvidence
    symmetric: bool
    quick: bool
    method_agreement: bool
    generators: list[Monomial]

    def to_dict(self) -> dict:
        return {
            "gorenstein": self.gorenstein,
            "n": self.n,
            "normalized_n": self.normalized_n,
            "k": self.k,
            "h": list(self.hvector),
            "generators": [[m.i, m.j] for m in self.generators],
            "symmetric": self.symmetric,
            "quick_check": self.quick,
            "method_agreement": self.method_agreement,
            "structural": self.structural.to_dict(),
        }


def classify(d: Diagram) -> ClassificationReport:
    """Full report; raises :class:`InconsistencyError` if the methods disagree."""
    nd = normalize(d)
    h = hilbert_series(nd).numerator
    sym = is_symmetric(h)
    quick = quick_check(nd, h)
    ev = classify_structural(nd, h)
    agree = sym == quick == ev.verdict
    if not agree:
        raise InconsistencyError(
            f"symmetry={sym} quick={quick} structural={ev.verdict} for {d.bounds} h={list(h)}"
        )
    if sym:
        squares = [m for m in ev.extra_generators if m.is_square]
        assert len(squares) <= 1, squares
    return ClassificationReport(
        gorenstein=sym,
        n=d.n,
        normalized_n=nd.n,
        k=h.degree,
        hvector=h,
        structural=ev,
        symmetric=sym,
        quick=quick,
        method_agreement=agree,
        generators=borel_generators(d),
    )
