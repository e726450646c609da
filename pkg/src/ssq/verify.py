"""Invariant suite behind ``ssq verify``.

Each check returns a :class:`Check`. Randomized checks draw from one
``random.Random(seed)`` in a fixed order, so a given seed always produces the
same report.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable

from . import families as fam
from .core import (Diagram, borel_generators, closure, is_strongly_stable, normalize,
                   v2k, veronese)
from .enumerate import classify_all, enumerate_diagrams
from .gorenstein import classify, is_symmetric
from .hilbert import (InconsistencyError, antichain_counts, direct_hf, enumerate_paths, expand,
                      hilbert_series, hvector_dp, path_histogram)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name}" + (f"  ({self.detail})" if self.detail else "")


def random_diagram(rng: random.Random, n: int) -> Diagram:
    """Uniform-ish random diagram of dimension ``n``: each row picks a bound
    between empty and the previous row's bound."""
    bounds = [n]
    empty = False
    for i in range(2, n + 1):
        prev = bounds[-1]
        if empty or prev < i:
            bounds.append(i - 1)
            empty = True
            continue
        c = rng.randint(i - 1, prev)
        bounds.append(c)
        empty = c == i - 1
    return Diagram(tuple(bounds))


def random_diagrams(rng: random.Random, count: int, max_n: int, min_n: int = 1) -> list[Diagram]:
    return [random_diagram(rng, rng.randint(min_n, max_n)) for _ in range(count)]


def no_free_variable_diagrams(max_n: int) -> list[Diagram]:
    out = []
    for n in range(2, max_n + 1):
        out.extend(enumerate_diagrams(n))
    return out


def brute_force_count(n: int) -> int:
    """Count no-free-variable diagrams of dimension ``n`` by filtering every
    subset of the boxes below row 2."""
    fixed = [(1, j) for j in range(1, n + 1)] + [(2, j) for j in range(2, n + 1)]
    free = [(a, b) for a in range(3, n + 1) for b in range(a, n + 1)]
    total = 0
    for mask in product((0, 1), repeat=len(free)):
        boxes = fixed + [box for box, bit in zip(free, mask) if bit]
        if is_strongly_stable(boxes):
            total += 1
    return total


def _check(name: str, fn: Callable[[], str | None]) -> Check:
    try:
        detail = fn()
    except (AssertionError, InconsistencyError) as exc:
        return Check(name, False, str(exc))
    return Check(name, True, detail or "")


def run_suite(max_n: int = 9, hf_degree: int = 3, samples: int = 200, seed: int = 42,
              max_random_n: int = 12, hf_max_n: int = 7) -> list[Check]:
    rng = random.Random(seed)
    exhaustive = no_free_variable_diagrams(max_n)
    randoms = random_diagrams(rng, samples, max_random_n)
    hf_randoms = random_diagrams(rng, samples, hf_max_n)
    checks = []

    def triple():
        for d in exhaustive + randoms:
            a, b = hvector_dp(d), antichain_counts(d)
            c = path_histogram(enumerate_paths(d))
            assert a == b == c, f"{d.bounds}: dp={list(a)} antichain={list(b)} paths={list(c)}"
        return f"{len(exhaustive)} exhaustive + {len(randoms)} random"

    def closure_props():
        for d in randoms:
            assert is_strongly_stable(d.boxes()), d.bounds
            assert closure(borel_generators(d)) == d, d.bounds
            assert closure(d.boxes()) == d, d.bounds

    def normalize_props():
        for d in randoms:
            nd = normalize(d)
            assert normalize(nd) == nd, d.bounds
            assert hvector_dp(nd) == hvector_dp(d), d.bounds
            assert nd.with_row1(nd.n + 3).bounds[1:nd.n] == nd.bounds[1:], d.bounds
            assert hvector_dp(nd.with_row1(nd.n + 3)) == hvector_dp(d), d.bounds

    def h1_boxes():
        for d in exhaustive:
            h = hvector_dp(d)
            assert len(h) > 1 and h[1] == len(d) - d.n, d.bounds

    def classifier():
        gor = 0
        for n in range(2, max_n + 1):
            for row in classify_all(n):
                gor += row.gorenstein
                assert row.gorenstein == is_symmetric(row.hvector)
        return f"{gor} Gorenstein of {len(exhaustive)}"

    def even_dimension():
        for n in range(3, max_n + 1, 2):
            found = [r.diagram.bounds for r in classify_all(n) if r.gorenstein]
            assert not found, f"odd n={n}: {found}"

    def row1_invariance():
        for d in randoms[:50]:
            a = classify(d)
            b = classify(d.with_row1(d.n + 2))
            assert a.gorenstein == b.gorenstein and a.hvector == b.hvector, d.bounds

    def formulas():
        for k in range(1, 9):
            assert fam.hvec_v2k(k) == hvector_dp(v2k(k)), f"v2k {k}"
        for n in range(1, 13):
            assert fam.hvec_veronese(n) == hvector_dp(veronese(n)), f"veronese {n}"
        for k in range(1, 8):
            for j in range(k + 1, 2 * k + 1):
                assert fam.hvec_v2k_square(k, j) == hvector_dp(fam.v2k_square_diagram(k, j)), \
                    f"v2k-square {k},{j}"
        for k in range(2, 8):
            assert fam.hvec_hook(k) == hvector_dp(fam.hook_diagram(k)), f"hook {k}"
            for a in range(3, k + 2):
                assert fam.hvec_onebox(k, a) == hvector_dp(fam.onebox_diagram(k, a)), \
                    f"onebox {k},{a}"

    def narayana():
        for k in range(1, 26):
            row = [fam.narayana(k, i) for i in range(1, k + 1)]
            assert row == row[::-1], f"k={k}"
            assert sum(row) == fam.catalan(k), f"k={k}"

    def veronese_antichains():
        for n in range(1, 13):
            h = antichain_counts(veronese(n))
            assert list(h) == [fam.binom(n, 2 * i) for i in range(n // 2 + 1)], f"n={n}"
            if n >= 2:
                assert is_symmetric(h) == (n % 2 == 0), f"n={n}"

    def hf_oracle():
        for d in hf_randoms:
            series = expand(hilbert_series(d), hf_degree)
            for i in range(hf_degree + 1):
                assert direct_hf(d, i) == series[i], f"{d.bounds} degree {i}"
        return f"{len(hf_randoms)} diagrams, degree <= {hf_degree}"

    def enumeration_count():
        top = min(max_n, 7)
        for n in range(2, top + 1):
            assert len(enumerate_diagrams(n)) == brute_force_count(n), f"n={n}"
        return f"n <= {top}"

    def path_total():
        for d in randoms:
            assert sum(hvector_dp(d)) == len(enumerate_paths(d)), d.bounds

    checks.append(_check("triple-method h-vector agreement", triple))
    checks.append(_check("closure / Borel generators round trip", closure_props))
    checks.append(_check("normalize idempotent and h-preserving", normalize_props))
    checks.append(_check("h_1 = boxes - n without free variable", h1_boxes))
    checks.append(_check("path total = number of maximal paths", path_total))
    checks.append(_check("classifier equivalence (structure = symmetry = quick)", classifier))
    checks.append(_check("no Gorenstein diagram of odd dimension", even_dimension))
    checks.append(_check("classification invariant under row-1 extension", row1_invariance))
    checks.append(_check("closed-form families match DP", formulas))
    checks.append(_check("Narayana symmetry and Catalan row sums", narayana))
    checks.append(_check("Veronese antichain counts", veronese_antichains))
    checks.append(_check("semigroup Hilbert function oracle", hf_oracle))
    checks.append(_check("enumeration count vs brute force", enumeration_count))
    return checks
