"""Exhaustive survey of no-free-variable diagrams and the Appendix audit."""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator

from .core import Diagram, Monomial, closure, format_generators, parse_generators, v2k
from .gorenstein import ClassificationReport, classify
from .hilbert import HVector, antichain_counts, hvector_dp


def _bound_vectors(n: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: list[int]) -> Iterator[tuple[int, ...]]:
        i = len(prefix) + 1
        if i > n:
            yield tuple(prefix)
            return
        prev = prefix[-1]
        if prev < i - 1:
            # row i-1 is empty, so every later row is too
            yield tuple(prefix) + tuple(r - 1 for r in range(i, n + 1))
            return
        for c in range(i - 1, prev + 1):
            if c == i - 1 or c >= i:
                prefix.append(c)
                yield from rec(prefix)
                prefix.pop()

    yield from rec([n, n])


def enumerate_diagrams(n: int) -> list[Diagram]:
    """All diagrams with ``c_1 == c_2 == n``, sorted by bound vector."""
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    return sorted(Diagram(b) for b in _bound_vectors(n))


@dataclass
class SurveyRow:
    diagram: Diagram
    hvector: HVector
    gorenstein: bool
    extra_generators: list[Monomial]
    report: ClassificationReport

    @property
    def k(self) -> int:
        return self.hvector.degree

    def to_dict(self) -> dict:
        return {
            "n": self.diagram.n,
            "bounds": list(self.diagram.bounds),
            "generators": format_generators(self.report.generators),
            "extra_generators": format_generators(self.extra_generators),
            "h": list(self.hvector),
            "gorenstein": self.gorenstein,
        }


def classify_all(n: int) -> list[SurveyRow]:
    rows = []
    for d in enumerate_diagrams(n):
        rep = classify(d)
        rows.append(SurveyRow(d, rep.hvector, rep.gorenstein,
                              list(rep.structural.extra_generators) if rep.gorenstein else [],
                              rep))
    return rows


def label(gens) -> str:
    """Appendix-style label: ``st(x5x6, x3x8)`` or the empty set."""
    gens = list(gens)
    if not gens:
        return "∅"
    return "st(" + ", ".join(str(m) for m in gens) + ")"


def appendix_table(kmax: int) -> list[dict]:
    """Gorenstein rows for ``n = 2, 4, ..., 2*kmax`` as (k, h, W) records."""
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    out = []
    for k in range(1, kmax + 1):
        for row in classify_all(2 * k):
            if row.gorenstein:
                out.append({
                    "k": k,
                    "h": list(row.hvector),
                    "W": label(row.extra_generators),
                    "generators": format_generators(row.extra_generators),
                })
    return out


@dataclass
class TableRow:
    k: int
    h: tuple[int, ...]
    gens: list[Monomial]

    @property
    def label(self) -> str:
        return label(self.gens)

    def to_dict(self) -> dict:
        return {"k": self.k, "h": list(self.h), "W": self.label}


def load_appendix() -> list[TableRow]:
    text = resources.files("ssq.data").joinpath("appendix.csv").read_text(encoding="utf-8")
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        h = tuple(int(x) for x in rec["h"].strip("[] ").split(","))
        gens = parse_generators(rec["W"]) if rec["W"].strip() else []
        rows.append(TableRow(int(rec["k"]), h, gens))
    return rows


@dataclass
class AuditReport:
    kmax: int
    matched: list[dict] = field(default_factory=list)
    h_missing: list[dict] = field(default_factory=list)
    label_inside_v2k: list[dict] = field(default_factory=list)
    label_h_mismatch: list[dict] = field(default_factory=list)
    unlisted: list[dict] = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def clean(self) -> bool:
        return not (self.h_missing or self.label_inside_v2k
                    or self.label_h_mismatch or self.unlisted)

    def to_dict(self) -> dict:
        return {
            "kmax": self.kmax,
            "clean": self.clean,
            "counts": self.counts,
            "table_rows_with_h_found": self.matched,
            "table_rows_with_h_not_found": self.h_missing,
            "labels_inside_v2k": self.label_inside_v2k,
            "labels_with_wrong_h": self.label_h_mismatch,
            "enumerated_but_unlisted": self.unlisted,
        }


def audit_appendix(kmax: int) -> AuditReport:
    """Compare the bundled Appendix with the exhaustive survey up to ``n = 2*kmax``.

    A table row *accounts for* an enumerated diagram when its label closes
    (together with ``V_{2k}``) to that diagram and its printed h-vector equals
    the computed one. Enumerated Gorenstein diagrams not accounted for by any
    row are reported as unlisted.
    """
    if not 1 <= kmax <= 5:
        raise ValueError(f"the Appendix covers 1 <= k <= 5, got kmax={kmax}")
    table = [r for r in load_appendix() if r.k <= kmax]
    rep = AuditReport(kmax)
    for k in range(1, kmax + 1):
        survey = [r for r in classify_all(2 * k) if r.gorenstein]
        by_h: dict[tuple, list[SurveyRow]] = {}
        for r in survey:
            by_h.setdefault(tuple(r.hvector), []).append(r)
        base = v2k(k)
        accounted = set()
        rows_k = [r for r in table if r.k == k]
        for pr in rows_k:
            entry = pr.to_dict()
            carriers = by_h.get(pr.h, [])
            entry["carriers"] = [_carrier(c) for c in carriers]
            if carriers:
                rep.matched.append(entry)
            else:
                rep.h_missing.append(entry)
            inside = [m for m in pr.gens if m in base]
            if inside:
                rep.label_inside_v2k.append({**entry, "inside_v2k": format_generators(inside)})
            d = base.union(closure(pr.gens)) if pr.gens else base
            h_dp = hvector_dp(d)
            h_ac = antichain_counts(d)
            assert h_dp == h_ac
            if tuple(h_dp) == pr.h:
                accounted.add(d)
            elif not inside:
                rep.label_h_mismatch.append({**entry, "computed_h": list(h_dp),
                                             "bounds": list(d.bounds)})
        for r in survey:
            if r.diagram not in accounted:
                rep.unlisted.append({**_carrier(r), "k": k,
                                     "h_antichain": list(antichain_counts(r.diagram))})
        rep.counts[str(k)] = {"table_rows": len(rows_k), "enumerated_gorenstein": len(survey)}
    return rep


def _carrier(r: SurveyRow) -> dict:
    return {
        "W": label(r.extra_generators),
        "generators": format_generators(r.extra_generators),
        "bounds": list(r.diagram.bounds),
        "h": list(r.hvector),
    }


def hvector_multiset(rows) -> Counter:
    return Counter(tuple(r["h"]) if isinstance(r, dict) else tuple(r.h) for r in rows)
