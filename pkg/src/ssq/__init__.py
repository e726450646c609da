"""Gorenstein algebras generated by strongly stable sets of quadratic monomials."""

from .core import (Diagram, Monomial, ParseError, borel_generators, closure, diagonal_band,
                   is_strongly_stable, normalize, parse_generators, render_ascii, v2k)
from .hilbert import (HilbertSeries, HVector, InconsistencyError, NEPath, WorkCapExceeded,
                      antichain_counts, direct_hf, enumerate_paths, expand, hilbert_series,
                      hvector_dp)
from .gorenstein import ClassificationReport, classify, classify_structural, is_symmetric, quick_check

__version__ = "0.1.0"
