"""Composite centrality for weighted directed networks."""

import json

from ._core import (
    Degenerate,
    Error,
    InvalidInput,
    NotConnected,
    ParseError,
    __version__,
    anderson_darling,
    box_cox,
    combine,
    fit_lambda,
    ks_statistic,
    ks_test,
    render_cdf,
    set_thread_count,
    skewness,
    standardize,
    study_csv,
)
from . import _core


def analyze(csv_text, **kwargs):
    """Analyze edge-list CSV text and return the report as a dict."""
    return json.loads(_core.analyze_edges(csv_text, **kwargs))


def analyze_file(path, **kwargs):
    with open(path, encoding="utf-8") as f:
        kwargs.setdefault("input_name", str(path).rsplit("/", 1)[-1])
        return analyze(f.read(), **kwargs)


__all__ = [
    "Degenerate", "Error", "InvalidInput", "NotConnected", "ParseError", "__version__",
    "analyze", "analyze_file", "anderson_darling", "box_cox", "combine", "fit_lambda",
    "ks_statistic", "ks_test", "render_cdf", "set_thread_count", "skewness", "standardize",
    "study_csv",
]
