"""Python bindings for the IVIF CPT-EDAS decision engine."""

import json

from ._core import (
    Ivifn,
    IvifError,
    accuracy_simple,
    accuracy_wc,
    add,
    complement,
    compare,
    cpt_weight,
    dist_hamming,
    dist_hausdorff,
    dist_hybrid,
    edas,
    entropy_weights,
    hesitancy,
    ivifwa,
    ivifwg,
    join,
    meet,
    mul,
    power,
    scale,
    score_simple,
    score_wc,
    validate,
)
from . import _core

__all__ = [
    "Ivifn",
    "IvifError",
    "accuracy_simple",
    "accuracy_wc",
    "add",
    "complement",
    "compare",
    "cpt_weight",
    "dist_hamming",
    "dist_hausdorff",
    "dist_hybrid",
    "edas",
    "entropy_weights",
    "hesitancy",
    "ivifwa",
    "ivifwg",
    "join",
    "meet",
    "mul",
    "power",
    "run",
    "scale",
    "score_simple",
    "score_wc",
    "sweep",
    "validate",
]


def run(problem, method=None, emit_intermediates=False):
    """Run the pipeline on a problem file path or JSON text and return the report as a dict."""
    return json.loads(_core.run_json(problem, method or "", emit_intermediates))


def sweep(problem, param, values):
    """Re-run EDAS for each value of one CPT parameter; returns the sweep document as a dict."""
    return json.loads(_core.sweep_json(problem, param, list(values)))
