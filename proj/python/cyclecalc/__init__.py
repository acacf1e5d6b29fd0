"""Exact correspondence calculus on Jacobians (Python bindings)."""

import json

from ._core import (
    CurveClass,
    DslError,
    IdentityViolation,
    RingElement,
    SingularSystem,
    apply_operator,
    binom,
    ceresa,
    closed_forms,
    evaluate,
    gamma,
    gross_schoen,
    log_gamma1,
    normalize_report,
    parse_tree,
    pi,
    pi_combination,
    pretty,
    push_forward,
    quotient,
    solve_hn,
    unit_curve,
    verify_json,
)


def verify(genus_max=5, gonality_max=7, inject_fault=False):
    """Runs the identity suites and returns the report as a dict."""
    return json.loads(verify_json(genus_max, gonality_max, inject_fault))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
