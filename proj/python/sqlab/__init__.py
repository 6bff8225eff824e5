"""Mod-2 Steenrod algebra workbench."""

import json

from ._core import (
    DEFAULT_DEGREE_CAP,
    DegreeCapError,
    __version__,
    adem,
    admissible_basis,
    binom_mod2,
    ffunc,
    ideal_member,
    loop_bound,
    min_ideal_k,
    run_cli,
)
from . import _core


def bound(sphere_dim, relation="", expr="", degree_cap=DEFAULT_DEGREE_CAP):
    """Lower bound report for S^sphere_dim as a dict."""
    return json.loads(_core._bound_json(sphere_dim, relation, expr, degree_cap))


def theorem1(t, degree_cap=DEFAULT_DEGREE_CAP):
    """Both family bounds for parameter t as a dict."""
    return json.loads(_core._theorem1_json(t, degree_cap))


def distinguish(n, q):
    """Sq^{2^n}_* comparison of the two fibres for k = 2^n, N = q 2^{n+2} + 1."""
    return json.loads(_core._distinguish_json(n, q))


__all__ = [
    "DEFAULT_DEGREE_CAP",
    "DegreeCapError",
    "__version__",
    "adem",
    "admissible_basis",
    "binom_mod2",
    "bound",
    "distinguish",
    "ffunc",
    "ideal_member",
    "loop_bound",
    "min_ideal_k",
    "run_cli",
    "theorem1",
]
