"""Defaults shared by the library entry points and the command line.

Every value can be overridden by the matching CLI flag.
"""
from __future__ import annotations

DEFAULTS = {
    # milnor
    "degree_cap": 30,
    # verify
    "verify_n_max": 5,
    "verify_hard_cap": 6,
    # fit
    "fit_s_min": 1e-12,
    "fit_s_max": 1e-3,
    "fit_count": 40,
    "fit_correction_terms": 1,
    "fit_alpha_tol": 0.02,
    "fit_beta_tol": 0.1,
}
