"""Singularity invariants of degenerating Calabi-Yau families.

Submodules: ``gradedring`` (exact characteristic classes), ``milnor``
(Milnor numbers), ``ncd`` (log-canonical threshold and degeneracy index),
``invariants`` (Euler characteristics, Yoshikawa degrees, alpha_BCOV and
identity checks), ``periodfit`` (Legendre-family L2 asymptotics).
"""
from .gradedring import Ring, GradedClass, SplitBundle
from .milnor import milnor_number, parse_poly
from .ncd import NCDModel, theorem_a_report, quadratic_model
from .invariants import alpha_bcov, euler_hypersurface

__version__ = "0.1.0"
