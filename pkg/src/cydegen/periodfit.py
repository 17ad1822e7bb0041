"""L^2 norms on the Legendre family y^2 = x(x-1)(x-s) and a least-squares
fit of their asymptotics near s = 0.

The norm of eta = dx/y is 2|Im(conj(w1) w2)| for the periods w1 = 4K(s)
(cycle around [0, s]) and w2 = 4i K(1-s) (cycle around [s, 1]), with K
the complete elliptic integral of the first kind in the parameter
convention. K is computed by the arithmetic-geometric mean.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "NonConvergence",
    "DegenerateDesign",
    "PeriodSample",
    "FitResult",
    "agm",
    "elliptic_k",
    "elliptic_k_complement",
    "legendre_periods",
    "legendre_l2",
    "legendre_samples",
    "fit_asymptotics",
    "samples_to_csv",
    "samples_from_csv",
]

AGM_RTOL = 1e-15
AGM_MAX_STEPS = 60
RANK_TOL = 1e-10


class NonConvergence(RuntimeError):
    pass


class DegenerateDesign(ValueError):
    pass


def agm(a: complex, b: complex) -> complex:
    """Arithmetic-geometric mean with the right choice of square root at each step."""
    a, b = complex(a), complex(b)
    if a == 0 or b == 0:
        raise ValueError("agm needs nonzero arguments")
    if a + b == 0:
        raise ValueError("agm of antipodal arguments is undefined")
    for _ in range(AGM_MAX_STEPS):
        if abs(a - b) <= AGM_RTOL * abs(a):
            return a
        a_next = (a + b) / 2
        b_next = np.sqrt(a * b)
        if abs(a_next - b_next) > abs(a_next + b_next):
            b_next = -b_next
        a, b = a_next, complex(b_next)
    if abs(a - b) <= AGM_RTOL * abs(a):
        return a
    raise NonConvergence(f"agm did not converge in {AGM_MAX_STEPS} steps")


def elliptic_k(m: float) -> float:
    """K(m) = integral of 1/sqrt(1 - m sin^2) over [0, pi/2], for 0 <= m < 1."""
    if not 0 <= m < 1:
        raise ValueError("parameter must lie in [0, 1)")
    return math.pi / (2 * agm(1.0, math.sqrt(1.0 - m)).real)


def elliptic_k_complement(m: float) -> float:
    """K(1 - m), computed without forming 1 - m (stable for tiny m)."""
    if not 0 < m <= 1:
        raise ValueError("parameter must lie in (0, 1]")
    return math.pi / (2 * agm(1.0, math.sqrt(m)).real)


def legendre_periods(s: float) -> tuple:
    _check_s(s)
    w1 = 4 * elliptic_k(s)
    w2 = 4j * elliptic_k_complement(s)
    return complex(w1), complex(w2)


@dataclass(frozen=True)
class PeriodSample:
    s: float
    l2_norm: float

    @property
    def neglog(self) -> float:
        return -math.log(self.l2_norm)


def _check_s(s):
    if not 0 < s < 0.5:
        raise ValueError(f"s must lie in (0, 1/2), got {s}")


def legendre_l2(s: float) -> PeriodSample:
    w1, w2 = legendre_periods(s)
    return PeriodSample(float(s), 2 * abs((w1.conjugate() * w2).imag))


def legendre_samples(s_min: float, s_max: float, count: int) -> list:
    """Log-spaced samples on [s_min, s_max]."""
    if not 0 < s_min < s_max < 0.5:
        raise ValueError("need 0 < s_min < s_max < 1/2")
    if count < 2:
        raise ValueError("need at least two samples")
    return [legendre_l2(float(s)) for s in np.geomspace(s_min, s_max, count)]


@dataclass(frozen=True)
class FitResult:
    """v ~ alpha * log|s|^2 - beta * log|log|s|^2| + const + sum_k g_k / (log|s|^2)^k."""

    alpha_hat: float
    beta_hat: float
    const_hat: float
    residual_norm: float
    condition_estimate: float
    count: int
    correction: tuple = ()


DEFAULT_CORRECTION_TERMS = 1


def _design(s: np.ndarray, correction_terms: int) -> np.ndarray:
    log_s2 = np.log(np.abs(s) ** 2)
    cols = [log_s2, -np.log(np.abs(log_s2)), np.ones_like(log_s2)]
    cols += [log_s2 ** -(k + 1) for k in range(correction_terms)]
    return np.column_stack(cols)


def fit_asymptotics(samples: Iterable, correction_terms: int = DEFAULT_CORRECTION_TERMS) -> FitResult:
    """Least-squares fit of (s, v) pairs against {log|s|^2, -log|log|s|^2|, 1}.

    ``correction_terms`` extra columns 1/(log|s|^2)^k, k = 1.., model the
    O(1/log|s|) tail; with 0 the bare three-term model is fitted.
    """
    if correction_terms < 0:
        raise ValueError("correction_terms must be non-negative")
    pairs = [(float(s), float(v)) for s, v in samples]
    ncols = 3 + correction_terms
    if len(pairs) < max(4, ncols + 1):
        raise DegenerateDesign(f"need at least {max(4, ncols + 1)} samples, got {len(pairs)}")
    s = np.array([p[0] for p in pairs])
    v = np.array([p[1] for p in pairs])
    if np.any(s <= 0) or np.any(s >= 1):
        raise ValueError("sample points must lie in (0, 1)")
    if len(np.unique(s)) != len(s):
        raise DegenerateDesign("sample points are not distinct")
    A = _design(s, correction_terms)
    sv = np.linalg.svd(A, compute_uv=False)
    if sv[-1] <= RANK_TOL * sv[0]:
        raise DegenerateDesign("design matrix is numerically rank deficient")
    coef, *_ = np.linalg.lstsq(A, v, rcond=None)
    residual = float(np.linalg.norm(A @ coef - v))
    return FitResult(
        alpha_hat=float(coef[0]),
        beta_hat=float(coef[1]),
        const_hat=float(coef[2]),
        residual_norm=residual,
        condition_estimate=float(sv[0] / sv[-1]),
        count=len(pairs),
        correction=tuple(float(c) for c in coef[3:]),
    )


CSV_HEADER = ("s", "l2_norm", "neglog")


def samples_to_csv(samples: Sequence[PeriodSample]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for p in samples:
        writer.writerow([repr(p.s), repr(p.l2_norm), repr(p.neglog)])
    return buf.getvalue()


def samples_from_csv(text: str) -> list:
    """Read ``s,l2_norm,neglog`` rows; returns (s, neglog) pairs ready for fitting.

    ``neglog`` may be left empty, in which case it is recomputed from ``l2_norm``.
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None or "s" not in reader.fieldnames:
        raise ValueError("CSV needs a header with at least columns s and l2_norm or neglog")
    out = []
    for row in reader:
        s = float(row["s"])
        neglog = row.get("neglog") or ""
        if neglog.strip():
            v = float(neglog)
        else:
            v = -math.log(float(row["l2_norm"]))
        out.append((s, v))
    return out
