"""Topological bookkeeping for degenerations and exact checks of the
characteristic-class identities behind the BCOV coefficient.

Sign convention: ``e`` always denotes c_1(O(E)) restricted to E. The
Yoshikawa integrand written with O(-E) is obtained by e -> -e.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .gradedring import (
    GradedClass,
    Ring,
    SplitBundle,
    apply_series,
    chern_class,
    chern_root_ring,
    divide_by_class,
    exp_coefficients,
    integrate_pn,
    lambda_ch,
    p_classes,
    todd_star,
    todd_star_coefficients,
)

__all__ = [
    "TopologyData",
    "BCOVReport",
    "euler_hypersurface",
    "delta_chi_from_milnor",
    "yoshikawa_degree_isolated",
    "yoshikawa_degree_hypersurface_family",
    "yoshikawa_degree_kulikov_surface",
    "bcov_slope",
    "alpha_bcov",
    "verify_koszul",
    "verify_derivative_classes",
    "verify_omega",
    "omega_class",
    "yoshikawa_integrand",
    "MAX_VERIFY_N",
]

MAX_VERIFY_N = 6


@dataclass(frozen=True)
class TopologyData:
    n: int
    chi_general: int
    chi_special: int

    @property
    def delta_chi(self) -> int:
        return self.chi_general - self.chi_special

    @classmethod
    def from_milnor(cls, n: int, chi_general: int, milnor_numbers: Sequence[int]) -> TopologyData:
        return cls(n, chi_general, chi_general - delta_chi_from_milnor(n, milnor_numbers))


def euler_hypersurface(N: int, d: int) -> int:
    """Euler characteristic of a smooth degree-d hypersurface in P^N.

    Integrates d h (1+h)^(N+1) / (1 + d h) over P^N.
    """
    if N < 1 or d < 1:
        raise ValueError("need N >= 1 and d >= 1")
    ring = Ring({"h": 1}, N)
    h = ring.gen("h")
    total_chern = divide_by_class((1 + h) ** (N + 1), 1 + d * h)
    chi = integrate_pn(d * h * total_chern, N)
    assert chi.denominator == 1
    return int(chi)


def delta_chi_from_milnor(n: int, milnor_numbers: Sequence[int]) -> int:
    """chi(X_inf) - chi(X_0) = (-1)^n * total Milnor number."""
    if n < 1:
        raise ValueError("fiber dimension must be positive")
    return (-1) ** n * sum(milnor_numbers)


def yoshikawa_degree_isolated(n: int, milnor_numbers: Sequence[int]) -> Fraction:
    return Fraction((-1) ** (n + 1) * sum(milnor_numbers), factorial(n + 2))


def yoshikawa_degree_hypersurface_family(n: int, delta_chi: int) -> Fraction:
    # (-1)^(n+1)/(n+2)! times the localized top Chern class, which is (-1)^n delta_chi
    top_chern = (-1) ** n * delta_chi
    return Fraction((-1) ** (n + 1) * top_chern, factorial(n + 2))


def yoshikawa_degree_kulikov_surface(delta_chi: int) -> Fraction:
    return Fraction(-delta_chi, 24)


def bcov_slope(n: int) -> Fraction:
    """Coefficient of the vanishing-cycle count in alpha_BCOV."""
    return Fraction(9 * n * n + 11 * n + 2, 24)


@dataclass(frozen=True)
class BCOVReport:
    n: int
    chi_general: int
    chi_special: int
    alpha: Fraction
    beta: int
    b_correction: Fraction
    alpha_bcov: Fraction
    loglog_coefficient: Fraction
    notes: tuple = field(default_factory=tuple)

    @property
    def delta_chi(self) -> int:
        return self.chi_general - self.chi_special

    def asymptotic_line(self) -> str:
        return (
            f"-log||sigma||^2_BCOV = ({self.alpha_bcov}) log|s|^2"
            f" - ({self.loglog_coefficient}) log|log|s|^2| + continuous"
        )


def alpha_bcov(
    n: int,
    chi_general: int,
    chi_special: int,
    alpha=Fraction(0),
    b_correction=Fraction(0),
    beta: int = 0,
) -> BCOVReport:
    """Coefficient of log|s|^2 in -log of the BCOV norm, plus the log-log term.

    ``b_correction`` is the integral of c_n(Omega_{X/S}) over B; it vanishes
    for Kulikov families.
    """
    if n < 1:
        raise ValueError("fiber dimension must be positive")
    alpha = Fraction(alpha)
    b_correction = Fraction(b_correction)
    if not 0 <= alpha < 1:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    if beta < 0 or beta > n:
        raise ValueError(f"beta must lie in [0, n], got {beta}")
    delta = chi_general - chi_special
    value = (
        bcov_slope(n) * delta
        + alpha / 12 * chi_general
        + Fraction((-1) ** n, 12) * b_correction
    )
    notes = []
    if n % 2 == 1 and delta < 0 and alpha == 0 and beta == 0 and b_correction == 0:
        notes.append(
            "odd n with a negative Euler characteristic jump: for isolated ordinary "
            "double points this equals -(9n^2+11n+2)/24 * #sing, whereas the "
            "node-count statement for n >= 2 carries the opposite sign; the value "
            "above follows the vanishing-cycle formula"
        )
    return BCOVReport(
        n=n,
        chi_general=chi_general,
        chi_special=chi_special,
        alpha=alpha,
        beta=beta,
        b_correction=b_correction,
        alpha_bcov=value,
        loglog_coefficient=Fraction(chi_general * beta, 12),
        notes=tuple(notes),
    )


# symbolic identities -------------------------------------------------------


def _check_n(n: int, upper: int = MAX_VERIFY_N):
    if not 1 <= n <= upper:
        raise ValueError(f"n must lie in 1..{upper}, got {n}")


def _c(bundle: SplitBundle, i: int) -> GradedClass:
    return chern_class(bundle, i)


def verify_koszul(n: int) -> bool:
    """Td*(Q) * sum (-1)^p Ch(Λ^p Q) == (-1)^n c_n(Q) for Q of rank n."""
    _check_n(n)
    ring, Q = chern_root_ring(n, n, extra=())
    return p_classes(Q).P == _c(Q, n) * (-1) ** n


def verify_derivative_classes(n: int) -> bool:
    """Low-degree parts of P'(Q) and the degree-n part of P''(Q)."""
    _check_n(n)
    ring, Q = chern_root_ring(n, n, extra=())
    _, P1, P2 = p_classes(Q)
    sign = (-1) ** n
    ok_low = P1.degree_part(n - 1) == _c(Q, n - 1) * sign
    ok_top = P1.degree_part(n) == _c(Q, n) * (sign * Fraction(n, 2))
    expected = _c(Q, n) * (sign * Fraction(n * (3 * n - 5), 24)) + _c(Q, 1) * _c(Q, n - 1) * Fraction(sign, 12)
    ok_second = P2.degree_part(n) == expected.degree_part(n)
    return ok_low and ok_top and ok_second


def omega_class(n: int) -> GradedClass:
    """The class omega on E, in the free ring on the roots of Q and e.

    Ch(b*Ω_X^j|_E) is expanded as Ch(Λ^j Q) + Ch(Λ^(j-1) Q) Ch(O(E)).
    """
    ring, Q = chern_root_ring(n, n + 1)
    e = ring.gen("e")
    ch_e = apply_series(exp_coefficients(ring.cutoff), e)
    td_e = apply_series(todd_star_coefficients(ring.cutoff), e)
    ch_lambda = [lambda_ch(Q, j) for j in range(n + 1)]
    ch_omega = [ch_lambda[0]] + [ch_lambda[j] + ch_lambda[j - 1] * ch_e for j in range(1, n + 1)]
    ch_e_powers = [ring.one()]
    for _ in range(n):
        ch_e_powers.append(ch_e_powers[-1] * ch_e)
    total = ring.zero()
    for p in range(1, n + 1):
        for j in range(p + 1):
            total = total + (td_e - ch_e_powers[p - j]) * ch_omega[j] * (p * (-1) ** j)
    return todd_star(Q) * total


def verify_omega(n: int) -> bool:
    """Degree n+1 part of omega equals e times the closed form in c_n, c_1, c_{n-1}.

    Uses c_1(b*K_X) = e + c_1(Q) on E.
    """
    _check_n(n)
    omega = omega_class(n)
    ring = omega.ring
    Q = SplitBundle(ring, tuple(f"x{i}" for i in range(1, n + 1)))
    e = ring.gen("e")
    sign = (-1) ** n
    bracket = _c(Q, n) * (-sign * Fraction(9 * n * n + 11 * n, 24)) + (e + _c(Q, 1)) * _c(Q, n - 1) * Fraction(
        sign, 12
    )
    expected = (e * bracket.degree_part(n)).degree_part(n + 1)
    return omega.degree_part(n + 1) == expected


def yoshikawa_integrand(n: int, bundle_ch: GradedClass) -> GradedClass:
    """Td*(Q) * (Td*(O(E)) - 1) / c_1(O(E)) * Ch(V), valid up to degree n.

    ``bundle_ch`` must live in a ring with roots ``x1..xn`` and generator ``e``
    (see :func:`chern_root_ring`), with cutoff at least n + 1.
    """
    ring = bundle_ch.ring
    if ring.cutoff < n + 1:
        raise ValueError("ring cutoff must be at least n + 1 to divide by c_1(O(E))")
    Q = SplitBundle(ring, tuple(f"x{i}" for i in range(1, n + 1)))
    e = ring.gen("e")
    td_e = apply_series(todd_star_coefficients(ring.cutoff), e)
    quotient = divide_by_class(td_e - 1, e)
    # quotient * e must reproduce the numerator wherever both are known
    assert (quotient * e).truncate(quotient.cutoff) == (td_e - 1).truncate(quotient.cutoff)
    return (todd_star(Q) * quotient * bundle_ch).truncate(n)
