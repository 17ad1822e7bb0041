"""Milnor numbers of isolated hypersurface singularities at the origin.

The local algebra Q[[z]]/Jac(f) is approached through the finite quotients
Q[z]/(Jac(f) + m^D). Their dimensions d(D) are nondecreasing, and once
d(D+1) == d(D) we have m^D in Jac(f) + m^(D+1), so m^D lies in the local
Jacobian ideal by Nakayama and mu = d(D).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .polyparse import LocalPoly, parse_poly

__all__ = [
    "MilnorResult",
    "SmoothGerm",
    "CapExceeded",
    "DEFAULT_DEGREE_CAP",
    "parse_poly",
    "jacobian_ideal",
    "milnor_number",
    "linear_change",
    "random_invertible_matrix",
    "random_linear_change",
]

DEFAULT_DEGREE_CAP = 30


class SmoothGerm(ValueError):
    """The germ is smooth at the origin, so its Milnor number is 0."""

    mu = 0


class CapExceeded(RuntimeError):
    """No stabilization below the degree cap; the singularity is likely not isolated."""

    def __init__(self, cap: int, dims: list):
        self.cap = cap
        self.dims = dims
        super().__init__(
            f"colength did not stabilize below degree {cap} "
            f"(last dimensions {dims[-3:]}); singularity may be non-isolated"
        )


@dataclass(frozen=True)
class MilnorResult:
    mu: int
    stabilization_degree: int
    monomial_basis: tuple = field(default_factory=tuple)
    variables: tuple = ()

    def basis_strings(self) -> list:
        out = []
        for mono in self.monomial_basis:
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, mono) if e]
            out.append("*".join(factors) or "1")
        return out


def jacobian_ideal(f: LocalPoly) -> list:
    """Formal partial derivatives, one per variable, zeros included."""
    return [f.diff(i) for i in range(f.nvars)]


def _monomials_below(nvars: int, D: int) -> list:
    """All exponent vectors of total degree < D, sorted by (degree, lex)."""
    out = []
    for d in range(D):
        for combo in combinations_with_replacement(range(nvars), d):
            mono = [0] * nvars
            for i in combo:
                mono[i] += 1
            out.append(tuple(mono))
    out.sort(key=_order_key)
    return out


def _order_key(mono):
    return (sum(mono), mono)


class _Echelon:
    """Incremental row echelon form; each row is keyed by its largest monomial."""

    def __init__(self):
        self.rows = {}

    def add(self, row: dict) -> bool:
        row = dict(row)
        while row:
            lead = max(row, key=_order_key)
            pivot = self.rows.get(lead)
            if pivot is None:
                c = row[lead]
                self.rows[lead] = {m: v / c for m, v in row.items()}
                return True
            c = row[lead]
            for m, v in pivot.items():
                w = row.get(m, 0) - c * v
                if w:
                    row[m] = w
                else:
                    row.pop(m, None)
        return False


def _colength(partials: list, nvars: int, D: int):
    """dim Q[z]/(Jac + m^D) and the non-pivot monomial basis."""
    monos = _monomials_below(nvars, D)
    ech = _Echelon()
    for g in partials:
        gterms = g.terms
        if not gterms:
            continue
        order = min(sum(m) for m in gterms)
        for mono in monos:
            if sum(mono) + order >= D:
                continue
            row = {}
            for gm, c in gterms.items():
                m = tuple(a + b for a, b in zip(mono, gm))
                if sum(m) < D:
                    row[m] = c
            if row:
                ech.add(row)
    basis = [m for m in monos if m not in ech.rows]
    return len(basis), basis


def milnor_number(f: LocalPoly, degree_cap: int = DEFAULT_DEGREE_CAP) -> MilnorResult:
    """Milnor number of the germ ``f`` at the origin.

    Raises :class:`SmoothGerm` if some partial derivative is a unit and
    :class:`CapExceeded` if the colengths have not stabilized by ``degree_cap``.
    """
    if degree_cap < 2:
        raise ValueError("degree_cap must be at least 2")
    if f.constant_term():
        raise ValueError("germ must vanish at the origin (f(0) != 0)")
    partials = jacobian_ideal(f)
    if any(g.constant_term() for g in partials):
        raise SmoothGerm("germ is smooth at the origin; mu = 0")
    dims = []
    prev = None
    for D in range(1, degree_cap + 1):
        dim, basis = _colength(partials, f.nvars, D)
        dims.append(dim)
        if prev is not None and dim == prev[0]:
            return MilnorResult(prev[0], D - 1, tuple(prev[1]), f.variables)
        prev = (dim, basis)
    raise CapExceeded(degree_cap, dims)


def _det(matrix) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] / a[col][col]
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def linear_change(f: LocalPoly, matrix) -> LocalPoly:
    """Substitute z_i -> sum_j matrix[i][j] z_j."""
    n = f.nvars
    images = []
    for i in range(n):
        terms = {}
        for j in range(n):
            if matrix[i][j]:
                mono = [0] * n
                mono[j] = 1
                terms[tuple(mono)] = matrix[i][j]
        images.append(LocalPoly(f.variables, terms))
    return f.substitute(images)


def random_invertible_matrix(n: int, seed: int, bound: int = 2) -> list:
    """Integer matrix with entries in [-bound, bound], resampled until invertible."""
    rng = random.Random(seed)
    while True:
        matrix = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if _det(matrix):
            return matrix


def random_linear_change(f: LocalPoly, seed: int) -> LocalPoly:
    """``f`` composed with a seeded random invertible linear substitution."""
    return linear_change(f, random_invertible_matrix(f.nvars, seed))
