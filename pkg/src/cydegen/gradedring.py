"""Truncated commutative graded rings over Q, with a splitting-principle
calculus for Chern characters, Chern classes and the Todd-type class Td*.

Everything here is exact: coefficients are :class:`fractions.Fraction` and
floats are refused at construction time.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "NotDivisible",
    "Ring",
    "GradedClass",
    "SplitBundle",
    "PClasses",
    "chern_root_ring",
    "exp_coefficients",
    "todd_star_coefficients",
    "apply_series",
    "todd_star",
    "chern_character",
    "lambda_ch",
    "chern_class",
    "p_classes",
    "divide_by_class",
    "integrate_pn",
]

Monomial = tuple  # exponent vector, one entry per generator
Scalar = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """No exact quotient exists in the truncated ring."""


class Ring:
    """Free commutative ring on graded generators, truncated above ``cutoff``.

    ``generators`` is a mapping or a sequence of ``(name, degree)`` pairs.
    """

    def __init__(self, generators, cutoff: int):
        if isinstance(generators, Mapping):
            generators = list(generators.items())
        pairs = [(str(name), int(deg)) for name, deg in generators]
        if not pairs:
            raise ValueError("a ring needs at least one generator")
        names = [name for name, _ in pairs]
        seen = set()
        for name in names:
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
        for name, deg in pairs:
            if deg <= 0:
                raise ValueError(f"generator {name!r} has non-positive degree {deg}")
        cutoff = int(cutoff)
        if cutoff < 1:
            raise ValueError("cutoff must be at least 1")
        if cutoff < max(deg for _, deg in pairs):
            raise ValueError("cutoff is below the largest generator degree")
        self.names = tuple(names)
        self.degrees = tuple(deg for _, deg in pairs)
        self.cutoff = cutoff
        self._index = {name: i for i, name in enumerate(names)}

    def __repr__(self):
        gens = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"Ring({{{gens}}}, cutoff={self.cutoff})"

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a generator of {self!r}") from None

    def degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        mono = [0] * self.ngens
        for name, e in exponents.items():
            mono[self.index(name)] += int(e)
        return tuple(mono)

    def zero(self) -> GradedClass:
        return GradedClass(self, {})

    def one(self) -> GradedClass:
        return self.scalar(1)

    def scalar(self, c: Scalar) -> GradedClass:
        return GradedClass(self, {(0,) * self.ngens: c})

    def gen(self, name: str) -> GradedClass:
        mono = [0] * self.ngens
        mono[self.index(name)] = 1
        return GradedClass(self, {tuple(mono): 1})

    def gens(self) -> tuple:
        return tuple(self.gen(name) for name in self.names)


def chern_root_ring(n: int, cutoff: int, extra: Sequence[str] = ("e",)) -> tuple:
    """Ring on degree-1 roots ``x1..xn`` plus ``extra`` degree-1 generators.

    Returns ``(ring, bundle)`` where ``bundle`` is the split bundle on the roots.
    """
    names = [f"x{i}" for i in range(1, n + 1)] + list(extra)
    ring = Ring([(name, 1) for name in names], cutoff)
    return ring, SplitBundle(ring, tuple(names[:n]))


def _to_fraction(c) -> Fraction:
    if isinstance(c, bool) or isinstance(c, float):
        raise TypeError(f"coefficients must be exact rationals, got {c!r}")
    return Fraction(c)


class GradedClass:
    """Immutable element of a truncated graded ring.

    ``cutoff`` is the degree up to which the class is known; it equals the
    ring cutoff unless an operation such as division lowered it.
    """

    __slots__ = ("ring", "_terms", "cutoff", "_graded")

    def __init__(self, ring: Ring, terms: Mapping | None = None, cutoff: int | None = None):
        cutoff = ring.cutoff if cutoff is None else min(int(cutoff), ring.cutoff)
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != ring.ngens or min(mono, default=0) < 0:
                raise ValueError(f"bad exponent vector {mono} for {ring!r}")
            c = _to_fraction(c)
            if c and ring.degree(mono) <= cutoff:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        self.ring = ring
        self._terms = clean
        self.cutoff = cutoff
        self._graded = None

    @classmethod
    def _raw(cls, ring, terms, cutoff):
        # trusted constructor: terms already clean and truncated
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        obj.cutoff = cutoff
        obj._graded = None
        return obj

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def _by_degree(self):
        if self._graded is None:
            graded = {}
            for mono, c in self._terms.items():
                graded.setdefault(self.ring.degree(mono), []).append((mono, c))
            self._graded = graded
        return self._graded

    def _coerce(self, other) -> GradedClass:
        if isinstance(other, GradedClass):
            if other.ring is not self.ring:
                raise ValueError("classes live in different rings")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.ring.scalar(other)
        return NotImplemented

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cutoff = min(self.cutoff, other.cutoff)
        deg = self.ring.degree
        out = {m: c for m, c in self._terms.items() if deg(m) <= cutoff}
        for m, c in other._terms.items():
            if deg(m) > cutoff:
                continue
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return GradedClass._raw(self.ring, out, cutoff)

    __radd__ = __add__

    def __neg__(self):
        return GradedClass._raw(self.ring, {m: -c for m, c in self._terms.items()}, self.cutoff)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return GradedClass._raw(self.ring, {}, self.cutoff)
            return GradedClass._raw(
                self.ring, {m: c * other for m, c in self._terms.items()}, self.cutoff
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        cutoff = min(self.cutoff, other.cutoff)
        out: dict = {}
        right = other._by_degree()
        for da, ta in self._by_degree().items():
            for db, tb in right.items():
                if da + db > cutoff:
                    continue
                for ma, ca in ta:
                    for mb, cb in tb:
                        m = tuple(x + y for x, y in zip(ma, mb))
                        out[m] = out.get(m, 0) + ca * cb
        return GradedClass._raw(self.ring, {m: c for m, c in out.items() if c}, cutoff)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = GradedClass._raw(self.ring, {(0,) * self.ring.ngens: Fraction(1)}, self.cutoff)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            other = self.ring.scalar(other)
        if not isinstance(other, GradedClass):
            return NotImplemented
        return (
            other.ring is self.ring
            and other.cutoff == self.cutoff
            and other._terms == self._terms
        )

    __hash__ = None

    # inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono) -> Fraction:
        if isinstance(mono, Mapping):
            mono = self.ring.monomial(mono)
        return self._terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.ngens, Fraction(0))

    def degree_part(self, d: int) -> GradedClass:
        deg = self.ring.degree
        return GradedClass._raw(
            self.ring, {m: c for m, c in self._terms.items() if deg(m) == d}, self.cutoff
        )

    def truncate(self, d: int) -> GradedClass:
        """Drop terms above degree ``d`` and record ``d`` as the new cutoff."""
        d = min(d, self.cutoff)
        deg = self.ring.degree
        return GradedClass._raw(
            self.ring, {m: c for m, c in self._terms.items() if deg(m) <= d}, d
        )

    def lowest_degree(self) -> int | None:
        if not self._terms:
            return None
        return min(self._by_degree())

    def __repr__(self):
        return f"GradedClass({self}, cutoff={self.cutoff})"

    def __str__(self):
        if not self._terms:
            return "0"
        deg = self.ring.degree
        parts = []
        for mono in sorted(self._terms, key=lambda m: (deg(m), tuple(-e for e in m))):
            c = self._terms[mono]
            factors = []
            for name, e in zip(self.ring.names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            body = "*".join(factors)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", text))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out


# power series ------------------------------------------------------------


def exp_coefficients(cutoff: int) -> list:
    """Coefficients of exp(x) up to x^cutoff, by a_k = a_{k-1} / k."""
    coeffs = [Fraction(1)]
    for k in range(1, cutoff + 1):
        coeffs.append(coeffs[-1] / k)
    return coeffs


def todd_star_coefficients(cutoff: int) -> list:
    """Coefficients of x/(e^x - 1) up to x^cutoff.

    Bernoulli numbers from sum_{j<=m} C(m+1, j) B_j = 0, then B_k / k!.
    """
    bern = [Fraction(1)]
    for m in range(1, cutoff + 1):
        bern.append(-sum(comb(m + 1, j) * bern[j] for j in range(m)) / (m + 1))
    return [b / factorial(k) for k, b in enumerate(bern)]


def apply_series(coeffs: Sequence, cls: GradedClass) -> GradedClass:
    """Evaluate sum coeffs[k] * cls^k by Horner's rule; ``cls`` must have no constant term."""
    if cls.constant_term():
        raise ValueError("series argument must have zero constant term")
    result = cls.ring.scalar(0).truncate(cls.cutoff)
    for c in reversed(coeffs[: cls.cutoff + 1]):
        result = result * cls + c
    return result


def _univariate(ring: Ring, name: str, coeffs: Sequence) -> GradedClass:
    i = ring.index(name)
    terms = {}
    for k, c in enumerate(coeffs):
        mono = [0] * ring.ngens
        mono[i] = k
        terms[tuple(mono)] = c
    return GradedClass(ring, terms)


# bundles -------------------------------------------------------------------


@dataclass(frozen=True)
class SplitBundle:
    """A bundle presented by its Chern roots, degree-1 generators of ``ring``."""

    ring: Ring
    roots: tuple

    def __post_init__(self):
        roots = tuple(self.roots)
        object.__setattr__(self, "roots", roots)
        if len(set(roots)) != len(roots):
            raise ValueError("Chern roots must be distinct generators")
        for name in roots:
            if self.ring.degrees[self.ring.index(name)] != 1:
                raise ValueError(f"Chern root {name!r} must have degree 1")

    @property
    def rank(self) -> int:
        return len(self.roots)

    def __add__(self, other: SplitBundle) -> SplitBundle:
        if other.ring is not self.ring:
            raise ValueError("bundles live in different rings")
        return SplitBundle(self.ring, self.roots + other.roots)


def _check_ring(bundle: SplitBundle, ring: Ring | None = None):
    if ring is not None and bundle.ring is not ring:
        raise ValueError("bundle lives in a different ring")


def todd_star(bundle: SplitBundle) -> GradedClass:
    """Multiplicative class with generating series x / (e^x - 1)."""
    ring = bundle.ring
    coeffs = todd_star_coefficients(ring.cutoff)
    result = ring.one()
    for name in bundle.roots:
        result = result * _univariate(ring, name, coeffs)
    return result


def chern_character(bundle: SplitBundle) -> GradedClass:
    ring = bundle.ring
    coeffs = exp_coefficients(ring.cutoff)
    result = ring.zero()
    for name in bundle.roots:
        result = result + _univariate(ring, name, coeffs)
    return result


def lambda_ch(bundle: SplitBundle, p: int) -> GradedClass:
    """Ch of the p-th exterior power: sum over p-subsets of exp(sum of roots)."""
    if not 0 <= p <= bundle.rank:
        raise ValueError(f"exterior power {p} out of range for rank {bundle.rank}")
    ring = bundle.ring
    coeffs = exp_coefficients(ring.cutoff)
    exps = {name: _univariate(ring, name, coeffs) for name in bundle.roots}
    result = ring.zero()
    for subset in combinations(bundle.roots, p):
        term = ring.one()
        for name in subset:
            term = term * exps[name]
        result = result + term
    return result


def chern_class(bundle: SplitBundle, i: int) -> GradedClass:
    """i-th elementary symmetric polynomial in the roots."""
    if not 0 <= i <= bundle.rank:
        raise ValueError(f"Chern class index {i} out of range for rank {bundle.rank}")
    ring = bundle.ring
    idx = [ring.index(name) for name in bundle.roots]
    terms = {}
    for subset in combinations(idx, i):
        mono = [0] * ring.ngens
        for j in subset:
            mono[j] = 1
        terms[tuple(mono)] = 1
    return GradedClass(ring, terms)


class PClasses(NamedTuple):
    P: GradedClass
    P1: GradedClass  # first derivative class, weight p
    P2: GradedClass  # second derivative class, weight p(p-1)/2


def p_classes(bundle: SplitBundle) -> PClasses:
    """Td*(F) times the alternating sums of Ch(Λ^p F) with weights 1, p, p(p-1)/2."""
    ring = bundle.ring
    td = todd_star(bundle)
    s0, s1, s2 = ring.zero(), ring.zero(), ring.zero()
    for p in range(bundle.rank + 1):
        ch = lambda_ch(bundle, p) * (-1) ** p
        s0 = s0 + ch
        s1 = s1 + ch * p
        s2 = s2 + ch * (p * (p - 1) // 2)
    return PClasses(td * s0, td * s1, td * s2)


# division and integration ---------------------------------------------------


def _exact_divide(num: dict, den: dict) -> dict:
    """Exact polynomial division num / den (lex order), or NotDivisible."""
    lead_d = max(den)
    cd = den[lead_d]
    rem = dict(num)
    quot = {}
    while rem:
        lead_r = max(rem)
        shift = tuple(a - b for a, b in zip(lead_r, lead_d))
        if min(shift) < 0:
            raise NotDivisible("leading term of the remainder is not divisible")
        c = rem[lead_r] / cd
        quot[shift] = c
        for m, cm in den.items():
            key = tuple(a + b for a, b in zip(m, shift))
            v = rem.get(key, 0) - c * cm
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return quot


def divide_by_class(num: GradedClass, den: GradedClass) -> GradedClass:
    """Quotient q with q * den == num up to degree cutoff - (lowest degree of den).

    The quotient carries that reduced cutoff.
    """
    if num.ring is not den.ring:
        raise ValueError("classes live in different rings")
    if den.is_zero():
        raise NotDivisible("division by zero class")
    k = den.lowest_degree()
    cutoff = min(num.cutoff, den.cutoff) - k
    if cutoff < 0:
        raise NotDivisible("denominator degree exceeds the known range of the numerator")
    ring = num.ring
    den_parts = {d: dict(terms) for d, terms in den._by_degree().items()}
    num_parts = num._by_degree()
    for d in range(k):
        if d in num_parts:
            raise NotDivisible(f"numerator has a nonzero part in degree {d} < {k}")
    lead = den_parts[k]
    q_parts: dict = {}
    for d in range(cutoff + 1):
        rem = dict(num_parts.get(d + k, ()))
        for j, dterms in den_parts.items():
            if j <= k or d + k - j < 0:
                continue
            for mq, cq in q_parts.get(d + k - j, {}).items():
                for md, cdd in dterms.items():
                    m = tuple(a + b for a, b in zip(mq, md))
                    v = rem.get(m, 0) - cq * cdd
                    if v:
                        rem[m] = v
                    else:
                        rem.pop(m, None)
        q_parts[d] = _exact_divide(rem, lead) if rem else {}
    terms = {m: c for part in q_parts.values() for m, c in part.items()}
    return GradedClass(ring, terms, cutoff)


def integrate_pn(cls: GradedClass, N: int) -> Fraction:
    """Degree of a class on P^N: the coefficient of h^N in a one-generator ring."""
    ring = cls.ring
    if ring.ngens != 1:
        raise ValueError("integration over P^N needs a ring with a single generator")
    if ring.degrees[0] != 1:
        raise ValueError("the hyperplane generator must have degree 1")
    if N > cls.cutoff:
        raise ValueError(f"class is only known up to degree {cls.cutoff} < {N}")
    return cls.coefficient((N,))
