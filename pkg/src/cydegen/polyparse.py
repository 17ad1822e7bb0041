"""Sparse multivariate polynomials over Q and a small recursive-descent parser.

Grammar accepted by :func:`parse_poly`::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/") unary)*
    unary   := ("+" | "-") unary | power
    power   := atom ("^" INTEGER)?
    atom    := NUMBER | NAME | "(" expr ")"
    NUMBER  := digit+
    NAME    := letter (letter | digit | "_")*

Division is only allowed by a nonzero constant, so ``3/2*x^2`` works but
``x/y`` does not. Whitespace is ignored.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = ["LocalPoly", "PolySyntaxError", "parse_poly"]


class PolySyntaxError(ValueError):
    """Raised with the character offset of the offending token."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class LocalPoly:
    """Polynomial in named variables with exact rational coefficients."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        clean = {}
        for mono, c in (terms or {}).items():
            mono = tuple(int(e) for e in mono)
            if len(mono) != len(self.variables):
                raise ValueError(f"exponent vector {mono} does not match {self.variables}")
            if isinstance(c, float):
                raise TypeError("coefficients must be exact")
            c = Fraction(c)
            if c:
                clean[mono] = c
        self._terms = clean

    @classmethod
    def constant(cls, variables, c) -> LocalPoly:
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name: str) -> LocalPoly:
        mono = [0] * len(variables)
        mono[list(variables).index(name)] = 1
        return cls(variables, {tuple(mono): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def _check(self, other: LocalPoly):
        if other.variables != self.variables:
            raise ValueError("polynomials use different variable lists")

    def _lift(self, other):
        if isinstance(other, LocalPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return LocalPoly.constant(self.variables, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LocalPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LocalPoly(self.variables, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                m = tuple(a + b for a, b in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return LocalPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = LocalPoly.constant(self.variables, 1)
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
            other = LocalPoly.constant(self.variables, other)
        if not isinstance(other, LocalPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def order(self) -> int | None:
        """Lowest total degree of a term (the order at the origin)."""
        if not self._terms:
            return None
        return min(sum(m) for m in self._terms)

    def degree(self) -> int | None:
        if not self._terms:
            return None
        return max(sum(m) for m in self._terms)

    def diff(self, name_or_index) -> LocalPoly:
        i = name_or_index if isinstance(name_or_index, int) else self.variables.index(name_or_index)
        out = {}
        for m, c in self._terms.items():
            if m[i]:
                dm = list(m)
                dm[i] -= 1
                out[tuple(dm)] = c * m[i]
        return LocalPoly(self.variables, out)

    def substitute(self, images: Sequence[LocalPoly]) -> LocalPoly:
        """Compose with ``variables[i] -> images[i]``; images share one variable list."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        target = images[0].variables
        result = LocalPoly(target)
        powers = [{0: LocalPoly.constant(target, 1)} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        for m, c in self._terms.items():
            term = LocalPoly.constant(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def __repr__(self):
        return f"LocalPoly({str(self)!r}, variables={list(self.variables)})"

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for m in sorted(self._terms, key=lambda m: (sum(m), tuple(-e for e in m))):
            c = self._terms[m]
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e]
            mag = abs(c)
            body = "*".join(factors)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            pieces.append(("-" if c < 0 else "+", text))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, text in pieces[1:]:
            out += f" {sign} {text}"
        return out


class _Parser:
    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.pos = 0
        self.variables = tuple(variables)

    def error(self, message, pos=None):
        raise PolySyntaxError(message, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self) -> LocalPoly:
        if not self.peek():
            self.error("empty expression")
        result = self.expr()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return result

    def expr(self) -> LocalPoly:
        result = self.term()
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> LocalPoly:
        result = self.unary()
        while self.peek() in ("*", "/"):
            op = self.text[self.pos]
            self.pos += 1
            start = self.pos
            rhs = self.unary()
            if op == "*":
                result = result * rhs
            else:
                if rhs.degree() not in (0,) or rhs.is_zero():
                    self.error("division only by a nonzero constant", start)
                result = result * (1 / rhs.constant_term())
        return result

    def unary(self) -> LocalPoly:
        ch = self.peek()
        if ch in ("+", "-"):
            self.pos += 1
            inner = self.unary()
            return -inner if ch == "-" else inner
        return self.power()

    def power(self) -> LocalPoly:
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            self.skip()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected a non-negative integer exponent", start)
            base = base ** int(self.text[start:self.pos])
        return base

    def atom(self) -> LocalPoly:
        ch = self.peek()
        start = self.pos
        if not ch:
            self.error("unexpected end of input")
        if ch.isdigit():
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            return LocalPoly.constant(self.variables, int(self.text[start:self.pos]))
        if ch.isalpha():
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            name = self.text[start:self.pos]
            if name not in self.variables:
                self.error(f"unknown variable {name!r}", start)
            return LocalPoly.var(self.variables, name)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return inner
        self.error(f"unexpected {ch!r}")


def parse_poly(text: str, variables: Iterable[str]) -> LocalPoly:
    """Parse ``text`` into a :class:`LocalPoly` over ``variables``.

    >>> str(parse_poly("x^3 + y^2", ["x", "y"]))
    'y^2 + x^3'
    """
    return _Parser(text, list(variables)).parse()
