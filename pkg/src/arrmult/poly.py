"""Sparse multivariate polynomials over Q.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients.  Instances are treated as immutable values.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence


class PolynomialSyntaxError(ValueError):
    pass


# ---------------------------------------------------------------- orders

@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is 'grevlex', 'lex' or 'block'; ``block`` is the size of the eliminated block."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "block" and self.block < 1:
            raise ValueError("block order needs a positive first block size")

    def key(self, exp: tuple) -> tuple:
        """Flat integer tuple; larger key means larger monomial."""
        return _order_key(self.kind, self.block, exp)

    def __str__(self) -> str:
        return f"block({self.block})" if self.kind == "block" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(k: int) -> MonomialOrder:
    return MonomialOrder("block", k)


def _grevlex(exp: tuple) -> tuple:
    return (sum(exp),) + tuple(-e for e in reversed(exp))


@lru_cache(maxsize=1 << 18)
def _order_key(kind: str, block: int, exp: tuple) -> tuple:
    if kind == "grevlex":
        return _grevlex(exp)
    if kind == "lex":
        return exp
    return _grevlex(exp[:block]) + _grevlex(exp[block:])


# ---------------------------------------------------------------- polynomial

def _clean(terms: Mapping) -> dict:
    return {e: Fraction(c) for e, c in terms.items() if c}


class Polynomial:
    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms: Mapping | None = None, nvars: int | None = None):
        terms = _clean(terms or {})
        if nvars is None:
            if not terms:
                raise ValueError("nvars is required for the zero polynomial")
            nvars = len(next(iter(terms)))
        if any(len(e) != nvars for e in terms):
            raise ValueError("exponent vector length does not match nvars")
        self.terms = terms
        self.nvars = nvars
        self._hash = None

    # constructors
    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls({}, n)

    @classmethod
    def constant(cls, c, n: int) -> "Polynomial":
        return cls({(0,) * n: Fraction(c)}, n)

    @classmethod
    def var(cls, i: int, n: int) -> "Polynomial":
        return cls({tuple(int(k == i) for k in range(n)): Fraction(1)}, n)

    @classmethod
    def monomial(cls, exp: Sequence[int], c=1) -> "Polynomial":
        return cls({tuple(exp): Fraction(c)}, len(exp))

    @classmethod
    def linear(cls, coeffs: Sequence, constant=0) -> "Polynomial":
        n = len(coeffs)
        terms = {tuple(int(k == i) for k in range(n)): Fraction(c) for i, c in enumerate(coeffs)}
        terms[(0,) * n] = Fraction(constant)
        return cls(terms, n)

    # queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def min_degree(self) -> int:
        return min(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def leading(self, order: MonomialOrder = GREVLEX) -> tuple[tuple, Fraction]:
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = point[0]
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    # arithmetic
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError("polynomials live in different rings")
            return other
        return Polynomial.constant(other, self.nvars)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            return Polynomial({e: c * v for e, v in self.terms.items()}, self.nvars)
        other = self._coerce(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(other, self.nvars)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        return self * (1 / self.leading(order)[1])

    def substitute_linear(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Compose with x_i = sum_j matrix[i][j] * y_j (a linear change of variables)."""
        n = self.nvars
        forms = [Polynomial.linear(row) for row in matrix]
        powers: dict = {}

        def pw(i: int, k: int) -> Polynomial:
            if (i, k) not in powers:
                powers[(i, k)] = forms[i] ** k
            return powers[(i, k)]

        total = Polynomial.zero(len(matrix[0]) if matrix else n)
        for e, c in self.terms.items():
            t = Polynomial.constant(c, total.nvars)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            total = total + t
        return total

    def extend(self, k: int, front: bool = True) -> "Polynomial":
        """Embed into a ring with k extra variables, placed first by default."""
        pad = (0,) * k
        terms = {(pad + e if front else e + pad): c for e, c in self.terms.items()}
        return Polynomial(terms, self.nvars + k)

    # printing
    def to_string(self, names: Sequence[str] | None = None, order: MonomialOrder = GREVLEX) -> str:
        names = names or default_names(self.nvars)
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=order.key, reverse=True):
            c = self.terms[e]
            mono = "*".join(names[i] if k == 1 else f"{names[i]}^{k}" for i, k in enumerate(e) if k)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"Polynomial({self.to_string()!r}, nvars={self.nvars})"


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    text = text.replace("−", "-")
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


def _variable_map(n: int) -> dict[str, int]:
    names = {f"x{i + 1}": i for i in range(n)}
    if n <= 3:
        names.update({v: i for i, v in enumerate("xyz"[:n])})
    return names


class _Parser:
    def __init__(self, tokens: list[str], n: int):
        self.toks = tokens
        self.i = 0
        self.n = n
        self.vars = _variable_map(n)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise PolynomialSyntaxError(f"expected {expected or 'a term'}, found {tok!r}")
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        sign = 1
        while self.peek() in ("+", "-"):
            sign *= -1 if self.take() == "-" else 1
        acc = self.term() * sign
        while self.peek() in ("+", "-"):
            op = self.take()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok in ("*", "/"):
                self.take()
                rhs = self.power()
                if tok == "/":
                    if not rhs.is_constant() or rhs.is_zero():
                        raise PolynomialSyntaxError("division only by nonzero constants")
                    rhs = Polynomial.constant(1 / rhs.coefficient((0,) * self.n), self.n)
                acc = acc * rhs
            elif tok is not None and (tok == "(" or tok[0].isalnum() or tok[0] == "_"):
                acc = acc * self.power()  # implicit multiplication
            else:
                return acc

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() in ("^", "**"):
            self.take()
            tok = self.take()
            if not tok.isdigit():
                raise PolynomialSyntaxError(f"exponent must be a nonnegative integer, got {tok!r}")
            base = base ** int(tok)
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if tok[0].isdigit():
            return Polynomial.constant(Fraction(tok), self.n)
        if tok in self.vars:
            return Polynomial.var(self.vars[tok], self.n)
        raise PolynomialSyntaxError(f"unknown variable {tok!r} for {self.n} variables")


def parse_polynomial(text: str, n: int) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial")
    p = _Parser(tokens, n)
    out = p.expr()
    if p.peek() is not None:
        raise PolynomialSyntaxError(f"trailing input at {p.peek()!r}")
    return out


def monomials_of_degree(n: int, k: int) -> list[tuple]:
    """All exponent vectors of total degree k in n variables, in a fixed order."""
    if n == 1:
        return [(k,)]
    out = []
    for a in range(k, -1, -1):
        for rest in monomials_of_degree(n - 1, k - a):
            out.append((a,) + rest)
    return out


def product(polys: Iterable[Polynomial], n: int) -> Polynomial:
    out = Polynomial.constant(1, n)
    for p in polys:
        out = out * p
    return out
