"""
Exact sparse multivariate polynomials over the rationals.

A polynomial is a mapping from exponent tuples to nonzero ``Fraction``
coefficients together with its ambient dimension ``d``.  Values are
immutable; every arithmetic operation returns a new normalized polynomial.
"""
from __future__ import annotations

from fractions import Fraction
from math import prod
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import DimensionMismatch

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


def _check_exponent(exp: Sequence[int], dim: int) -> Exponent:
    exp = tuple(exp)
    if len(exp) != dim:
        raise DimensionMismatch(f"exponent {exp} does not have dimension {dim}")
    for e in exp:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"exponent entries must be nonnegative integers, got {exp}")
    return exp


def exponent_leq(a: Exponent, b: Exponent) -> bool:
    """Componentwise (divisibility) order on exponents."""
    if len(a) != len(b):
        raise DimensionMismatch(f"cannot compare {a} and {b}")
    return all(x <= y for x, y in zip(a, b))


def exponent_lt(a: Exponent, b: Exponent) -> bool:
    """Strict componentwise order: a <= b and a != b."""
    return a != b and exponent_leq(a, b)


def exponent_add(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def exponent_sub(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x - y for x, y in zip(a, b))


def exponent_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def exponent_factorial(a: Exponent) -> int:
    out = 1
    for e in a:
        for k in range(2, e + 1):
            out *= k
    return out


def unit_exponent(i: int, dim: int) -> Exponent:
    return tuple(1 if k == i else 0 for k in range(dim))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------
class MonomialOrder:
    """
    Lex(i) or graded lex.

    ``Lex(i)`` ranks the variables cyclically as x_i > ... > x_d > x_1 > ... > x_{i-1}.
    ``GradedLex`` compares total degree first and breaks ties with Lex(1).
    """

    __slots__ = ("kind", "start")

    def __init__(self, kind: str, start: int = 1):
        if kind not in ("lex", "grlex"):
            raise ValueError(f"unknown monomial order kind {kind!r}")
        if kind == "lex" and start < 1:
            raise ValueError("Lex(i) needs i >= 1")
        self.kind = kind
        self.start = start if kind == "lex" else 0

    @classmethod
    def lex(cls, i: int = 1) -> "MonomialOrder":
        return cls("lex", i)

    @classmethod
    def grlex(cls) -> "MonomialOrder":
        return cls("grlex")

    @classmethod
    def from_name(cls, name: str, dim: int | None = None) -> "MonomialOrder":
        name = name.strip().lower()
        if name == "grlex":
            return cls.grlex()
        if name.startswith("lex") and name[3:].isdigit():
            i = int(name[3:])
            if dim is not None and not 1 <= i <= dim:
                raise ValueError(f"order {name} is not defined for {dim} variables")
            return cls.lex(i)
        raise ValueError(f"unknown monomial order {name!r}")

    @property
    def name(self) -> str:
        return f"lex{self.start}" if self.kind == "lex" else "grlex"

    def key(self, exp: Exponent) -> tuple:
        """Sort key; larger key means larger monomial."""
        if self.kind == "lex":
            s = self.start - 1
            return exp[s:] + exp[:s]
        return (sum(exp),) + exp

    def check(self, dim: int) -> None:
        if self.kind == "lex" and self.start > dim:
            raise DimensionMismatch(f"Lex({self.start}) needs at least {self.start} variables, got {dim}")

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and (self.kind, self.start) == (other.kind, other.start)

    def __hash__(self) -> int:
        return hash((self.kind, self.start))

    def __repr__(self) -> str:
        return f"Lex({self.start})" if self.kind == "lex" else "GradedLex"


LEX1 = MonomialOrder.lex(1)


def all_orders(dim: int) -> list[MonomialOrder]:
    """Every implemented order for ``dim`` variables: Lex(1..d) and GradedLex."""
    return [MonomialOrder.lex(i) for i in range(1, dim + 1)] + [MonomialOrder.grlex()]


def compare_monomials(order: MonomialOrder, a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise DimensionMismatch(f"cannot compare {a} and {b}")
    order.check(len(a))
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------
class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "dim", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Scalar] | Iterable = (), dim: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, Fraction] = {}
        for exp, coef in items:
            exp = tuple(exp)
            if dim is None:
                dim = len(exp)
            _check_exponent(exp, dim)
            acc[exp] = acc.get(exp, 0) + Fraction(coef)
        if dim is None:
            raise ValueError("dimension of an empty polynomial must be given")
        if dim < 1:
            raise ValueError("polynomials need at least one variable")
        self.dim = dim
        self._terms = {e: acc[e] for e in sorted(acc, reverse=True) if acc[e] != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, Fraction], dim: int) -> "Polynomial":
        # trusted constructor: terms already validated; zeros dropped here
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = {e: terms[e] for e in sorted(terms, reverse=True) if terms[e] != 0}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls._raw({}, dim)

    @classmethod
    def constant(cls, c: Scalar, dim: int) -> "Polynomial":
        return cls._raw({(0,) * dim: Fraction(c)}, dim)

    @classmethod
    def monomial(cls, exp: Sequence[int], coef: Scalar = 1) -> "Polynomial":
        exp = tuple(exp)
        _check_exponent(exp, len(exp))
        return cls._raw({exp: Fraction(coef)}, len(exp))

    @classmethod
    def variable(cls, i: int, dim: int) -> "Polynomial":
        """The variable x_{i+1} (zero-based index)."""
        return cls._raw({unit_exponent(i, dim): Fraction(1)}, dim)

    # --- container protocol -------------------------------------------------
    @property
    def terms(self) -> dict[Exponent, Fraction]:
        """Copy of the term mapping in canonical (descending Lex(1)) order."""
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def exponents(self) -> list[Exponent]:
        return list(self._terms)

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exp), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.dim == other.dim and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self._terms
            return self._terms == {(0,) * self.dim: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim, tuple(self._terms.items())))
        return self._hash

    # --- arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.dim != self.dim:
                raise DimensionMismatch(f"dimensions differ: {self.dim} vs {other.dim}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(other, self.dim)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial._raw(out, self.dim)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.dim)

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) - c
        return Polynomial._raw(out, self.dim)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        other = self._coerce(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(out, self.dim)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if c == 0:
            return Polynomial.zero(self.dim)
        return Polynomial._raw({e: v * c for e, v in self._terms.items()}, self.dim)

    def shift(self, exp: Exponent, coef: Scalar = 1) -> "Polynomial":
        """Multiply by the term ``coef * x^exp``."""
        coef = Fraction(coef)
        if coef == 0:
            return Polynomial.zero(self.dim)
        return Polynomial._raw(
            {tuple(x + y for x, y in zip(e, exp)): v * coef for e, v in self._terms.items()}, self.dim
        )

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = Polynomial.constant(1, self.dim)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- queries -------------------------------------------------------------
    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def leading_term(self, order: MonomialOrder = LEX1) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        order.check(self.dim)
        exp = max(self._terms, key=order.key)
        return exp, self._terms[exp]

    def leading_exponent(self, order: MonomialOrder = LEX1) -> Exponent:
        return self.leading_term(order)[0]

    def monic(self, order: MonomialOrder = LEX1) -> "Polynomial":
        _, lc = self.leading_term(order)
        return self.scale(1 / lc)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        point = [Fraction(v) for v in point]
        if len(point) != self.dim:
            raise DimensionMismatch(f"point of length {len(point)} for a polynomial in {self.dim} variables")
        total = Fraction(0)
        for e, c in self._terms.items():
            total += c * prod((p ** k for p, k in zip(point, e) if k), start=Fraction(1))
        return total

    def render(self, variables: Sequence[str] | None = None) -> str:
        """Canonical text form, e.g. ``x1^2*x2 - 3*x1 + 1/2``."""
        if variables is None:
            variables = [f"x{i + 1}" for i in range(self.dim)]
        if len(variables) != self.dim:
            raise DimensionMismatch("wrong number of variable names")
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self._terms.items()):
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(variables, e) if k
            )
            mag = abs(c)
            if not mono:
                body = _fmt_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{_fmt_rational(mag)}*{mono}"
            if idx == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Polynomial({self.render()!r}, dim={self.dim})"


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_rational(c: Scalar) -> str:
    return _fmt_rational(Fraction(c))


def leading_term(f: Polynomial, order: MonomialOrder = LEX1) -> tuple[Exponent, Fraction]:
    return f.leading_term(order)


def total_degree(f: Polynomial) -> int:
    return f.total_degree()


def evaluate(f: Polynomial, point: Sequence[Scalar]) -> Fraction:
    return f.evaluate(point)


def poly_arith(op: str, f: Polynomial, g) -> Polynomial:
    """Dispatch helper: ``op`` is one of add, subtract, multiply, scale."""
    if op == "add":
        return f + f._coerce(g)
    if op == "subtract":
        return f - f._coerce(g)
    if op == "multiply":
        return f * f._coerce(g)
    if op == "scale":
        if isinstance(g, Polynomial):
            raise TypeError("scale expects a rational scalar")
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(n - k + 1, n + 1):
        out *= t
    return out


def apply_diff_operator(h: Polynomial, f: Polynomial) -> Polynomial:
    """Apply the constant-coefficient differential operator h(D) to f."""
    if h.dim != f.dim:
        raise DimensionMismatch(f"dimensions differ: {h.dim} vs {f.dim}")
    out: dict[Exponent, Fraction] = {}
    for a, ca in h.items():
        for g, cg in f.items():
            if all(x <= y for x, y in zip(a, g)):
                weight = 1
                for x, y in zip(a, g):
                    weight *= _falling(y, x)
                e = tuple(y - x for x, y in zip(a, g))
                out[e] = out.get(e, 0) + ca * cg * weight
    return Polynomial._raw(out, f.dim)


def derivative(f: Polynomial, alpha: Exponent) -> Polynomial:
    """Raw partial derivative D^alpha f."""
    return apply_diff_operator(Polynomial.monomial(alpha), f)
