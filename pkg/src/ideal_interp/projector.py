"""
Ideal projectors whose kernel has a reduced Groebner basis of the shape
``g_j = x^a_j - sum_{b < a_j} c_{j,b} x^b`` (componentwise ``<``).

For this class the basis is the reduced Groebner basis under every monomial
order, the range is spanned by the monomials outside the corners ``a_j``,
and the interpolation error splits as ``f - Pf = sum_j A_j(f) g_j`` with
``A_j(x^gamma) = 0`` unless ``a_j <= gamma``.
"""
from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .conditions import ConditionSet, _check_conditions, moller_vanishing_gb
from .config import max_degree
from .errors import DimensionMismatch, IdealInterpError, NotAGroebnerBasis, NotInUniversalClass
from .groebner import (
    GroebnerBasis,
    _canonical,
    classify_universal,
    escalier,
    is_groebner_basis,
    reduce,
)
from .order_ideal import CornerSet, OrderIdeal, escalier_from_corners, monomials_up_to_degree
from .poly import (
    LEX1,
    Exponent,
    Polynomial,
    apply_diff_operator,
    exponent_factorial,
    exponent_leq,
    exponent_lt,
    exponent_sub,
)


class IdealProjector:
    """
    The projector P with ker P = <basis> and ran P = span(escalier).

    Construct through :func:`projector_from_conditions`,
    :func:`projector_from_corner_images` or :meth:`from_basis`.
    """

    def __init__(self, basis: GroebnerBasis, conditions: ConditionSet | None = None):
        if not classify_universal(basis):
            raise NotInUniversalClass("basis does not have the componentwise-below shape")
        gens = _canonical(basis.generators, LEX1)
        self.basis = GroebnerBasis(gens, LEX1, True)
        self.escalier: OrderIdeal = escalier(self.basis)
        self.corners = CornerSet(self.basis.leading_exponents, self.basis.dim)
        self.corner_list: tuple[Exponent, ...] = tuple(self.basis.leading_exponents)
        self.conditions = conditions
        self._tails = tuple(
            tuple((e, c) for e, c in g.items() if e != a) for g, a in zip(gens, self.corner_list)
        )
        self._memo: dict[Exponent, tuple[Polynomial, ...]] = {}
        self._lock = threading.Lock()

    @classmethod
    def from_basis(cls, basis: GroebnerBasis, conditions: ConditionSet | None = None) -> "IdealProjector":
        return cls(basis, conditions)

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def generators(self) -> tuple[Polynomial, ...]:
        return self.basis.generators

    def __len__(self) -> int:
        return len(self.basis)

    def __call__(self, f: Polynomial) -> Polynomial:
        return project(self, f)

    def complement(self, f: Polynomial) -> Polynomial:
        """P'f = f - Pf."""
        return f - project(self, f)

    def __repr__(self) -> str:
        return f"IdealProjector(basis=[{', '.join(map(str, self.generators))}])"

    # -- monomial decomposition, memoized ------------------------------------
    def _monomial_coefficients(self, gamma: Exponent) -> tuple[Polynomial, ...]:
        hit = self._memo.get(gamma)
        if hit is not None:
            return hit
        dim = self.dim
        m = len(self.corner_list)
        j = next((k for k, a in enumerate(self.corner_list) if exponent_leq(a, gamma)), None)
        if j is None:
            result = tuple(Polynomial.zero(dim) for _ in range(m))
        else:
            # x^delta g_j = x^gamma + sum tail_b x^(b + delta), hence
            # P'(x^gamma) = x^delta g_j - sum tail_b P'(x^(b + delta))
            delta = exponent_sub(gamma, self.corner_list[j])
            acc: list[dict[Exponent, Fraction]] = [{} for _ in range(m)]
            acc[j][delta] = Fraction(1)
            for b, c in self._tails[j]:
                sub = self._monomial_coefficients(tuple(x + y for x, y in zip(b, delta)))
                for k, poly in enumerate(sub):
                    target = acc[k]
                    for e, v in poly.items():
                        target[e] = target.get(e, 0) - c * v
            result = tuple(Polynomial._raw(a, dim) for a in acc)
        with self._lock:
            self._memo.setdefault(gamma, result)
        return result


def projector_from_conditions(conditions: ConditionSet) -> IdealProjector:
    """Projector matching ``conditions``; rejects kernels outside the universal class."""
    _check_conditions(conditions)
    G = moller_vanishing_gb(conditions, LEX1)
    if not classify_universal(G):
        raise NotInUniversalClass(
            "the vanishing ideal's reduced Groebner basis is not order independent "
            "(its lex escaliers differ)"
        )
    return IdealProjector(G, conditions)


def projector_from_corner_images(images: Mapping[Sequence[int], Polynomial]) -> IdealProjector:
    """
    Projector defined by prescribing ``P x^a`` for every corner ``a``.

    Each image must be supported on exponents componentwise below its corner
    and inside the resulting range; the resulting generators must pass the
    Buchberger criterion.
    """
    if not images:
        raise ValueError("no corner images given")
    corners = [tuple(a) for a in images]
    dim = len(corners[0])
    cs = CornerSet(corners, dim)
    O = escalier_from_corners(cs)
    gens = []
    for a, image in images.items():
        a = tuple(a)
        if image.dim != dim:
            raise DimensionMismatch(f"image of corner {a} has dimension {image.dim}, expected {dim}")
        for e in image.exponents():
            if not exponent_lt(e, a):
                raise NotInUniversalClass(f"image of corner {a} contains exponent {e}, which is not below it")
            if e not in O:
                raise NotAGroebnerBasis(f"image of corner {a} contains {e}, which lies outside the range")
        gens.append(Polynomial.monomial(a) - image)
    if not is_groebner_basis(gens, LEX1):
        raise NotAGroebnerBasis("prescribed images are inconsistent: some S-polynomial does not reduce to 0")
    return IdealProjector(GroebnerBasis(_canonical(gens, LEX1), LEX1, True))


def project(P: IdealProjector, f: Polynomial) -> Polynomial:
    """Pf as the normal form of ``f`` modulo the kernel basis."""
    if f.dim != P.dim:
        raise DimensionMismatch(f"polynomial in {f.dim} variables, projector in {P.dim}")
    return reduce(f, P.basis).remainder


@dataclass(frozen=True)
class ErrorDecomposition:
    coefficients: tuple[Polynomial, ...]
    residual_check: bool


def error_decompose(P: IdealProjector, f: Polynomial) -> ErrorDecomposition:
    """
    Coefficients A_j(f) with f - Pf = sum_j A_j(f) g_j.

    Each monomial is expanded through the lowest-index generator whose
    corner divides it, recursively; results per monomial are memoized on
    the projector.
    """
    if f.dim != P.dim:
        raise DimensionMismatch(f"polynomial in {f.dim} variables, projector in {P.dim}")
    m = len(P)
    acc: list[dict[Exponent, Fraction]] = [{} for _ in range(m)]
    for gamma, c in f.items():
        for k, poly in enumerate(P._monomial_coefficients(gamma)):
            target = acc[k]
            for e, v in poly.items():
                target[e] = target.get(e, 0) + c * v
    coeffs = tuple(Polynomial._raw(a, f.dim) for a in acc)
    error = Polynomial.zero(f.dim)
    for a, g in zip(coeffs, P.generators):
        error = error + a * g
    return ErrorDecomposition(coeffs, error == f - project(P, f))


@dataclass(frozen=True)
class GoodFormulaCertificate:
    duals: tuple[Polynomial, ...]
    kronecker_ok: bool
    kernel_containment_ok: bool
    checked_degree_bound: int
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.kronecker_ok and self.kernel_containment_ok


def default_degree_bound(P: IdealProjector) -> int:
    return max(sum(a) for a in P.corner_list) + 3


def dual_operators(P: IdealProjector) -> tuple[Polynomial, ...]:
    """H_j = x^a_j / a_j! so that H_j(D) g_k is the Kronecker delta."""
    return tuple(Polynomial.monomial(a, Fraction(1, exponent_factorial(a))) for a in P.corner_list)


def certify_good_formula(P: IdealProjector, degree_bound: int | None = None) -> GoodFormulaCertificate:
    """
    Check H_j(D) g_k = delta_jk, and A_j(x^gamma) = 0 whenever a_j does not
    divide x^gamma, over all monomials of total degree <= ``degree_bound``.

    The second check is the kernel containment ker H_j(D) in ker A_j on the
    truncated monomial set; it is what guarantees the factorization
    A_j = C_j H_j(D) without building C_j.
    """
    if degree_bound is None:
        degree_bound = default_degree_bound(P)
    if degree_bound < max(sum(a) for a in P.corner_list):
        raise ValueError("degree bound must be at least the largest corner degree")
    if degree_bound > max_degree():
        raise IdealInterpError(f"degree bound {degree_bound} exceeds the enumeration cap {max_degree()}")
    duals = dual_operators(P)
    failures = []
    kron = True
    for j, h in enumerate(duals):
        for k, g in enumerate(P.generators):
            value = apply_diff_operator(h, g)
            if value != (1 if j == k else 0):
                kron = False
                failures.append(f"H_{j + 1}(D) g_{k + 1} = {value}")
    contain = True
    for gamma in monomials_up_to_degree(P.dim, degree_bound):
        coeffs = P._monomial_coefficients(gamma)
        for j, a in enumerate(P.corner_list):
            if not exponent_leq(a, gamma) and not coeffs[j].is_zero():
                contain = False
                failures.append(f"A_{j + 1}(x^{gamma}) = {coeffs[j]}")
    return GoodFormulaCertificate(duals, kron, contain, degree_bound, tuple(failures))


@dataclass(frozen=True)
class LawResiduals:
    law1: Polynomial
    law2: Polynomial

    def __iter__(self):
        return iter((self.law1, self.law2))

    @property
    def ok(self) -> bool:
        return self.law1.is_zero() and self.law2.is_zero()


def check_ideal_projector_laws(P: IdealProjector, f: Polynomial, g: Polynomial) -> LawResiduals:
    """Residuals of P(fg) = P(f Pg) and P'(fg) = f P'(g) + P'(f Pg)."""
    Pg = project(P, g)
    fg = f * g
    fPg = f * Pg
    law1 = project(P, fg) - project(P, fPg)
    law2 = P.complement(fg) - f * P.complement(g) - P.complement(fPg)
    return LawResiduals(law1, law2)


def random_polynomial(rng: random.Random, dim: int, max_degree: int, max_terms: int = 6, coef_range: int = 5) -> Polynomial:
    """Small random polynomial with rational coefficients, for property checks."""
    exps = monomials_up_to_degree(dim, max_degree)
    nterms = rng.randint(1, max_terms)
    terms = {}
    for _ in range(nterms):
        e = rng.choice(exps)
        num = rng.randint(-coef_range, coef_range)
        den = rng.randint(1, 3)
        terms[e] = Fraction(num, den)
    return Polynomial(terms, dim)
