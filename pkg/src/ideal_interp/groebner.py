"""
Multivariate division, S-polynomials and Buchberger's algorithm.

Every basis emitted here is reduced, monic and sorted by descending Lex(1)
leading exponent, so that golden tests and the error decomposition's
lowest-index tie-break are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotZeroDimensional
from .order_ideal import OrderIdeal, escalier_from_corners
from .poly import (
    LEX1,
    Exponent,
    MonomialOrder,
    Polynomial,
    exponent_lcm,
    exponent_leq,
    exponent_lt,
    exponent_sub,
)


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder = LEX1
    reduced: bool = True

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise ValueError("a Groebner basis needs at least one generator")
        dims = {g.dim for g in self.generators}
        if len(dims) != 1:
            raise DimensionMismatch("generators have different dimensions")

    @property
    def dim(self) -> int:
        return self.generators[0].dim

    @property
    def leading_exponents(self) -> list[Exponent]:
        return [g.leading_exponent(self.order) for g in self.generators]

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, i: int) -> Polynomial:
        return self.generators[i]

    def as_set(self) -> frozenset[Polynomial]:
        return frozenset(self.generators)


@dataclass(frozen=True)
class ReductionResult:
    quotients: tuple[Polynomial, ...]
    remainder: Polynomial


def _divide(f: Polynomial, gens: Sequence[Polynomial], order: MonomialOrder):
    dim = f.dim
    lts = [g.leading_term(order) for g in gens]
    tails = [
        [(e, c) for e, c in g.items() if e != lt[0]] for g, lt in zip(gens, lts)
    ]
    p: dict[Exponent, Fraction] = f.terms
    quotients: list[dict[Exponent, Fraction]] = [{} for _ in gens]
    remainder: dict[Exponent, Fraction] = {}
    key = order.key
    while p:
        top = max(p, key=key)
        c = p[top]
        for j, (lm, lc) in enumerate(lts):
            if exponent_leq(lm, top):
                break
        else:
            remainder[top] = c
            del p[top]
            continue
        factor = c / lc
        shift = exponent_sub(top, lm)
        quotients[j][shift] = quotients[j].get(shift, 0) + factor
        del p[top]
        for e, ce in tails[j]:
            t = tuple(x + y for x, y in zip(e, shift))
            v = p.get(t, 0) - factor * ce
            if v:
                p[t] = v
            else:
                p.pop(t, None)
    return (
        tuple(Polynomial._raw(q, dim) for q in quotients),
        Polynomial._raw(remainder, dim),
    )


def reduce(f: Polynomial, G: GroebnerBasis | Sequence[Polynomial], order: MonomialOrder | None = None) -> ReductionResult:
    """
    Divide ``f`` by the generators of ``G``.

    The largest remaining term is always the one processed, and it is divided
    by the lowest-index generator whose leading monomial divides it.  ``order``
    overrides the basis order (leading terms are recomputed under it).
    """
    if isinstance(G, GroebnerBasis):
        gens, order = G.generators, order or G.order
    else:
        gens, order = tuple(G), order or LEX1
    if not gens:
        raise ValueError("cannot reduce by an empty basis")
    for g in gens:
        if g.dim != f.dim:
            raise DimensionMismatch(f"dimensions differ: {f.dim} vs {g.dim}")
    order.check(f.dim)
    quotients, remainder = _divide(f, gens, order)
    return ReductionResult(quotients, remainder)


def normal_form(f: Polynomial, G: GroebnerBasis | Sequence[Polynomial], order: MonomialOrder | None = None) -> Polynomial:
    return reduce(f, G, order).remainder


def s_polynomial(gi: Polynomial, gj: Polynomial, order: MonomialOrder = LEX1) -> Polynomial:
    if gi.is_zero() or gj.is_zero():
        raise ValueError("S-polynomial of the zero polynomial is undefined")
    if gi.dim != gj.dim:
        raise DimensionMismatch(f"dimensions differ: {gi.dim} vs {gj.dim}")
    ei, ci = gi.leading_term(order)
    ej, cj = gj.leading_term(order)
    lcm = exponent_lcm(ei, ej)
    return gi.shift(exponent_sub(lcm, ei), 1 / ci) - gj.shift(exponent_sub(lcm, ej), 1 / cj)


def _canonical(gens: Iterable[Polynomial], order: MonomialOrder) -> tuple[Polynomial, ...]:
    return tuple(sorted(gens, key=lambda g: g.leading_exponent(order), reverse=True))


def _interreduce(gens: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    # drop generators whose leading monomial is divisible by another's
    gens = [g.monic(order) for g in gens]
    gens.sort(key=lambda g: order.key(g.leading_exponent(order)))
    minimal: list[Polynomial] = []
    for g in gens:
        lm = g.leading_exponent(order)
        if not any(exponent_leq(h.leading_exponent(order), lm) for h in minimal):
            minimal.append(g)
    out = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        if others:
            lm = g.leading_exponent(order)
            tail = g - Polynomial.monomial(lm)
            g = Polynomial.monomial(lm) + _divide(tail, others, order)[1]
        out.append(g)
    return out


def buchberger_reduced(F: Iterable[Polynomial], order: MonomialOrder = LEX1) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``F``."""
    basis = [f for f in F if not f.is_zero()]
    if not basis:
        raise ValueError("the zero ideal has no reduced Groebner basis here")
    dims = {f.dim for f in basis}
    if len(dims) != 1:
        raise DimensionMismatch("input polynomials have different dimensions")
    order.check(basis[0].dim)
    basis = [f.monic(order) for f in basis]
    lms = [f.leading_exponent(order) for f in basis]
    pairs = {(i, j) for i, j in combinations(range(len(basis)), 2)}
    key = order.key
    while pairs:
        # normal strategy: smallest lcm first
        i, j = min(pairs, key=lambda p: (key(exponent_lcm(lms[p[0]], lms[p[1]])), p))
        pairs.discard((i, j))
        a, b = lms[i], lms[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        r = _divide(s_polynomial(basis[i], basis[j], order), basis, order)[1]
        if r.is_zero():
            continue
        r = r.monic(order)
        k = len(basis)
        basis.append(r)
        lms.append(r.leading_exponent(order))
        pairs.update((m, k) for m in range(k))
    return GroebnerBasis(_canonical(_interreduce(basis, order), order), order, True)


def is_groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder = LEX1) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    gens = list(gens)
    for gi, gj in combinations(gens, 2):
        if not _divide(s_polynomial(gi, gj, order), gens, order)[1].is_zero():
            return False
    return True


def is_reduced_basis(gens: Sequence[Polynomial], order: MonomialOrder = LEX1) -> bool:
    """Monic, and no term of any generator divisible by another generator's leading monomial."""
    lts = [g.leading_term(order) for g in gens]
    if any(c != 1 for _, c in lts):
        return False
    for j, g in enumerate(gens):
        for k, (lm, _) in enumerate(lts):
            if k != j and any(exponent_leq(lm, e) for e in g.exponents()):
                return False
    return True


def escalier(G: GroebnerBasis) -> OrderIdeal:
    """Standard monomials of a zero-dimensional ideal given by its reduced basis."""
    lms = G.leading_exponents
    dim = G.dim
    for i in range(dim):
        if not any(e[i] > 0 and all(k == 0 for t, k in enumerate(e) if t != i) for e in lms):
            raise NotZeroDimensional(f"no leading monomial is a pure power of x{i + 1}")
    minimal = {e for e in lms if not any(exponent_lt(o, e) for o in lms)}
    return escalier_from_corners(minimal, dim)


def classify_universal(G: GroebnerBasis) -> bool:
    """True iff every non-leading exponent lies strictly below its generator's leading exponent."""
    for g, lm in zip(G.generators, G.leading_exponents):
        for e in g.exponents():
            if e != lm and not exponent_lt(e, lm):
                return False
    return True


@dataclass(frozen=True)
class LexFamily:
    escaliers: tuple[OrderIdeal, ...]
    bases: tuple[GroebnerBasis, ...]
    all_equal: bool


def family_from_bases(bases: Sequence[GroebnerBasis]) -> LexFamily:
    escs = tuple(escalier(G) for G in bases)
    all_equal = all(e == escs[0] for e in escs)
    structural = classify_universal(bases[0])
    if structural != all_equal:
        # the two characterizations are equivalent; disagreement means a bug
        raise AssertionError(
            f"structural test ({structural}) disagrees with lex escalier family ({all_equal})"
        )
    return LexFamily(escs, tuple(bases), all_equal)


def lex_escalier_family(F: Iterable[Polynomial]) -> LexFamily:
    """Escaliers of the ideal under Lex(1), ..., Lex(d) and whether they coincide."""
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ValueError("empty generating set")
    dim = F[0].dim
    bases = [buchberger_reduced(F, MonomialOrder.lex(i)) for i in range(1, dim + 1)]
    return family_from_bases(bases)
