"""Degree-reducing and minimal-degree checks for interpolation spaces spanned by escaliers."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .conditions import ConditionSet, RationalMatrix, is_poised, rank_and_det
from .errors import DimensionMismatch, NotPoised
from .order_ideal import OrderIdeal, monomials_up_to_degree
from .poly import Exponent, Polynomial
from .projector import IdealProjector, project


@dataclass(frozen=True)
class MinimalDegreeReport:
    r: int
    degree_reducing: bool
    rank_lower: int
    n: int
    minimal: bool
    lower_monomials: tuple[Exponent, ...] = ()


def is_degree_reducing(P: IdealProjector) -> bool:
    """deg(P x^gamma) <= deg(x^gamma) for every monomial up to the top degree of the range."""
    r = P.escalier.max_degree
    for gamma in monomials_up_to_degree(P.dim, r):
        if project(P, Polynomial.monomial(gamma)).total_degree() > sum(gamma):
            return False
    return True


def _report(apply: Callable[[Polynomial], Sequence], n: int, O: OrderIdeal, degree_reducing: bool) -> MinimalDegreeReport:
    r = O.max_degree
    lower = monomials_up_to_degree(O.dim, r - 1)
    if lower:
        cols = [apply(Polynomial.monomial(e)) for e in lower]
        M = RationalMatrix.from_rows([[col[i] for col in cols] for i in range(n)], len(lower))
        rank = rank_and_det(M)[0]
    else:
        rank = 0
    return MinimalDegreeReport(r, degree_reducing, rank, n, rank < n, tuple(lower))


def minimal_degree_check(conditions: ConditionSet, O: OrderIdeal, P: IdealProjector | None = None) -> MinimalDegreeReport:
    """
    Rank of the collocation matrix over every monomial of degree < r, where r
    is the top degree of ``O``; the space is minimal iff that rank is below n.

    ``degree_reducing`` is taken from ``P`` when given, otherwise from the
    projector whose kernel is the vanishing ideal of ``conditions``.
    """
    n = len(conditions)
    if len(O) != n:
        raise DimensionMismatch(f"|O| = {len(O)} but there are {n} conditions")
    if not is_poised(conditions, O):
        raise NotPoised("the collocation matrix over O is singular")
    if P is None:
        from .projector import projector_from_conditions

        P = projector_from_conditions(conditions)
    if P.escalier != O:
        degree_reducing = False
    else:
        degree_reducing = is_degree_reducing(P)
    return _report(conditions, n, O, degree_reducing)


def projector_minimal_degree(P: IdealProjector) -> MinimalDegreeReport:
    """
    Minimal-degree report for a projector given without explicit conditions.

    The conditions used are the coefficient functionals f -> [x^b] Pf for b in
    the escalier; they are matched by P and their collocation matrix over the
    escalier is the identity.
    """
    basis = P.escalier.sorted()

    def apply(f: Polynomial):
        Pf = project(P, f)
        return [Pf.coefficient(b) for b in basis]

    return _report(apply, len(basis), P.escalier, is_degree_reducing(P))
