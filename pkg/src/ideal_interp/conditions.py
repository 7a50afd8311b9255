"""
Hermite interpolation conditions, collocation matrices, exact linear algebra,
and the vanishing ideal of a condition set via a Moller-type dual basis run.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .config import max_degree
from .errors import DependentConditions, DimensionMismatch, IdealInterpError, NotLowerSet
from .groebner import GroebnerBasis, LexFamily, _canonical, family_from_bases
from .order_ideal import OrderIdeal, is_lower_set
from .poly import LEX1, Exponent, MonomialOrder, Polynomial, Scalar, derivative, exponent_leq


@dataclass(frozen=True)
class HermiteFunctional:
    """f -> (D^derivative f)(point), with the raw derivative (no 1/alpha!)."""

    point: tuple[Fraction, ...]
    derivative: Exponent

    def __post_init__(self):
        object.__setattr__(self, "point", tuple(Fraction(v) for v in self.point))
        object.__setattr__(self, "derivative", tuple(int(k) for k in self.derivative))
        if len(self.point) != len(self.derivative):
            raise DimensionMismatch("point and derivative index have different lengths")
        if any(k < 0 for k in self.derivative):
            raise ValueError("derivative indices must be nonnegative")

    @property
    def dim(self) -> int:
        return len(self.point)

    def __call__(self, f: Polynomial) -> Fraction:
        return apply_functional(self, f)


class ConditionSet:
    """An ordered sequence of Hermite functionals with a per-point grouped view."""

    def __init__(self, functionals: Iterable[HermiteFunctional]):
        self.functionals = tuple(functionals)
        if not self.functionals:
            raise ValueError("a condition set needs at least one functional")
        dims = {lam.dim for lam in self.functionals}
        if len(dims) != 1:
            raise DimensionMismatch("functionals live in different dimensions")
        self.dim = dims.pop()

    @classmethod
    def lagrange(cls, points: Iterable[Sequence[Scalar]]) -> "ConditionSet":
        points = [tuple(p) for p in points]
        return cls(HermiteFunctional(p, (0,) * len(p)) for p in points)

    @classmethod
    def hermite(cls, groups: Iterable[tuple[Sequence[Scalar], Iterable[Sequence[int]]]]) -> "ConditionSet":
        """Build from ``(point, derivative_indices)`` pairs."""
        return cls(HermiteFunctional(p, a) for p, ders in groups for a in ders)

    @property
    def groups(self) -> dict[tuple[Fraction, ...], list[Exponent]]:
        out: dict[tuple[Fraction, ...], list[Exponent]] = {}
        for lam in self.functionals:
            out.setdefault(lam.point, []).append(lam.derivative)
        return out

    @property
    def points(self) -> list[tuple[Fraction, ...]]:
        return list(self.groups)

    def __len__(self) -> int:
        return len(self.functionals)

    def __iter__(self):
        return iter(self.functionals)

    def __call__(self, f: Polynomial) -> list[Fraction]:
        return [apply_functional(lam, f) for lam in self.functionals]

    def __repr__(self) -> str:
        return f"ConditionSet({len(self)} functionals, {len(self.groups)} points, d={self.dim})"


def apply_functional(lam: HermiteFunctional, f: Polynomial) -> Fraction:
    if lam.dim != f.dim:
        raise DimensionMismatch(f"functional in {lam.dim} variables applied to polynomial in {f.dim}")
    if any(lam.derivative):
        f = derivative(f, lam.derivative)
    return f.evaluate(lam.point)


def validate_conditions(conditions: ConditionSet) -> bool:
    """No repeated functional, and the derivative indices at every point form a lower set."""
    if len(set(conditions.functionals)) != len(conditions.functionals):
        return False
    return all(is_lower_set(ders) for ders in conditions.groups.values())


# ---------------------------------------------------------------------------
# exact linear algebra
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class RationalMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]], ncols: int | None = None) -> "RationalMatrix":
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("matrix rows have different lengths")
        return cls(rows, ncols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def column(self, j: int) -> list[Fraction]:
        return [r[j] for r in self.rows]

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]


def collocation_matrix(conditions: ConditionSet, F: Sequence[Polynomial]) -> RationalMatrix:
    """Entry (i, j) is lambda_i(f_j)."""
    for f in F:
        if f.dim != conditions.dim:
            raise DimensionMismatch("polynomial and conditions have different dimensions")
    cols = [conditions(f) for f in F]
    rows = [tuple(col[i] for col in cols) for i in range(len(conditions))]
    return RationalMatrix(tuple(rows), len(F))


def rank_and_det(M: RationalMatrix | Sequence[Sequence[Scalar]]) -> tuple[int, Fraction | None]:
    """
    Rank (and determinant when square) by fraction-free elimination.

    Rows are first scaled to integers; the Bareiss update then keeps every
    intermediate entry an integer minor, so each division is exact.
    """
    if not isinstance(M, RationalMatrix):
        M = RationalMatrix.from_rows(M)
    nrows, ncols = M.shape
    scale = Fraction(1)
    A: list[list[int]] = []
    for r in M.rows:
        m = lcm(*(v.denominator for v in r)) if r else 1
        A.append([int(v * m) for v in r])
        scale *= m
    sign = 1
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if A[i][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            A[rank], A[piv] = A[piv], A[rank]
            sign = -sign
        p = A[rank][col]
        for i in range(rank + 1, nrows):
            a = A[i][col]
            row = A[i]
            top = A[rank]
            for k in range(col + 1, ncols):
                q, rem = divmod(p * row[k] - a * top[k], prev)
                assert rem == 0, "fraction-free elimination lost exactness"
                row[k] = q
            row[col] = 0
        prev = p
        rank += 1
    det = None
    if nrows == ncols:
        det = Fraction(0) if rank < nrows else Fraction(sign * (prev if nrows else 1)) / scale
    return rank, det


def matrix_rank(M: RationalMatrix | Sequence[Sequence[Scalar]]) -> int:
    return rank_and_det(M)[0]


def is_poised(conditions: ConditionSet, O: OrderIdeal) -> bool:
    if len(O) != len(conditions):
        raise DimensionMismatch(f"|O| = {len(O)} but there are {len(conditions)} conditions")
    rank, _ = rank_and_det(collocation_matrix(conditions, O.monomials()))
    return rank == len(conditions)


# ---------------------------------------------------------------------------
# vanishing ideal
# ---------------------------------------------------------------------------
def _check_conditions(conditions: ConditionSet) -> None:
    if len(set(conditions.functionals)) != len(conditions.functionals):
        raise DependentConditions("repeated functional in the condition set")
    for point, ders in conditions.groups.items():
        if not is_lower_set(ders):
            raise NotLowerSet(f"derivative indices at point {tuple(map(str, point))} do not form a lower set")


def moller_vanishing_gb(conditions: ConditionSet, order: MonomialOrder = LEX1) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal of polynomials annihilated by every condition.

    Monomials are visited in ascending ``order`` starting from 1, always taking
    the smallest unvisited multiple ``x_i * t`` of an accepted standard monomial.
    Each evaluation vector is eliminated against the accepted ones; a zero
    residual yields the generator ``x^gamma - (dependency)``, otherwise the
    monomial becomes standard.
    """
    _check_conditions(conditions)
    dim = conditions.dim
    order.check(dim)
    n = len(conditions)
    cap = max_degree()
    key = order.key

    # echelon rows: (pivot index, vector with pivot 1, polynomial whose image is the vector)
    echelon: list[tuple[int, list[Fraction], dict[Exponent, Fraction]]] = []
    standard: list[Exponent] = []
    leading: list[Exponent] = []
    generators: list[Polynomial] = []

    zero = (0,) * dim
    heap = [(key(zero), zero)]
    seen = {zero}
    while heap:
        _, gamma = heapq.heappop(heap)
        if any(exponent_leq(lm, gamma) for lm in leading):
            continue
        if sum(gamma) > cap:
            raise IdealInterpError(f"monomial enumeration exceeded degree cap {cap}")
        mono = Polynomial.monomial(gamma)
        vec = conditions(mono)
        comb: dict[Exponent, Fraction] = {gamma: Fraction(1)}
        for piv, row, rcomb in echelon:
            c = vec[piv]
            if c:
                for i in range(n):
                    if row[i]:
                        vec[i] -= c * row[i]
                for e, v in rcomb.items():
                    comb[e] = comb.get(e, 0) - c * v
        piv = next((i for i in range(n) if vec[i] != 0), None)
        if piv is None:
            generators.append(Polynomial._raw(comb, dim))
            leading.append(gamma)
            continue
        inv = 1 / vec[piv]
        echelon.append((piv, [v * inv for v in vec], {e: v * inv for e, v in comb.items() if v}))
        standard.append(gamma)
        for i in range(dim):
            t = gamma[:i] + (gamma[i] + 1,) + gamma[i + 1:]
            if t not in seen:
                seen.add(t)
                heapq.heappush(heap, (key(t), t))
    if len(standard) != n:
        raise DependentConditions(
            f"conditions span a space of dimension {len(standard)}, expected {n}"
        )
    return GroebnerBasis(_canonical(generators, order), order, True)


def vanishing_lex_family(conditions: ConditionSet) -> LexFamily:
    """Escaliers of the vanishing ideal under Lex(1), ..., Lex(d)."""
    bases = [moller_vanishing_gb(conditions, MonomialOrder.lex(i)) for i in range(1, conditions.dim + 1)]
    return family_from_bases(bases)
