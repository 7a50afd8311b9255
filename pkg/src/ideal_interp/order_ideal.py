"""Finite lower sets of exponents, their corner sets, and escaliers of monomial ideals."""
from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Sequence

from .config import max_degree
from .errors import DimensionMismatch, IdealInterpError, NotLowerSet, NotZeroDimensional
from .poly import LEX1, Exponent, MonomialOrder, Polynomial, exponent_leq, exponent_lt


def _dimension_of(exps: Iterable[Exponent], dim: int | None) -> int | None:
    for e in exps:
        if dim is None:
            dim = len(e)
        elif len(e) != dim:
            raise DimensionMismatch(f"exponent {e} does not have dimension {dim}")
    return dim


def is_lower_set(members: Iterable[Sequence[int]]) -> bool:
    """True iff the set is closed under componentwise decrease."""
    members = {tuple(e) for e in members}
    _dimension_of(members, None)
    for e in members:
        for i, k in enumerate(e):
            if k and e[:i] + (k - 1,) + e[i + 1:] not in members:
                return False
    return True


def is_antichain(exps: Iterable[Exponent]) -> bool:
    exps = list(exps)
    return not any(exponent_lt(a, b) for a in exps for b in exps)


class CornerSet:
    """Pairwise incomparable exponents; the minimal generators of a monomial ideal."""

    __slots__ = ("corners", "dim")

    def __init__(self, corners: Iterable[Sequence[int]], dim: int | None = None):
        corners = frozenset(tuple(c) for c in corners)
        dim = _dimension_of(corners, dim)
        if dim is None:
            raise ValueError("dimension of an empty corner set must be given")
        if not is_antichain(corners):
            raise ValueError("corner set must be an antichain under componentwise order")
        self.corners = corners
        self.dim = dim

    def sorted(self, order: MonomialOrder = LEX1, reverse: bool = False) -> list[Exponent]:
        return sorted(self.corners, key=order.key, reverse=reverse)

    def divides(self, exp: Exponent) -> bool:
        """True iff some corner divides x^exp."""
        return any(exponent_leq(c, exp) for c in self.corners)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.corners)

    def __contains__(self, exp) -> bool:
        return tuple(exp) in self.corners

    def __eq__(self, other) -> bool:
        if isinstance(other, CornerSet):
            return self.dim == other.dim and self.corners == other.corners
        if isinstance(other, (set, frozenset)):
            return self.corners == {tuple(e) for e in other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.dim, self.corners))

    def __repr__(self) -> str:
        return f"CornerSet({self.sorted()})"


class OrderIdeal:
    """A finite divisibility-closed set of exponents (the escalier O)."""

    def __init__(self, members: Iterable[Sequence[int]], dim: int | None = None):
        members = frozenset(tuple(e) for e in members)
        dim = _dimension_of(members, dim)
        if dim is None:
            raise ValueError("dimension of an empty order ideal must be given")
        if not is_lower_set(members):
            raise NotLowerSet(f"{sorted(members)} is not closed under division")
        self.members = members
        self.dim = dim

    @cached_property
    def corners(self) -> CornerSet:
        return corner_set(self)

    @cached_property
    def _bounds(self) -> Exponent:
        return tuple(max((e[i] for e in self.members), default=-1) for i in range(self.dim))

    @property
    def max_degree(self) -> int:
        """Largest total degree of a member (-1 when empty)."""
        return max((sum(e) for e in self.members), default=-1)

    def sorted(self, order: MonomialOrder = LEX1, reverse: bool = False) -> list[Exponent]:
        return sorted(self.members, key=order.key, reverse=reverse)

    def monomials(self, order: MonomialOrder = LEX1) -> list[Polynomial]:
        return [Polynomial.monomial(e) for e in self.sorted(order)]

    def __contains__(self, exp) -> bool:
        exp = tuple(exp)
        if len(exp) != self.dim:
            return False
        # exponents beyond the bounding box cannot be members
        if any(k > b for k, b in zip(exp, self._bounds)):
            return False
        return exp in self.members

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, OrderIdeal):
            return self.dim == other.dim and self.members == other.members
        if isinstance(other, (set, frozenset)):
            return self.members == {tuple(e) for e in other}
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.dim, self.members))

    def __repr__(self) -> str:
        return f"OrderIdeal({self.sorted()})"


def corner_set(O: OrderIdeal) -> CornerSet:
    """Minimal exponents outside ``O``."""
    dim = O.dim
    if not O.members:
        return CornerSet([(0,) * dim], dim)
    candidates = set()
    for e in O.members:
        for i in range(dim):
            t = e[:i] + (e[i] + 1,) + e[i + 1:]
            if t not in O.members:
                candidates.add(t)
    corners = []
    for t in candidates:
        if all(t[:i] + (t[i] - 1,) + t[i + 1:] in O.members for i in range(dim) if t[i]):
            corners.append(t)
    return CornerSet(corners, dim)


def escalier_from_corners(corners: CornerSet | Iterable[Sequence[int]], dim: int | None = None) -> OrderIdeal:
    """All exponents divisible by no corner; requires a pure power of each variable."""
    if not isinstance(corners, CornerSet):
        corners = CornerSet(corners, dim)
    dim = corners.dim
    bounds = []
    for i in range(dim):
        powers = [c[i] for c in corners.corners if all(k == 0 for j, k in enumerate(c) if j != i)]
        if not powers:
            raise NotZeroDimensional(f"no pure power of x{i + 1} among the corners: infinite complement")
        bounds.append(min(powers))
    cap = max_degree()
    if any(b > cap + 1 for b in bounds):
        raise IdealInterpError(f"escalier exceeds the enumeration cap of degree {cap}")
    members = [e for e in product(*(range(b) for b in bounds)) if not corners.divides(e)]
    return OrderIdeal(members, dim)


def monomials_up_to_degree(dim: int, degree: int) -> list[Exponent]:
    """All exponents of total degree <= ``degree`` (empty when degree < 0)."""
    if degree < 0:
        return []
    out: list[Exponent] = []

    def rec(prefix: tuple, remaining: int, left: int):
        if left == 1:
            for k in range(remaining + 1):
                out.append(prefix + (k,))
            return
        for k in range(remaining + 1):
            rec(prefix + (k,), remaining - k, left - 1)

    rec((), degree, dim)
    return sorted(out, key=lambda e: (sum(e), e))
