"""
Independent reference computations used to freeze expected values.

Nothing here calls the code paths under test except the polynomial type
itself (and, for the vanishing-ideal oracle, the generic Buchberger routine,
which is independent of the dual-basis algorithm it is compared against).
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product

from ideal_interp.poly import Polynomial


def rank_by_fractions(rows):
    """Plain Gauss-Jordan elimination over Fraction."""
    A = [[Fraction(v) for v in r] for r in rows]
    if not A:
        return 0
    ncols = len(A[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(len(A)):
            if i != rank and A[i][c] != 0:
                f = A[i][c] / A[rank][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def det_by_permutations(rows):
    """Leibniz formula; fine for the tiny matrices in the tests."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, p in enumerate(perm):
            term *= Fraction(rows[i][p])
        total += term
    return total


def brute_corners(members, dim, box):
    """Minimal exponents outside ``members`` found by scanning a box."""
    members = set(members)
    outside = [e for e in product(range(box + 1), repeat=dim) if e not in members]
    return {
        e for e in outside
        if not any(o != e and all(x <= y for x, y in zip(o, e)) for o in outside)
    }


def brute_standard_monomials(corners, dim, box):
    return {
        e for e in product(range(box + 1), repeat=dim)
        if not any(all(c <= k for c, k in zip(a, e)) for a in corners)
    }


def raw_derivative_value(f: Polynomial, alpha, point):
    """(D^alpha f)(point) expanded term by term with falling factorials."""
    total = Fraction(0)
    for gamma, c in f.items():
        if any(a > g for a, g in zip(alpha, gamma)):
            continue
        term = Fraction(c)
        for a, g, x in zip(alpha, gamma, point):
            for k in range(a):
                term *= g - k
            term *= Fraction(x) ** (g - a)
        total += term
    return total


def vanishing_ideal_by_products(points, dim, order, buchberger):
    """
    Reduced basis of the ideal of distinct points built as a product of
    maximal ideals (pairwise comaximal, so product = intersection).

    The product is accumulated one point at a time: the generators of
    I * m_p are the products g * (x_i - p_i).  Every generator is checked to
    vanish on the points seen so far before it is passed on.
    """
    def linear(i, p):
        return Polynomial.variable(i, dim) - Fraction(p[i])

    gens = [linear(i, points[0]) for i in range(dim)]
    seen = [points[0]]
    for p in points[1:]:
        seen.append(p)
        gens = [g * linear(i, p) for g in gens for i in range(dim)]
        assert all(g.evaluate(q) == 0 for g in gens for q in seen)
        gens = list(buchberger(gens, order).generators)
    return buchberger(gens, order)
