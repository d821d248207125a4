"""Textbook two-phase simplex over exact rationals.

Solves  min c.x  subject to  A x = b, x >= 0  with every entry a Fraction.
Bland's rule (smallest-index entering variable, smallest-index tie break
on the leaving variable) guarantees termination without any tolerance
machinery.  Problem sizes in this package stay tiny (at most a few dozen
rows), so no effort is spent on sparse or revised variants.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact_math import RationalLike, as_rational


class Infeasible(ValueError):
    """The constraint system A x = b, x >= 0 has no solution."""


class Unbounded(ValueError):
    """The objective is unbounded below on the feasible region."""


def _pivot(tableau: list[list[Fraction]], basis: list[int], row: int, col: int) -> None:
    pivot = tableau[row][col]
    tableau[row] = [v / pivot for v in tableau[row]]
    for i, other in enumerate(tableau):
        if i != row and other[col] != 0:
            factor = other[col]
            tableau[i] = [v - factor * w for v, w in zip(other, tableau[row])]
    basis[row] = col


def _optimize(tableau: list[list[Fraction]], basis: list[int], cost: list[Fraction]) -> None:
    num_cols = len(tableau[0]) - 1
    basic = set(basis)
    while True:
        entering = -1
        for j in range(num_cols):
            if j in basic:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * tableau[i][j] for i in range(len(tableau)))
            if reduced < 0:
                entering = j
                break
        if entering < 0:
            return
        leaving = -1
        best_ratio = Fraction(0)
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if leaving < 0 or ratio < best_ratio or (
                    ratio == best_ratio and basis[i] < basis[leaving]
                ):
                    leaving, best_ratio = i, ratio
        if leaving < 0:
            raise Unbounded("objective is unbounded below")
        basic.discard(basis[leaving])
        basic.add(entering)
        _pivot(tableau, basis, leaving, entering)


def solve_min(
    cost: Sequence[RationalLike],
    matrix: Sequence[Sequence[RationalLike]],
    rhs: Sequence[RationalLike],
) -> tuple[Fraction, list[Fraction]]:
    """Minimize cost.x over {A x = b, x >= 0}; returns (value, solution)."""
    c = [as_rational(v) for v in cost]
    a = [[as_rational(v) for v in row] for row in matrix]
    b = [as_rational(v) for v in rhs]
    num_vars = len(c)
    if any(len(row) != num_vars for row in a) or len(b) != len(a):
        raise ValueError("inconsistent LP dimensions")
    for i in range(len(a)):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]

    num_rows = len(a)
    tableau = [
        a[i] + [Fraction(1 if j == i else 0) for j in range(num_rows)] + [b[i]]
        for i in range(num_rows)
    ]
    basis = [num_vars + i for i in range(num_rows)]
    phase1 = [Fraction(0)] * num_vars + [Fraction(1)] * num_rows
    _optimize(tableau, basis, phase1)
    if sum(phase1[basis[i]] * tableau[i][-1] for i in range(num_rows)) > 0:
        raise Infeasible("constraints admit no nonnegative solution")

    # Pivot leftover artificial variables out; a row with no usable pivot
    # is a redundant constraint and gets dropped.
    for i in range(num_rows - 1, -1, -1):
        if basis[i] >= num_vars:
            pivot_col = next((j for j in range(num_vars) if tableau[i][j] != 0), -1)
            if pivot_col < 0:
                del tableau[i]
                del basis[i]
            else:
                _pivot(tableau, basis, i, pivot_col)

    tableau = [row[:num_vars] + [row[-1]] for row in tableau]
    _optimize(tableau, basis, c)
    solution = [Fraction(0)] * num_vars
    for i, var in enumerate(basis):
        solution[var] = tableau[i][-1]
    value = sum((c[var] * solution[var] for var in range(num_vars)), Fraction(0))
    return value, solution
