"""Exact rational feasibility for nonnegative linear combinations.

Phase-1 simplex over ``fractions.Fraction`` with Bland's pivoting rule,
which guarantees termination; no floating point, so membership answers
are exact and usable as a two-sided oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def nonnegative_combination(columns: Sequence[Sequence[int | Fraction]],
                            target: Sequence[int | Fraction]) -> list[Fraction] | None:
    """Solve ``sum(lambda_j * columns[j]) == target`` with all lambda_j >= 0.

    Returns one exact solution as a list of Fractions, or None when the
    system is infeasible.
    """
    m = len(target)
    k = len(columns)
    if k == 0:
        return [] if all(x == 0 for x in target) else None
    a = [[Fraction(columns[j][r]) for j in range(k)] for r in range(m)]
    b = [Fraction(target[r]) for r in range(m)]
    for r in range(m):
        if b[r] < 0:
            b[r] = -b[r]
            a[r] = [-x for x in a[r]]

    # Tableau: k structural columns, m artificial columns, rhs last.
    rows = [a[r] + [Fraction(int(i == r)) for i in range(m)] + [b[r]] for r in range(m)]
    basis = [k + r for r in range(m)]
    width = k + m
    # Reduced-cost row for minimizing the artificial sum: z[j] > 0 marks an
    # improving column; z[-1] is the current objective value.
    z = [sum(rows[r][j] for r in range(m)) for j in range(width + 1)]
    for r in range(m):
        z[k + r] -= 1  # artificial columns carry unit cost

    while True:
        enter = next((j for j in range(width) if z[j] > 0), None)
        if enter is None:
            break
        best_row = None
        best_ratio = None
        for r in range(m):
            coeff = rows[r][enter]
            if coeff > 0:
                ratio = rows[r][width] / coeff
                if (best_ratio is None or ratio < best_ratio
                        or (ratio == best_ratio and basis[r] < basis[best_row])):
                    best_ratio = ratio
                    best_row = r
        assert best_row is not None, "phase-1 objective is bounded below by zero"
        pivot = rows[best_row][enter]
        rows[best_row] = [x / pivot for x in rows[best_row]]
        for r in range(m):
            if r != best_row and rows[r][enter]:
                factor = rows[r][enter]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[best_row])]
        factor = z[enter]
        z = [x - factor * y for x, y in zip(z, rows[best_row])]
        basis[best_row] = enter

    if z[width] != 0:
        return None
    solution = [Fraction(0)] * k
    for r, j in enumerate(basis):
        if j < k:
            solution[j] = rows[r][width]
    assert all(x >= 0 for x in solution)
    for r in range(m):
        total = sum(solution[j] * Fraction(columns[j][r]) for j in range(k))
        assert total == Fraction(target[r])
    return solution


def in_cone(generators: Iterable[Sequence[int | Fraction]],
            target: Sequence[int | Fraction]) -> bool:
    """True iff ``target`` is a nonnegative rational combination of ``generators``."""
    return nonnegative_combination(list(generators), target) is not None
