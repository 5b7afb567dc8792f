"""Finite-difference derivatives with Richardson extrapolation.

Ridders' scheme generalised to the k-th derivative: a k-th order central
difference whose error expands in even powers of the step is evaluated on
a geometrically shrinking sequence of steps and extrapolated in a Neville
tableau.  The tableau entry with the smallest error estimate wins.
"""

from math import comb

__all__ = ["central_difference", "richardson_derivative"]


def central_difference(f, x, k, h):
    """k-th central difference quotient of ``f`` at ``x`` with step ``h``."""
    total = 0.0
    for j in range(k + 1):
        total += (-1) ** j * comb(k, j) * f(x + (0.5 * k - j) * h)
    return total / h**k


def richardson_derivative(f, x, k=1, h=0.1, con=1.4, ntab=10, safe=2.0):
    """Estimate ``f^(k)(x)``; returns ``(value, error_estimate)``.

    The stencil reaches ``x +- k*h/2``, so ``f`` must be defined there.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if h <= 0.0:
        raise ValueError("h must be positive")
    con2 = con * con
    table = [[central_difference(f, x, k, h)]]
    best, err = table[0][0], float("inf")
    hh = h
    for i in range(1, ntab):
        hh /= con
        row = [central_difference(f, x, k, hh)]
        fac = con2
        for j in range(1, i + 1):
            row.append((row[j - 1] * fac - table[i - 1][j - 1]) / (fac - 1.0))
            fac *= con2
            errt = max(abs(row[j] - row[j - 1]), abs(row[j] - table[i - 1][j - 1]))
            if errt <= err:
                err, best = errt, row[j]
        table.append(row)
        if abs(row[i] - table[i - 1][i - 1]) >= safe * err:
            break
    return best, err
