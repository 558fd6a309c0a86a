"""Pure-Python integer kernels; same contracts as the compiled ``_ckernels``."""
from __future__ import annotations

from math import factorial, prod


def hook_content_dim(rows: tuple[int, ...], n: int) -> int:
    if not rows:
        return 1
    cols = [sum(1 for r in rows if r >= j) for j in range(1, rows[0] + 1)]
    num = 1
    den = 1
    for r, length in enumerate(rows, start=1):
        for c in range(1, length + 1):
            num *= n + c - r
            den *= (length - c) + (cols[c - 1] - r) + 1
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"hook-content quotient is not integral for {rows} at N={n}")
    return q


def weyl_dim(rows: tuple[int, ...], n: int) -> int:
    ell = list(rows) + [0] * (n - len(rows))
    num = prod(ell[i] - ell[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"Weyl quotient is not integral for {rows} at N={n}")
    return q


def interp_consecutive(x0: int, values: list[int]) -> tuple[list[int], int]:
    """Integer interpolation through ``(x0 + i, values[i])``.

    Returns ``(coeffs, den)`` with ``P(N) = sum(coeffs[e] * N**e) / den`` and
    ``den = (len(values) - 1)!``.
    """
    m = len(values)
    den = factorial(m - 1)
    coeffs = [0] * m
    basis = [1]  # prod_{i<k} (N - x0 - i)
    row = list(values)
    for k in range(m):
        scale = row[0] * (den // factorial(k))
        for e, b in enumerate(basis):
            coeffs[e] += scale * b
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
        root = x0 + k
        basis = [0] + basis
        for e in range(len(basis) - 1):
            basis[e] -= root * basis[e + 1]
    return coeffs, den
