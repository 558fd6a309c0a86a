"""Dimensions and quadratic Casimir eigenvalues of SU(N) irreps.

Concrete dimensions come from the hook-content product; the Weyl product over
pairs of rows is kept as an independent oracle.  Symbolic dimensions of a
stable sequence are recovered by exact interpolation, and the Casimir is given
in closed form as a Laurent polynomial in N.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import _kernels
from .laurent import LaurentPoly
from .partitions import YoungDiagram
from .stable import (
    DynkinLabels,
    StableRep,
    n_min,
    realized_young,
    young_to_labels_cols,
    young_to_labels_rows,
)

__all__ = [
    "DegreeBoundError",
    "dim_hook",
    "dim_weyl_oracle",
    "dim_stable",
    "dim_polynomial",
    "casimir_formula",
    "casimir_direct",
    "casimir_cross_term",
    "casimir_labels",
]


class DegreeBoundError(ArithmeticError):
    """Interpolated dimension has terms above degree area(lam) + area(tau)."""


def _check_rank(n: int):
    if n < 1:
        raise ValueError(f"rank N must be >= 1, got {n}")


def dim_hook(y: YoungDiagram, n: int) -> int:
    """Product of (n + content) over boxes divided by the product of hook lengths."""
    _check_rank(n)
    if y.num_rows > n:
        return 0
    return _kernels.hook_content_dim(y.rows, n)


def dim_weyl_oracle(y: YoungDiagram, n: int) -> int:
    _check_rank(n)
    if y.num_rows > n:
        return 0
    return _kernels.weyl_dim(y.rows, n)


def dim_stable(rep: StableRep, n: int) -> int:
    return dim_hook(realized_young(rep, n), n)


@lru_cache(maxsize=8192)
def dim_polynomial(rep: StableRep) -> LaurentPoly:
    """Dimension of D(lam, tau) as a polynomial in N.

    Interpolates at ``area + 4`` consecutive ranks starting from ``n_min`` and
    insists that nothing survives above degree ``area``.
    """
    start = n_min(rep)
    bound = rep.area
    nodes = range(start, start + bound + 4)
    coeffs, den = _kernels.interp_consecutive(start, [dim_stable(rep, n) for n in nodes])
    poly = LaurentPoly({e: Fraction(c, den) for e, c in enumerate(coeffs)})
    if poly.degree is not None and poly.degree > bound:
        raise DegreeBoundError(f"{rep}: interpolated degree {poly.degree} exceeds {bound}")
    return poly


def casimir_labels(rep: StableRep) -> tuple[list[int], list[int]]:
    """The lam and tau label blocks, zero-padded to a common length k."""
    lam = list(young_to_labels_cols(rep.lam))
    tau = list(young_to_labels_rows(rep.tau))
    k = max(len(lam), len(tau))
    return lam + [0] * (k - len(lam)), tau + [0] * (k - len(tau))


def _min_form(labels: list[int]) -> int:
    return sum(
        min(i, j) * li * lj
        for i, li in enumerate(labels, start=1)
        for j, lj in enumerate(labels, start=1)
    )


@lru_cache(maxsize=8192)
def casimir_formula(rep: StableRep) -> LaurentPoly:
    lam, tau = casimir_labels(rep)
    idx = range(1, len(lam) + 1)
    linear = sum(i * (l + t) for i, l, t in zip(idx, lam, tau))
    constant = (
        _min_form(lam)
        + _min_form(tau)
        - sum(i * i * (l + t) for i, l, t in zip(idx, lam, tau))
    )
    pole = sum(i * (l - t) for i, l, t in zip(idx, lam, tau)) ** 2
    return LaurentPoly({1: linear, 0: constant, -1: -pole})


def casimir_direct(labels: DynkinLabels) -> Fraction:
    """(w, w) + 2 (w, rho) for the highest weight w = sum_i labels[i] * omega_i.

    Uses (omega_i, omega_j) = min(i, j) - i j / N, long roots of length^2 2,
    and rho = sum of all fundamental weights.
    """
    n = labels.rank_n
    lab = labels.labels

    def pair(i, j):
        return min(i, j) - Fraction(i * j, n)

    support = [(i, m) for i, m in enumerate(lab, start=1) if m]
    ww = sum((mi * mj * pair(i, j) for i, mi in support for j, mj in support), Fraction(0))
    wrho = sum((mi * pair(i, j) for i, mi in support for j in range(1, n)), Fraction(0))
    return ww + 2 * wrho


def casimir_cross_term(rep: StableRep) -> LaurentPoly:
    return LaurentPoly({-1: 2 * rep.lam.area * rep.tau.area})
