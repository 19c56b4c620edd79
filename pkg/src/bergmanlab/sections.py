"""Finite sections of Toeplitz operators and Hankel products on A^2(Omega).

The orthonormal basis is e_{alpha beta} = z^alpha w^beta / c_{alpha beta} in
graded lexicographic order on (alpha + beta, alpha).  Entries follow the
angular selection rule: a term z^a zbar^b w^c wbar^d couples e_{alpha beta}
to e_{gamma delta} only when gamma = alpha + a - b and delta = beta + c - d,
and the surviving pairing is a single moment.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian
from .moments import MomentTable
from .symbols import MonomialSymbol


def graded_indices(n_z: int, n_w: int) -> tuple[tuple[int, int], ...]:
    """Basis order: all (alpha, beta) with alpha <= n_z, beta <= n_w, graded."""
    idx = [(a, b) for a in range(n_z + 1) for b in range(n_w + 1)]
    idx.sort(key=lambda t: (t[0] + t[1], t[0]))
    return tuple(idx)


def symbol_inner(table: MomentTable, u: MonomialSymbol, v: MonomialSymbol) -> complex:
    """<u, v>_{L^2(Omega)}: pairs survive iff both angular shifts match."""
    groups: dict[tuple[int, int], list] = {}
    for term in v.terms:
        _, a, b, c, d = term
        groups.setdefault((a - b, c - d), []).append(term)
    total = 0.0 + 0.0j
    for cu, a1, b1, c1, d1 in u.terms:
        for cv, a2, b2, c2, d2 in groups.get((a1 - b1, c1 - d1), ()):
            total += cu * cv.conjugate() * table.moment(a1 + a2 + b1 + b2, c1 + c2 + d1 + d2)
    return total


def symbol_inner_error(table: MomentTable, u: MonomialSymbol, v: MonomialSymbol) -> float:
    """First-order bound on the quadrature error of symbol_inner."""
    groups: dict[tuple[int, int], list] = {}
    for term in v.terms:
        _, a, b, c, d = term
        groups.setdefault((a - b, c - d), []).append(term)
    total = 0.0
    for cu, a1, b1, c1, d1 in u.terms:
        for cv, a2, b2, c2, d2 in groups.get((a1 - b1, c1 - d1), ()):
            _, err = table.moment_with_error(a1 + a2 + b1 + b2, c1 + c2 + d1 + d2)
            total += abs(cu) * abs(cv) * err
    return total


def project_symbol(table: MomentTable, u: MonomialSymbol) -> MonomialSymbol:
    """Bergman projection P^Omega of a bi-monomial symbol.

    z^a zbar^b w^c wbar^d maps to (mu(2a, 2c) / mu(2(a-b), 2(c-d))) z^{a-b}
    w^{c-d} when a >= b and c >= d, else to zero.
    """
    out = []
    for coeff, a, b, c, d in u.terms:
        if a >= b and c >= d:
            ratio = table.moment(2 * a, 2 * c) / table.moment(2 * (a - b), 2 * (c - d))
            out.append((coeff * ratio, a - b, 0, c - d, 0))
    return MonomialSymbol.from_terms(out)


def hankel_pairing(
    table: MomentTable,
    phi: MonomialSymbol,
    f1: MonomialSymbol,
    psi: MonomialSymbol,
    f2: MonomialSymbol,
) -> complex:
    """<H_phi f1, H_psi f2>_Omega for holomorphic payloads f1, f2."""
    u = phi * f1
    v = psi * f2
    return symbol_inner(table, u, v) - symbol_inner(
        table, project_symbol(table, u), project_symbol(table, v)
    )


@dataclass(frozen=True)
class OperatorSection:
    """Dense matrix of an operator on a graded block of the monomial basis."""

    index_map: tuple[tuple[int, int], ...]
    entries: np.ndarray
    symbol_meta: str
    padding: int

    @property
    def n_w(self) -> int:
        return max(beta for _, beta in self.index_map)

    @property
    def n_z(self) -> int:
        return max(alpha for alpha, _ in self.index_map)

    def hermitian_defect(self) -> float:
        return float(np.max(np.abs(self.entries - self.entries.conj().T)))

    def require_hermitian(self, tol: float = 1e-10) -> None:
        defect = self.hermitian_defect()
        if defect > tol:
            raise NotHermitian(f"hermitian defect {defect:.3e} exceeds {tol:.1e}")

    def eigenvalues(self, tol: float = 1e-10) -> np.ndarray:
        """Descending real spectrum; requires a Hermitian section."""
        self.require_hermitian(tol)
        vals = np.linalg.eigvalsh(self.entries)
        return vals[::-1]


def _toeplitz_entries(
    table: MomentTable,
    symbol: MonomialSymbol,
    rows: tuple[tuple[int, int], ...],
    cols: tuple[tuple[int, int], ...],
    norms: dict[tuple[int, int], float],
) -> np.ndarray:
    pos = {idx: k for k, idx in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=complex)
    for j, (alpha, beta) in enumerate(cols):
        for coeff, a, b, c, d in symbol.terms:
            gamma = alpha + a - b
            delta = beta + c - d
            row = pos.get((gamma, delta))
            if row is None:
                continue
            value = coeff * table.moment(a + b + alpha + gamma, c + d + beta + delta)
            mat[row, j] += value / (norms[(alpha, beta)] * norms[(gamma, delta)])
    return mat


def _norms_for(table: MomentTable, *index_sets) -> dict[tuple[int, int], float]:
    norms: dict[tuple[int, int], float] = {}
    for idx_set in index_sets:
        for idx in idx_set:
            if idx not in norms:
                norms[idx] = table.norm(*idx)
    return norms


def toeplitz_section(
    table: MomentTable,
    symbol: MonomialSymbol,
    n_z: int,
    n_w: int,
    padding: int = 0,
    meta: str | None = None,
) -> OperatorSection:
    """Finite section of T_symbol: f -> P(symbol * f) on the graded block."""
    idx = graded_indices(n_z, n_w)
    norms = _norms_for(table, idx)
    mat = _toeplitz_entries(table, symbol, idx, idx, norms)
    return OperatorSection(
        index_map=idx,
        entries=mat,
        symbol_meta=meta or f"toeplitz{symbol.describe()}",
        padding=padding,
    )


def hankel_product_section(
    table: MomentTable,
    psi: MonomialSymbol,
    phi: MonomialSymbol,
    n_z: int,
    n_w: int,
    extra_padding: int = 0,
) -> OperatorSection:
    """Exact section of (H_psi)* H_phi = T_{conj(psi) phi} - T_{conj(psi)} T_phi.

    The inner index block is padded by the symbols' angular shift bounds, so
    each retained entry of the operator product is exact: a monomial symbol
    moves a basis vector by at most its shift bound, hence every intermediate
    component of T_phi e_{alpha beta} lies inside the padded block.
    extra_padding widens the inner block further; it must leave every entry
    unchanged and exists as an exactness witness.
    """
    psi_bar = psi.conj()
    pad_z = max(psi_bar.z_shift_bound(), phi.z_shift_bound()) + extra_padding
    pad_w = max(psi_bar.w_shift_bound(), phi.w_shift_bound()) + extra_padding
    outer = graded_indices(n_z, n_w)
    inner = graded_indices(n_z + pad_z, n_w + pad_w)
    norms = _norms_for(table, inner)  # inner is a superset of outer
    direct = _toeplitz_entries(table, psi_bar * phi, outer, outer, norms)
    left = _toeplitz_entries(table, psi_bar, outer, inner, norms)
    right = _toeplitz_entries(table, phi, inner, outer, norms)
    return OperatorSection(
        index_map=outer,
        entries=direct - left @ right,
        symbol_meta=f"hankel_product(psi={psi.describe()}, phi={phi.describe()})",
        padding=max(pad_z, pad_w),
    )


def semicommutator_identity_residual(
    table: MomentTable,
    psi: MonomialSymbol,
    phi: MonomialSymbol,
    f: MonomialSymbol,
    g: MonomialSymbol,
) -> float:
    """|<P(conj(psi) H_phi f), g> - <H_phi f, H_psi g>| for holomorphic f, g.

    The left side multiplies by conj(psi) and projects; the right side never
    forms that product, going through the two Hankel images instead, so the
    two evaluations are independent reductions of the same pairing.
    """
    u = phi * f
    hankel_f = u - project_symbol(table, u)
    lhs = symbol_inner(table, project_symbol(table, psi.conj() * hankel_f), g)
    v = psi * g
    rhs = symbol_inner(table, u, v) - symbol_inner(
        table, project_symbol(table, u), project_symbol(table, v)
    )
    return abs(lhs - rhs)
