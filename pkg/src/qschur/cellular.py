"""Combinatorial model of the cyclotomic corner algebras: graded cell
datum, graded dimensions of idempotent corners, standard-module characters
and graded decomposition numbers.

The algebra itself is never materialized; everything is computed from
same-shape pairs of semistandard multitableaux and their degrees, with the
q-Fock space providing the second route for cross-validation.  Graded
dimensions follow the Fock-side orientation throughout: a tableau of
degree d contributes q^{-d}.
"""

from __future__ import annotations

from .compositions import Shadowed
from .fock import FockConfig, canonical_basis, h_vector, inner
from .laurent import Laurent
from .tableaux import (ENTRY_RULE_DEFAULT, Tableau, cell_key, deg_tableau,
                       enumerate_semistandard, multipartitions, refinements,
                       size)


def tableaux_by_type(n: int, cfg: FockConfig, rule: str = ENTRY_RULE_DEFAULT):
    """All semistandard multitableaux with n boxes, grouped as
    type -> shape -> list of (tableau, degree)."""
    out = {}
    for shape in multipartitions(n, cfg.ell):
        for t in enumerate_semistandard(shape, ell=cfg.ell, rule=rule):
            la, mu = refinements(t, cfg.charges, cfg.e)
            d = deg_tableau(t, cfg.charges, cfg.e)
            out.setdefault(mu, {}).setdefault(shape, []).append((t, d))
    return out


def cell_basis(n: int, cfg: FockConfig, rule: str = ENTRY_RULE_DEFAULT):
    """The graded cell datum: rows (shape, S, T, deg S + deg T) over
    same-shape pairs, shapes in cell order."""
    rows = []
    for shape in sorted(multipartitions(n, cfg.ell), key=cell_key):
        tabs = enumerate_semistandard(shape, ell=cfg.ell, rule=rule)
        degs = [deg_tableau(t, cfg.charges, cfg.e) for t in tabs]
        for s, ds in zip(tabs, degs):
            for t, dt in zip(tabs, degs):
                rows.append((shape, s, t, ds + dt))
    return rows


def corner_dim(mu: Shadowed, la: Shadowed, cfg: FockConfig,
               rule: str = ENTRY_RULE_DEFAULT) -> Laurent:
    """Graded dimension of the corner between two idempotents: the sum of
    q^{-deg S - deg T} over same-shape pairs with S of type mu and T of
    type la.  Zero when the dimension vectors disagree."""
    if mu.dim() != la.dim():
        return Laurent.zero()
    n = sum(mu.dim())
    acc = Laurent.zero()
    by_shape_mu = {}
    by_shape_la = {}
    for shape in multipartitions(n, cfg.ell):
        for t in enumerate_semistandard(shape, ell=cfg.ell, rule=rule):
            _, ty = refinements(t, cfg.charges, cfg.e)
            if ty == mu:
                by_shape_mu.setdefault(shape, []).append(
                    deg_tableau(t, cfg.charges, cfg.e))
            if ty == la:
                by_shape_la.setdefault(shape, []).append(
                    deg_tableau(t, cfg.charges, cfg.e))
    for shape, ds in by_shape_mu.items():
        dl = by_shape_la.get(shape)
        if not dl:
            continue
        for a in ds:
            for b in dl:
                acc = acc + Laurent.q(-a - b)
    return acc


def weyl_character(shape, cfg: FockConfig,
                   rule: str = ENTRY_RULE_DEFAULT):
    """type -> graded dimension of the standard module's weight space:
    sum of q^{-deg S} over tableaux S of the given shape and type."""
    out = {}
    for t in enumerate_semistandard(shape, ell=cfg.ell, rule=rule):
        _, ty = refinements(t, cfg.charges, cfg.e)
        d = deg_tableau(t, cfg.charges, cfg.e)
        out[ty] = out.get(ty, Laurent.zero()) + Laurent.q(-d)
    return out


def decomposition_matrix(n: int, cfg: FockConfig):
    """Rows of the unitriangular graded decomposition matrix.

    Returns (shapes in cell order, {(xi, eta): Laurent}) with diagonal
    entries 1 and off-diagonal entries in strictly negative q-powers,
    computed from the canonical basis of the q-Fock space.
    """
    shapes = sorted(multipartitions(n, cfg.ell), key=cell_key)
    cb = canonical_basis(cfg, n)
    entries = {}
    for xi in shapes:
        v = cb[xi]
        for eta, c in v.items_sorted():
            entries[(xi, eta)] = c
    return shapes, entries


def corner_dim_fock(mu: Shadowed, la: Shadowed, cfg: FockConfig) -> Laurent:
    """The same corner dimension computed on the Fock side, as the inner
    product of the two induced vectors."""
    if mu.dim() != la.dim():
        return Laurent.zero()
    return inner(h_vector(cfg, mu), h_vector(cfg, la))


def weyl_multiplicities(cfg: FockConfig, n: int):
    """shape -> rows (eta, multiplicity) expressing each induced vector of
    row data in the canonical basis; multiplicities must lie in
    Z_{>=0}[q, q^-1] (graded standard-filtration multiplicities)."""
    from .fock import h_expansions

    cb = canonical_basis(cfg, n)
    hs = h_expansions(cfg, n)
    shapes = sorted(multipartitions(n, cfg.ell), key=cell_key)
    out = {}
    for shape in shapes:
        v = hs[shape]
        coeffs = []
        for eta in reversed(shapes):
            c = v.coeff(eta)
            if c:
                coeffs.append((eta, c))
                v = v - cb[eta].scaled(c)
        if not v.is_zero():
            raise ArithmeticError("canonical expansion did not terminate")
        out[shape] = coeffs[::-1]
    return out
