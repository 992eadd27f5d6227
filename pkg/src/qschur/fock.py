"""The l-fold level-1 q-Fock space: standard basis, box-adding operators,
induced basis vectors, bar involution, canonical basis and graded
decomposition numbers.

Vectors are finitely supported maps from l-multipartitions to Laurent
polynomials in q; the standard basis u_xi is orthonormal for the bilinear
inner product.  The box-adding operator for a residue-content vector d
sends u_xi to the sum of q^{-m(eta/xi)} u_eta over all eta containing xi
with skew residue content d and no two skew boxes in a column.
"""

from __future__ import annotations

from dataclasses import dataclass

from .compositions import Shadowed
from .laurent import Laurent
from .tableaux import (ColumnViolation, add_box, addable_boxes, cell_key,
                       check_multipartition, contains, m_skew,
                       multipartitions, removable_boxes, residue, size)


class ConventionError(ArithmeticError):
    """A triangularity or positivity assumption failed; carries the
    offending shape so callers can report it."""

    def __init__(self, message, shape=None):
        super().__init__(message)
        self.shape = shape


@dataclass(frozen=True)
class FockConfig:
    e: int
    charges: tuple
    lifts: tuple = None

    def __post_init__(self):
        if self.e < 2:
            raise ValueError("e must be at least 2")
        object.__setattr__(self, "charges",
                           tuple(z % self.e for z in self.charges))
        if self.lifts is not None:
            lifts = tuple(int(x) for x in self.lifts)
            if len(lifts) != len(self.charges):
                raise ValueError("need one lift per charge")
            for z, zt in zip(self.charges, lifts):
                if zt % self.e != z:
                    raise ValueError("lift %d does not reduce to charge %d"
                                     % (zt, z))
            object.__setattr__(self, "lifts", lifts)

    @property
    def ell(self):
        return len(self.charges)


class FockVector:
    """Finitely supported map multipartition -> Laurent; immutable."""

    __slots__ = ("support",)

    def __init__(self, support=None):
        s = {}
        if support:
            for shape, c in dict(support).items():
                if c:
                    s[tuple(tuple(comp) for comp in shape)] = c
        self.support = s

    @staticmethod
    def basis(shape) -> "FockVector":
        return FockVector({tuple(tuple(c) for c in shape): Laurent.one()})

    @staticmethod
    def vacuum(ell: int) -> "FockVector":
        return FockVector.basis(((),) * ell)

    def coeff(self, shape) -> Laurent:
        return self.support.get(tuple(tuple(c) for c in shape), Laurent.zero())

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.support)
        for k, v in other.support.items():
            w = out.get(k, Laurent.zero()) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = FockVector.__new__(FockVector)
        r.support = out
        return r

    def __sub__(self, other):
        return self + other.scaled(Laurent({0: -1}))

    def scaled(self, c: Laurent) -> "FockVector":
        if isinstance(c, int):
            c = Laurent({0: c})
        out = {}
        for k, v in self.support.items():
            w = c * v
            if w:
                out[k] = w
        r = FockVector.__new__(FockVector)
        r.support = out
        return r

    def bar_coeffs(self) -> "FockVector":
        """Coefficient-wise q -> q^-1 (no basis change)."""
        r = FockVector.__new__(FockVector)
        r.support = {k: v.bar() for k, v in self.support.items()}
        return r

    def is_zero(self) -> bool:
        return not self.support

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.support == other.support

    def items_sorted(self):
        return sorted(self.support.items(), key=lambda kv: cell_key(kv[0]))

    def __repr__(self):
        bits = ["(%s)*u[%s]" % (c.to_expr(), "|".join(",".join(map(str, comp))
                                                      for comp in shape))
                for shape, c in self.items_sorted()]
        return "FockVector(%s)" % (" + ".join(bits) or "0")


def inner(u: FockVector, v: FockVector) -> Laurent:
    """Bilinear inner product making the standard basis orthonormal."""
    acc = Laurent.zero()
    small, big = (u, v) if len(u.support) <= len(v.support) else (v, u)
    for shape, c in small.support.items():
        d = big.support.get(shape)
        if d is not None:
            acc = acc + c * d
    return acc


def _extensions(cfg: FockConfig, xi, d):
    """All eta >= xi whose skew has residue counts d and no two boxes in a
    column, as full multipartitions.

    The column rule caps row r at the old length of row r-1, so only rows
    up to len(base)+1 can grow in each component.
    """
    e = cfg.e
    ell = cfg.ell
    out = []
    comps = [tuple(xi[k]) if k < len(xi) else () for k in range(ell)]

    def extend_comp(k, acc, remaining):
        if k == ell:
            if not any(remaining):
                out.append(tuple(acc))
            return
        base = comps[k]

        def rows(r, cur, rem):
            if r > len(base) + 1:
                shape = tuple(x for x in cur if x > 0)
                extend_comp(k + 1, acc + [shape], rem)
                return
            old = base[r - 1] if r <= len(base) else 0
            if r == 1:
                cap = old + sum(rem)
            else:
                cap = base[r - 2]
            for new in range(old, cap + 1):
                rem2 = list(rem)
                ok = True
                for c in range(old + 1, new + 1):
                    i = residue((k + 1, r, c), cfg.charges, e)
                    if rem2[i] == 0:
                        ok = False
                        break
                    rem2[i] -= 1
                if ok:
                    rows(r + 1, cur + [new], tuple(rem2))

        rows(1, [], remaining)

    extend_comp(0, [], tuple(d))
    return out


def f_action(cfg: FockConfig, d, v: FockVector) -> FockVector:
    """Linear extension of the box-adding operator for content vector d."""
    d = tuple(d)
    if len(d) != cfg.e:
        raise ValueError("content vector must have length e")
    out = FockVector()
    for xi, c in v.support.items():
        for eta in _extensions(cfg, xi, d):
            m = m_skew(eta, xi, cfg.charges, cfg.e)
            out = out + FockVector({eta: c * Laurent.q(-m)})
    return out


def f_word(cfg: FockConfig, mu, v: FockVector) -> FockVector:
    """Apply the operators of a vector composition, first part first."""
    for part in mu:
        v = f_action(cfg, part, v)
    return v


def e_action(cfg: FockConfig, i: int, v: FockVector) -> FockVector:
    """Adjoint of the single-box operator of residue i under inner()."""
    i %= cfg.e
    out = FockVector()
    for eta, c in v.support.items():
        for pos in removable_boxes(eta):
            if residue(pos, cfg.charges, cfg.e) != i:
                continue
            comps = [list(comp) for comp in eta]
            k, r, _ = pos
            comps[k - 1][r - 1] -= 1
            xi = tuple(tuple(x for x in comp if x) for comp in comps)
            m = m_skew(eta, xi, cfg.charges, cfg.e)
            out = out + FockVector({xi: c * Laurent.q(-m)})
    return out


def h_vector(cfg: FockConfig, sh: Shadowed) -> FockVector:
    """Induced basis vector of a shadowed composition, built level by
    level: apply group k's operators at level k, then adjoin an empty
    component for level k+1."""
    if sh.charges != cfg.charges:
        raise ValueError("charges of the shadow data do not match the config")
    v = FockVector.basis(((),))
    for k in range(1, cfg.ell + 1):
        sub = FockConfig(e=cfg.e, charges=cfg.charges[:k])
        v = f_word(sub, sh.groups[k - 1], v)
        if k < cfg.ell:
            v = FockVector({shape + ((),): c for shape, c in v.support.items()})
    return v


def row_shadow(shape, cfg: FockConfig) -> Shadowed:
    """The row data of a shape (type of its ground-state tableau)."""
    from .tableaux import row_refinement

    return row_refinement(shape, cfg.charges, cfg.e, cfg.ell)


def content_vector(shape, cfg: FockConfig):
    """Residue counts of all boxes; constant on weight blocks."""
    from .tableaux import boxes

    v = [0] * cfg.e
    for b in boxes(shape):
        v[residue(b, cfg.charges, cfg.e)] += 1
    return tuple(v)


def weight_blocks(cfg: FockConfig, n: int):
    """Shapes of size n grouped by residue content, each block sorted
    ascending in the cell order."""
    blocks = {}
    for shape in multipartitions(n, cfg.ell):
        blocks.setdefault(content_vector(shape, cfg), []).append(shape)
    for key in blocks:
        blocks[key].sort(key=cell_key)
    return blocks


def h_expansions(cfg: FockConfig, n: int):
    """shape -> h vector of its row data, for all shapes of size n."""
    return {shape: h_vector(cfg, row_shadow(shape, cfg))
            for shape in multipartitions(n, cfg.ell)}


def bar_involution_matrix(cfg: FockConfig, n: int):
    """The involution on the standard basis of the size-n part.

    Returns shape -> FockVector (the image of u_shape).  Computed from the
    bar invariance of the induced vectors of row data: those must be
    monic and unitriangular on the standard basis, which the pinned degree
    convention guarantees; a violation raises ConventionError naming the
    offending shape.
    """
    hs = h_expansions(cfg, n)
    psi = {}
    for shape in sorted(multipartitions(n, cfg.ell), key=cell_key):
        h = hs[shape]
        lead = h.coeff(shape)
        if lead != Laurent.one():
            raise ConventionError(
                "induced vector of %r is not monic (leading %s)"
                % (shape, lead.to_expr()), shape=shape)
        acc = h
        for eta, b in h.items_sorted():
            if eta == shape:
                continue
            if cell_key(eta) >= cell_key(shape):
                raise ConventionError(
                    "induced vector of %r is not triangular (term at %r)"
                    % (shape, eta), shape=shape)
            acc = acc - psi[eta].scaled(b.bar())
        psi[shape] = acc
    return psi


def bar_involution(cfg: FockConfig, v: FockVector) -> FockVector:
    """q-antilinear extension of the standard-basis involution."""
    sizes = {size(shape) for shape in v.support}
    psi = {}
    for n in sizes:
        psi.update(bar_involution_matrix(cfg, n))
    out = FockVector()
    for shape, c in v.support.items():
        out = out + psi[shape].scaled(c.bar())
    return out


def _bar_symmetric_completion(c: Laurent) -> Laurent:
    """The bar-symmetric polynomial with the same coefficients in degrees
    >= 0; subtracting it leaves only strictly negative exponents."""
    out = {}
    for k, v in c.coeffs().items():
        if k > 0:
            out[k] = out.get(k, 0) + v
            out[-k] = out.get(-k, 0) + v
        elif k == 0:
            out[0] = out.get(0, 0) + v
    return Laurent(out)


def canonical_basis(cfg: FockConfig, n: int):
    """shape -> bar-invariant vector u_shape + (strictly negative
    q-powers on cell-smaller shapes).

    Computed blockwise by the standard elimination: start from the
    bar-invariant induced vector of the shape's row data and subtract
    bar-symmetric multiples of already-computed vectors until every
    off-diagonal coefficient lies in q^{-1} Z[q^{-1}].  Uniqueness of the
    result is forced by triangularity of the involution.
    """
    psi_cache = bar_involution_matrix(cfg, n)
    hs = h_expansions(cfg, n)
    out = {}
    for block in weight_blocks(cfg, n).values():
        for idx, shape in enumerate(block):
            v = hs[shape]
            if v.coeff(shape) != Laurent.one():
                raise ConventionError(
                    "induced vector of %r is not monic" % (shape,), shape=shape)
            for eta in reversed(block[:idx]):
                c = v.coeff(eta)
                beta = _bar_symmetric_completion(c)
                if beta:
                    v = v - out[eta].scaled(beta)
            for eta, c in v.items_sorted():
                if eta == shape:
                    continue
                if not c.in_qinv_lattice():
                    raise ConventionError(
                        "canonical vector of %r has coefficient %s at %r"
                        % (shape, c.to_expr(), eta), shape=shape)
            bar_v = FockVector()
            for eta, c in v.support.items():
                bar_v = bar_v + psi_cache[eta].scaled(c.bar())
            if bar_v != v:
                raise ConventionError(
                    "canonical vector of %r is not bar-invariant" % (shape,),
                    shape=shape)
            out[shape] = v
    return out


def decomposition_entries(cfg: FockConfig, n: int):
    """shape -> list of (smaller shape, Laurent) rows of the canonical
    basis in the standard basis, diagonal omitted."""
    cb = canonical_basis(cfg, n)
    out = {}
    for shape, v in cb.items():
        rows = []
        for eta, c in v.items_sorted():
            if eta != shape:
                rows.append((eta, c))
        out[shape] = rows
    return out


def is_m_dominant(cfg: FockConfig, m: int) -> bool:
    """True when consecutive charge lifts satisfy lift_i - lift_{i+1} >= m;
    vacuously true for a single charge."""
    lifts = cfg.lifts
    if lifts is None:
        lifts = cfg.charges
    return all(lifts[i] - lifts[i + 1] >= m for i in range(len(lifts) - 1))
