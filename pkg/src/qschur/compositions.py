"""Vector compositions, residue sequences, flag data and double cosets.

Conventions used throughout the package:

* nodes/residues are 0-based integers mod e; printed residue sequences
  use 1-based node labels;
* a vector composition is a tuple of nonzero vectors in Z_{>=0}^e,
  each vector itself a tuple of length e;
* a shadowed composition carries charges (z_1, ..., z_l), one fundamental
  weight per red strand, and l groups of vector compositions.  The
  leading empty group of the cyclotomic picture stays implicit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct


# -- dimension vectors and vector compositions ---------------------------------


def dim_vector(mu):
    """Sum of the parts of a vector composition."""
    if not mu:
        return ()
    e = len(mu[0])
    d = [0] * e
    for part in mu:
        for i, x in enumerate(part):
            d[i] += x
    return tuple(d)


def check_vcomp(mu, e=None):
    mu = tuple(tuple(int(x) for x in part) for part in mu)
    for part in mu:
        if e is not None and len(part) != e:
            raise ValueError("part %r has wrong length (e=%d)" % (part, e))
        if any(x < 0 for x in part):
            raise ValueError("negative entry in part %r" % (part,))
        if not any(part):
            raise ValueError("zero part in vector composition")
    return mu


def unit_vector(e, i):
    v = [0] * e
    v[i % e] = 1
    return tuple(v)


def residue_blocks(mu):
    """Blocked residue sequence: block g lists residue i with multiplicity
    mu[g][i], residues increasing inside a block (0-based)."""
    out = []
    for part in mu:
        block = []
        for i, m in enumerate(part):
            block.extend([i] * m)
        out.append(tuple(block))
    return tuple(out)


def residue_sequence_str(mu) -> str:
    """Display form with 1-based node labels, e.g. "1,1,2|1,2"."""
    return "|".join(",".join(str(i + 1) for i in block)
                    for block in residue_blocks(mu))


def vcomp_from_residue_blocks(blocks, e):
    """Inverse of residue_blocks."""
    out = []
    for block in blocks:
        v = [0] * e
        for i in block:
            v[i % e] += 1
        out.append(tuple(v))
    return check_vcomp(tuple(out), e)


def transpose(mu):
    """Flag data: the e-tuple of columns of the parts-by-nodes matrix.

    The result is a plain matrix transpose (rows may contain zeros), so
    transposing twice returns the original tuple of parts.
    """
    if not mu:
        return ()
    e = len(mu[0])
    return tuple(tuple(part[i] for part in mu) for i in range(e))


def enumerate_vcomps(d, complete_only: bool = False):
    """All vector compositions with dimension vector d, in a fixed order.

    With complete_only, only compositions all of whose parts are unit
    vectors.
    """
    d = tuple(d)
    e = len(d)
    if complete_only:
        def rec(rem):
            if not any(rem):
                yield ()
                return
            for i in range(e):
                if rem[i]:
                    nxt = list(rem)
                    nxt[i] -= 1
                    for tail in rec(tuple(nxt)):
                        yield (unit_vector(e, i),) + tail
        return list(rec(d))

    def parts_leq(rem):
        ranges = [range(x + 1) for x in rem]
        for v in _iproduct(*ranges):
            if any(v):
                yield v

    def rec(rem):
        if not any(rem):
            yield ()
            return
        for first in parts_leq(rem):
            nxt = tuple(r - f for r, f in zip(rem, first))
            for tail in rec(nxt):
                yield (first,) + tail

    return list(rec(d))


def young_block_sizes(mu):
    """Per-node segment sizes of the Young subgroup fixed by the flag data.

    Node i's alphabet is cut into consecutive segments of sizes
    mu[0][i], mu[1][i], ... (zeros skipped).
    """
    if not mu:
        return ()
    e = len(mu[0])
    return tuple(tuple(part[i] for part in mu if part[i]) for i in range(e))


def node_bases(mu, k):
    """Number of node-i variables lying in blocks before block k (0-based)."""
    if not mu:
        return ()
    e = len(mu[0])
    return tuple(sum(part[i] for part in mu[:k]) for i in range(e))


# -- shadowed compositions -------------------------------------------------------


@dataclass(frozen=True)
class Shadowed:
    """Weight data: charges (z_1..z_l) as 0-based residues (the red strand k
    carries the fundamental weight of node z_k) and l groups of vector
    compositions."""

    charges: tuple
    groups: tuple

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple(int(z) for z in self.charges))
        object.__setattr__(self, "groups",
                           tuple(tuple(tuple(p) for p in g) for g in self.groups))
        if len(self.charges) != len(self.groups):
            raise ValueError("need one group per red strand")

    @property
    def ell(self):
        return len(self.charges)

    def associated(self):
        """The join of all groups, as a plain vector composition."""
        out = []
        for g in self.groups:
            out.extend(g)
        return tuple(out)

    def dim(self):
        return dim_vector(self.associated())

    def group_of_block(self, k):
        """Group index (1-based) of the k-th block (0-based) of the join."""
        t = 0
        for gi, g in enumerate(self.groups, start=1):
            t += len(g)
            if k < t:
                return gi
        raise IndexError(k)


# -- contingency tables and minimal double coset representatives -----------------


def contingency_tables(rows, cols):
    """All nonnegative integer matrices with the given row and column sums."""
    rows = tuple(rows)
    cols = tuple(cols)
    if sum(rows) != sum(cols):
        return []
    ncol = len(cols)

    def rec_rows(rows_left, cols_left):
        if not rows_left:
            yield ()
            return
        r = rows_left[0]

        def rec_cells(j, rem, cl):
            if j == ncol:
                if rem == 0:
                    yield ()
                return
            hi = min(rem, cl[j])
            lo = max(0, rem - sum(cl[j + 1:]))
            for v in range(lo, hi + 1):
                for tail in rec_cells(j + 1, rem - v, cl):
                    yield (v,) + tail

        for row in rec_cells(0, r, cols_left):
            nxt = tuple(c - v for c, v in zip(cols_left, row))
            for rest in rec_rows(rows_left[1:], nxt):
                yield (row,) + rest

    return list(rec_rows(rows, cols))


@dataclass(frozen=True)
class CosetRep:
    """Minimal double coset representative of a morphism source -> target.

    tables[i][g][h] counts the residue-i entries of source block g that are
    sent to target block h; the unique minimal representative keeps
    same-colored strands starting or ending in a common block non-crossing.
    """

    source: tuple
    target: tuple
    tables: tuple

    def e(self):
        return len(self.tables)

    def cell(self, g, h):
        """Residue-count vector of the (source g, target h) cell."""
        return tuple(t[g][h] for t in self.tables)

    def cells_source_order(self):
        """Nonzero cells sorted by (source block, target block)."""
        out = []
        for g in range(len(self.source)):
            for h in range(len(self.target)):
                v = self.cell(g, h)
                if any(v):
                    out.append((g, h, v))
        return out

    def cells_target_order(self):
        out = []
        for h in range(len(self.target)):
            for g in range(len(self.source)):
                v = self.cell(g, h)
                if any(v):
                    out.append((g, h, v))
        return out

    def block_perm(self):
        """Permutation q of refinement blocks: position in source order ->
        position in target order (0-based one-line)."""
        src = [(g, h) for g, h, _ in self.cells_source_order()]
        tgt = [(g, h) for g, h, _ in self.cells_target_order()]
        pos = {cell: t for t, cell in enumerate(tgt)}
        return tuple(pos[cell] for cell in src)

    def flat_perm(self):
        """The S_n permutation on residue-sequence positions (0-based).

        Position p of res(source) maps to flat_perm()[p] in res(target).
        Within every block residues are listed increasingly, so each color
        occupies a consecutive run in each block.
        """
        e = self.e()
        src_blocks = residue_blocks(self.source)
        tgt_blocks = residue_blocks(self.target)
        src_start = []
        t = 0
        for b in src_blocks:
            src_start.append(t)
            t += len(b)
        n = t
        tgt_start = []
        t = 0
        for b in tgt_blocks:
            tgt_start.append(t)
            t += len(b)
        out = [None] * n
        for i in range(e):
            # consumption counters per source/target block for color i
            src_used = [0] * len(src_blocks)
            tgt_used = [0] * len(tgt_blocks)
            for g in range(len(self.source)):
                for h in range(len(self.target)):
                    cnt = self.tables[i][g][h]
                    for _ in range(cnt):
                        sp = (src_start[g]
                              + sum(self.source[g][:i]) + src_used[g])
                        tp = (tgt_start[h]
                              + sum(self.target[h][:i]) + tgt_used[h])
                        out[sp] = tp
                        src_used[g] += 1
                        tgt_used[h] += 1
        return tuple(out)

    def length(self):
        from .multipoly import perm_length
        return perm_length(self.flat_perm())


def min_double_cosets(la, mu):
    """Minimal representatives of S_la \\ S_d / S_mu as morphisms mu -> la.

    One representative per tuple of per-residue contingency tables whose
    row sums are the residue counts of mu's blocks and column sums those
    of la's blocks.
    """
    la = tuple(tuple(p) for p in la)
    mu = tuple(tuple(p) for p in mu)
    if dim_vector(la) != dim_vector(mu):
        raise ValueError("dimension vectors differ: %r vs %r"
                         % (dim_vector(la), dim_vector(mu)))
    e = len(dim_vector(mu))
    per_color = []
    for i in range(e):
        rows = tuple(part[i] for part in mu)
        cols = tuple(part[i] for part in la)
        per_color.append(contingency_tables(rows, cols))
    out = []
    for combo in _iproduct(*per_color):
        out.append(CosetRep(source=mu, target=la, tables=tuple(combo)))
    return out


def coset_rep_from_flat_perm(la, mu, perm):
    """Tables of the double coset of an arbitrary color-preserving
    permutation res(mu) -> res(la)."""
    la = tuple(tuple(p) for p in la)
    mu = tuple(tuple(p) for p in mu)
    e = len(dim_vector(mu))
    src_blocks = residue_blocks(mu)
    tgt_blocks = residue_blocks(la)
    src_of_pos = []
    color_of_pos = []
    for g, b in enumerate(src_blocks):
        for i in b:
            src_of_pos.append(g)
            color_of_pos.append(i)
    tgt_of_pos = []
    tgt_color = []
    for h, b in enumerate(tgt_blocks):
        for i in b:
            tgt_of_pos.append(h)
            tgt_color.append(i)
    tables = [[[0] * len(la) for _ in range(len(mu))] for _ in range(e)]
    for p, q in enumerate(perm):
        if color_of_pos[p] != tgt_color[q]:
            raise ValueError("permutation does not preserve residues")
        tables[color_of_pos[p]][src_of_pos[p]][tgt_of_pos[q]] += 1
    tables = tuple(tuple(tuple(row) for row in t) for t in tables)
    return CosetRep(source=mu, target=la, tables=tables)


def is_minimal_rep(la, mu, perm) -> bool:
    """True when perm is the minimal representative of its double coset."""
    rep = coset_rep_from_flat_perm(la, mu, perm)
    return rep.flat_perm() == tuple(perm)
