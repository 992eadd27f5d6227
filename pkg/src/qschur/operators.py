"""The faithful polynomial representation of the (extended) quiver Schur
algebra: elementary splits, merges, red-strand shifts and polynomial moves,
their composition, degrees, and a decidable equality test.

An operator is a typed chain of elementary moves between *arrangements*: a
tuple of red strands (charges, one fundamental weight each) interleaving
groups of vector-composition blocks; group 0 precedes the first red strand
and is usually empty.  The polynomial action of a chain lives on the ring
R(d) of the joined composition and never changes the ambient d, so moves
compose as ordinary functions on polynomials.

Elementary actions on an invariant polynomial f:

* merge of adjacent blocks (c, d): the product over nodes i of the
  divided-difference operators for the minimal-length representatives of
  the longest elements in S_{c_i+d_i}/(S_{c_i} x S_{d_i}), localized to
  the blocks' variable positions;
* split of a block into (c, d): multiplication by the localized product
  of linear forms (x[i+1, j] - x[i, k]) with j on the c-side of node i+1
  and k on the d-side of node i;
* right shift of a block across a red strand of node z: multiplication by
  the product of the block's node-z variables; left shift: identity;
* poly(h): multiplication by h.

Operator equality is decided on a finite test set: every operator commutes
with multiplication by total invariants, and the source's invariant ring
is spanned over the total invariants by the Young-orbit sums of the Artin
monomials (exponent of x[i,j] at most d_i - j), so agreement on those
orbit sums decides equality of the linear maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct

from .compositions import (CosetRep, Shadowed, check_vcomp, dim_vector,
                           node_bases, young_block_sizes)
from .multipoly import (MultiPoly, artin_basis, demazure_word,
                        euler_class_local, is_invariant,
                        merge_demazure_word, orbit_sum,
                        young_subgroup_transpositions)


# -- arrangements -----------------------------------------------------------------


@dataclass(frozen=True)
class Arrangement:
    """Red strands (charges, 0-based nodes) and len(charges)+1 groups of
    blocks; group g sits between red strands g and g+1."""

    charges: tuple
    groups: tuple

    def __post_init__(self):
        object.__setattr__(self, "charges", tuple(int(z) for z in self.charges))
        object.__setattr__(self, "groups",
                           tuple(tuple(tuple(int(x) for x in p) for p in g)
                                 for g in self.groups))
        if len(self.groups) != len(self.charges) + 1:
            raise ValueError("need len(charges)+1 groups")

    @staticmethod
    def plain(mu, e=None):
        mu = check_vcomp(mu, e)
        return Arrangement(charges=(), groups=(mu,))

    @staticmethod
    def from_shadowed(sh: Shadowed):
        return Arrangement(charges=sh.charges, groups=((),) + sh.groups)

    def to_shadowed(self) -> Shadowed:
        if self.groups[0]:
            raise ValueError("leading group is not empty")
        return Shadowed(charges=self.charges, groups=self.groups[1:])

    def join(self):
        out = []
        for g in self.groups:
            out.extend(g)
        return tuple(out)

    def ambient(self):
        j = self.join()
        return dim_vector(j) if j else ()

    def e(self):
        j = self.join()
        if j:
            return len(j[0])
        raise ValueError("empty arrangement")

    def flat_block(self, g, k):
        """Flat index in the join of block k of group g."""
        return sum(len(gg) for gg in self.groups[:g]) + k

    def replace_group(self, g, parts):
        groups = list(self.groups)
        groups[g] = tuple(parts)
        return Arrangement(charges=self.charges, groups=tuple(groups))

    def invariance_gens(self):
        """Adjacent transpositions generating the Young subgroup of the
        flag data of the join."""
        j = self.join()
        if not j:
            return []
        return list(young_subgroup_transpositions(dim_vector(j),
                                                  young_block_sizes(j)))

    def dim_q(self) -> int:
        """Complex dimension of the flagged-representation space attached
        to this arrangement; the per-arrangement grading shift."""
        j = self.join()
        if not j:
            return 0
        e = len(j[0])
        flag = 0
        nil = 0
        r = len(j)
        for i in range(e):
            for g in range(r):
                for h in range(g + 1, r):
                    flag += j[g][i] * j[h][i]
                    nil += j[h][i] * j[g][(i + 1) % e]
        red = 0
        for m, group in enumerate(self.groups):
            if m == 0:
                continue
            allowed = [0] * e
            for k in range(m):
                allowed[self.charges[k]] += 1
            for part in group:
                for i in range(e):
                    red += part[i] * allowed[i]
        return flag + nil + red


# -- elementary moves --------------------------------------------------------------


@dataclass(frozen=True)
class Move:
    kind: str            # merge | split | shift_left | shift_right | poly
    group: int = 0       # group index for merge/split; red index for shifts
    pos: int = 0         # block position within the group (0-based)
    parts: tuple = ()    # (c, d) for split
    poly: object = None  # MultiPoly for poly moves

    def __repr__(self):
        if self.kind == "poly":
            return "Move(poly deg=%s)" % (self.poly.homogeneous_degree(),)
        return "Move(%s g%d p%d%s)" % (self.kind, self.group, self.pos,
                                       " %r" % (self.parts,) if self.parts else "")


def _merge_degree(c, d, e):
    return sum(c[i] * (d[(i - 1) % e] - d[i]) for i in range(e))


def apply_move_state(arr: Arrangement, mv: Move):
    """Target arrangement and degree of one elementary move at arr."""
    e = arr.e()
    if mv.kind == "merge":
        g, k = mv.group, mv.pos
        grp = arr.groups[g]
        if k + 1 >= len(grp):
            raise ValueError("merge needs two adjacent blocks")
        c, d = grp[k], grp[k + 1]
        merged = tuple(a + b for a, b in zip(c, d))
        parts = grp[:k] + (merged,) + grp[k + 2:]
        return arr.replace_group(g, parts), _merge_degree(c, d, e)
    if mv.kind == "split":
        g, k = mv.group, mv.pos
        c, d = mv.parts
        grp = arr.groups[g]
        if tuple(a + b for a, b in zip(c, d)) != grp[k]:
            raise ValueError("split parts do not sum to the block")
        if not any(c) or not any(d):
            raise ValueError("split parts must be nonzero")
        parts = grp[:k] + (tuple(c), tuple(d)) + grp[k + 1:]
        return arr.replace_group(g, parts), _merge_degree(c, d, e)
    if mv.kind == "shift_left":
        m = mv.group
        if not (1 <= m <= len(arr.charges)):
            raise ValueError("no red strand %d" % m)
        src = arr.groups[m]
        if not src:
            raise ValueError("no block to shift left across red strand %d" % m)
        c = src[0]
        groups = list(arr.groups)
        groups[m] = src[1:]
        groups[m - 1] = arr.groups[m - 1] + (c,)
        deg = c[arr.charges[m - 1]]
        return Arrangement(charges=arr.charges, groups=tuple(groups)), deg
    if mv.kind == "shift_right":
        m = mv.group
        if not (1 <= m <= len(arr.charges)):
            raise ValueError("no red strand %d" % m)
        src = arr.groups[m - 1]
        if not src:
            raise ValueError("no block to shift right across red strand %d" % m)
        c = src[-1]
        groups = list(arr.groups)
        groups[m - 1] = src[:-1]
        groups[m] = (c,) + arr.groups[m]
        deg = c[arr.charges[m - 1]]
        return Arrangement(charges=arr.charges, groups=tuple(groups)), deg
    if mv.kind == "poly":
        hd = mv.poly.homogeneous_degree()
        if hd is None:
            raise ValueError("polynomial moves must be homogeneous")
        return arr, 2 * hd
    raise ValueError("unknown move kind %r" % (mv.kind,))


def apply_move_poly(arr: Arrangement, mv: Move, f: MultiPoly) -> MultiPoly:
    """Polynomial action of one elementary move whose source is arr."""
    e = arr.e()
    join = arr.join()
    amb = dim_vector(join)
    if mv.kind == "merge":
        flat = arr.flat_block(mv.group, mv.pos)
        c, d = join[flat], join[flat + 1]
        bases = node_bases(join, flat)
        word = []
        for i in range(e):
            word.extend(merge_demazure_word(amb, i, bases[i], c[i], d[i]))
        return demazure_word(word, f)
    if mv.kind == "split":
        flat = arr.flat_block(mv.group, mv.pos)
        bases = node_bases(join, flat)
        ec = euler_class_local(amb, bases, mv.parts[0], mv.parts[1])
        return ec * f
    if mv.kind == "shift_left":
        return f
    if mv.kind == "shift_right":
        m = mv.group
        c = arr.groups[m - 1][-1]
        flat = arr.flat_block(m - 1, len(arr.groups[m - 1]) - 1)
        bases = node_bases(join, flat)
        z = arr.charges[m - 1]
        out = f
        for j in range(1, c[z] + 1):
            out = out * MultiPoly.var(amb, z, bases[z] + j)
        return out
    if mv.kind == "poly":
        return mv.poly * f
    raise ValueError("unknown move kind %r" % (mv.kind,))


# -- operator expressions -----------------------------------------------------------


@dataclass(frozen=True)
class OperatorExpr:
    """A type-checked chain of elementary moves with its total degree."""

    source: Arrangement
    target: Arrangement
    moves: tuple
    degree: int

    @staticmethod
    def identity(arr: Arrangement) -> "OperatorExpr":
        return OperatorExpr(source=arr, target=arr, moves=(), degree=0)

    @staticmethod
    def from_moves(source: Arrangement, moves) -> "OperatorExpr":
        arr = source
        deg = 0
        for mv in moves:
            arr, d = apply_move_state(arr, mv)
            deg += d
        return OperatorExpr(source=source, target=arr,
                            moves=tuple(moves), degree=deg)

    def then(self, other: "OperatorExpr") -> "OperatorExpr":
        """Composite acting as other after self."""
        if self.target != other.source:
            raise ValueError("chain mismatch: %r vs %r"
                             % (self.target, other.source))
        return OperatorExpr(source=self.source, target=other.target,
                            moves=self.moves + other.moves,
                            degree=self.degree + other.degree)

    def apply(self, f: MultiPoly, check: bool = False) -> MultiPoly:
        """Evaluate on f in the invariant ring of the source.

        With check=True, f is verified to be invariant under the source's
        Young subgroup first.
        """
        if check and not is_invariant(f, self.source.invariance_gens()):
            raise ValueError("input not invariant for the source flag data")
        arr = self.source
        for mv in self.moves:
            f = apply_move_poly(arr, mv, f)
            arr, _ = apply_move_state(arr, mv)
        return f

    def states(self):
        """Intermediate arrangements, source first, target last."""
        out = [self.source]
        arr = self.source
        for mv in self.moves:
            arr, _ = apply_move_state(arr, mv)
            out.append(arr)
        return out

    def __repr__(self):
        return "OperatorExpr(%d moves, degree %d)" % (len(self.moves), self.degree)


def star(op: OperatorExpr) -> OperatorExpr:
    """Vertical flip: the reversed chain with merges and splits, and left
    and right shifts, exchanged; degrees are preserved movewise."""
    states = op.states()
    out = []
    for idx in range(len(op.moves) - 1, -1, -1):
        mv = op.moves[idx]
        src = states[idx]
        if mv.kind == "merge":
            g, k = mv.group, mv.pos
            c, d = src.groups[g][k], src.groups[g][k + 1]
            out.append(Move(kind="split", group=g, pos=k, parts=(c, d)))
        elif mv.kind == "split":
            out.append(Move(kind="merge", group=mv.group, pos=mv.pos))
        elif mv.kind == "shift_left":
            out.append(Move(kind="shift_right", group=mv.group))
        elif mv.kind == "shift_right":
            out.append(Move(kind="shift_left", group=mv.group))
        else:
            out.append(mv)
    return OperatorExpr.from_moves(op.target, out)


class OpSum:
    """A finite integer combination of chains with common source and
    target; the empty sum is the zero operator."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source, target, terms=()):
        self.source = source
        self.target = target
        self.terms = tuple(terms)
        for _, op in self.terms:
            if op.source != source or op.target != target:
                raise ValueError("summand with mismatched ends")

    @staticmethod
    def of(op: OperatorExpr) -> "OpSum":
        return OpSum(op.source, op.target, ((1, op),))

    @staticmethod
    def zero(source, target) -> "OpSum":
        return OpSum(source, target, ())

    def apply(self, f: MultiPoly) -> MultiPoly:
        acc = MultiPoly.zero(self.target.ambient())
        for c, op in self.terms:
            acc = acc + c * op.apply(f)
        return acc

    def __add__(self, other: "OpSum") -> "OpSum":
        if self.source != other.source or self.target != other.target:
            raise ValueError("sums with different ends")
        return OpSum(self.source, self.target, self.terms + other.terms)

    def scaled(self, c: int) -> "OpSum":
        return OpSum(self.source, self.target,
                     tuple((c * a, op) for a, op in self.terms))

    def is_zero_sum(self) -> bool:
        return not self.terms


# -- convenience constructors ---------------------------------------------------------


def merge_op(arr: Arrangement, g: int, k: int) -> OperatorExpr:
    return OperatorExpr.from_moves(arr, (Move(kind="merge", group=g, pos=k),))


def split_op(arr: Arrangement, g: int, k: int, c, d) -> OperatorExpr:
    return OperatorExpr.from_moves(
        arr, (Move(kind="split", group=g, pos=k, parts=(tuple(c), tuple(d))),))


def poly_op(arr: Arrangement, h: MultiPoly) -> OperatorExpr:
    return OperatorExpr.from_moves(arr, (Move(kind="poly", poly=h),))


def crossing_moves(arr: Arrangement, g: int, k: int):
    """Merge blocks k, k+1 of group g, split back with the parts swapped."""
    x, y = arr.groups[g][k], arr.groups[g][k + 1]
    return (Move(kind="merge", group=g, pos=k),
            Move(kind="split", group=g, pos=k, parts=(y, x)))


def crossing_op(arr: Arrangement, g: int, k: int) -> OperatorExpr:
    return OperatorExpr.from_moves(arr, crossing_moves(arr, g, k))


def shift_op(arr: Arrangement, m: int, direction: str) -> OperatorExpr:
    kind = "shift_left" if direction == "left" else "shift_right"
    return OperatorExpr.from_moves(arr, (Move(kind=kind, group=m),))


def idempotent(mu, e=None) -> OperatorExpr:
    return OperatorExpr.identity(Arrangement.plain(mu, e))


def apply_merge(mu, k, f: MultiPoly, e=None) -> MultiPoly:
    """Merge blocks k, k+1 (0-based) of a plain composition on f;
    non-invariant input is rejected."""
    return merge_op(Arrangement.plain(mu, e), 0, k).apply(f, check=True)


def apply_split(mu, k, c, d, f: MultiPoly, e=None) -> MultiPoly:
    """Split block k of a plain composition into (c, d) on f."""
    return split_op(Arrangement.plain(mu, e), 0, k, c, d).apply(f, check=True)


def apply_shift(sh: Shadowed, m: int, direction: str, f: MultiPoly) -> MultiPoly:
    """Shift the block adjacent to red strand m across it."""
    return shift_op(Arrangement.from_shadowed(sh), m, direction).apply(f)


def horizontal(a: OperatorExpr, b: OperatorExpr) -> OperatorExpr:
    """Side-by-side composition; acts as the tensor product under node-wise
    concatenation of alphabets.  Red strands concatenate at the seam."""
    asrc, bsrc = a.source, b.source
    if not bsrc.join() and not bsrc.charges:
        return a
    if not asrc.join() and not asrc.charges:
        return b
    offs = dim_vector(asrc.join()) if asrc.join() else (0,) * bsrc.e()

    charges = asrc.charges + bsrc.charges
    groups = asrc.groups[:-1] + (asrc.groups[-1] + bsrc.groups[0],) + bsrc.groups[1:]
    new_source = Arrangement(charges=charges, groups=groups)
    amb = dim_vector(new_source.join())
    la = len(asrc.groups) - 1
    apos_last = len(asrc.groups[-1])

    moves = list(a.moves)
    for mv in b.moves:
        if mv.kind in ("merge", "split"):
            if mv.group == 0:
                g2, p2 = la, mv.pos + apos_last
            else:
                g2, p2 = mv.group + la, mv.pos
            moves.append(Move(kind=mv.kind, group=g2, pos=p2, parts=mv.parts))
        elif mv.kind in ("shift_left", "shift_right"):
            moves.append(Move(kind=mv.kind, group=mv.group + la))
        else:
            moves.append(Move(kind="poly", poly=embed_poly(mv.poly, amb, offs)))
    return OperatorExpr.from_moves(new_source, moves)


def embed_poly(h: MultiPoly, amb, node_offsets) -> MultiPoly:
    """Relabel h into a larger ambient, shifting node-i positions by
    node_offsets[i]."""
    from .multipoly import offsets as _off

    src_off = _off(h.ambient)
    dst_off = _off(amb)
    n = sum(amb)
    terms = {}
    for exp, c in h.terms.items():
        ne = [0] * n
        for i, di in enumerate(h.ambient):
            for j in range(di):
                k = exp[src_off[i] + j]
                if k:
                    ne[dst_off[i] + node_offsets[i] + j] = k
        terms[tuple(ne)] = c
    return MultiPoly(amb, terms)


# -- basis morphisms ------------------------------------------------------------------


def _refine_moves(arr: Arrangement, cells_by_block):
    """Split every block of arr into its listed cells, left to right."""
    moves = []
    cur = arr
    for g in range(len(arr.groups)):
        extra = 0
        for k0 in range(len(arr.groups[g])):
            flat = arr.flat_block(g, k0)
            cells = cells_by_block[flat]
            pos = k0 + extra
            for c in cells[:-1]:
                rest = tuple(x - y for x, y in zip(cur.groups[g][pos], c))
                mv = Move(kind="split", group=g, pos=pos,
                          parts=(tuple(c), rest))
                moves.append(mv)
                cur, _ = apply_move_state(cur, mv)
                pos += 1
            extra += len(cells) - 1
    return moves, cur


def basis_morphism(mu_arr: Arrangement, la_arr: Arrangement, rep: CosetRep,
                   h: MultiPoly = None) -> OperatorExpr:
    """The split--multiply--reorder--merge chain of a double coset datum.

    rep carries the per-residue contingency tables between the joined
    compositions of mu_arr (source) and la_arr (target).  Its nonzero
    cells are split off the source blocks in (source block, target block)
    order, h multiplies in the refined invariant ring, a fixed bubble-sort
    word of crossings and red-strand shifts reorders the cells into
    (target block, source block) order, and merges assemble the target
    blocks.  The reduced word chosen for the block permutation is part of
    the basis normalization; different words differ by lower-order terms.
    """
    mu = mu_arr.join()
    la = la_arr.join()
    if rep.source != mu or rep.target != la:
        raise ValueError("coset tables do not match the arrangements")

    cells_src = rep.cells_source_order()
    cells_tgt = rep.cells_target_order()

    # 1. refinement splits on the source
    cells_by_block = [[] for _ in range(len(mu))]
    for (g, hh, v) in cells_src:
        cells_by_block[g].append(v)
    moves, cur = _refine_moves(mu_arr, cells_by_block)

    # 2. polynomial move in the refined invariant ring
    if h is not None and h != MultiPoly.one(h.ambient):
        mv = Move(kind="poly", poly=h)
        moves.append(mv)
        cur, _ = apply_move_state(cur, mv)

    # 3. bubble-sort reordering into target-cell order
    src_order = {cell[:2]: i for i, cell in enumerate(cells_src)}
    tgt_block_group = _block_groups(la_arr)
    desired = []
    for g in range(len(la_arr.groups)):
        if g > 0:
            desired.append(("red", g))
        for (gg, hh, v) in cells_tgt:
            if tgt_block_group[hh] == g:
                desired.append(("cell", src_order[(gg, hh)]))
    rank = {item: i for i, item in enumerate(desired)}

    labels = {}
    idx = 0
    for g in range(len(cur.groups)):
        for k in range(len(cur.groups[g])):
            labels[(g, k)] = idx
            idx += 1
    seq = []
    for g in range(len(cur.groups)):
        if g > 0:
            seq.append(("red", g))
        for k in range(len(cur.groups[g])):
            seq.append(("cell", labels[(g, k)]))
    if sorted(rank[it] for it in seq) != list(range(len(seq))):
        raise ValueError("reordering mismatch between source and target cells")

    while True:
        swapped = False
        for t in range(len(seq) - 1):
            x, y = seq[t], seq[t + 1]
            if rank[x] <= rank[y]:
                continue
            if x[0] == "cell" and y[0] == "cell":
                g, k = _locate_block(cur, t)
                for mv in crossing_moves(cur, g, k):
                    moves.append(mv)
                    cur, _ = apply_move_state(cur, mv)
            elif x[0] == "cell" and y[0] == "red":
                mv = Move(kind="shift_right", group=y[1])
                moves.append(mv)
                cur, _ = apply_move_state(cur, mv)
            elif x[0] == "red" and y[0] == "cell":
                mv = Move(kind="shift_left", group=x[1])
                moves.append(mv)
                cur, _ = apply_move_state(cur, mv)
            else:
                raise ValueError("red strands cannot cross")
            seq[t], seq[t + 1] = y, x
            swapped = True
            break
        if not swapped:
            break

    # 4. merges assembling the target blocks, group by group
    for g in range(len(la_arr.groups)):
        pos = 0
        for hh in [hi for hi in range(len(la)) if tgt_block_group[hi] == g]:
            ncells = sum(1 for c in cells_tgt if c[1] == hh)
            for _ in range(ncells - 1):
                mv = Move(kind="merge", group=g, pos=pos)
                moves.append(mv)
                cur, _ = apply_move_state(cur, mv)
            pos += 1

    op = OperatorExpr.from_moves(mu_arr, moves)
    if op.target != la_arr:
        raise ValueError("basis morphism did not land on the target")
    return op


def _block_groups(arr: Arrangement):
    """Flat block index -> group index."""
    out = {}
    i = 0
    for g, grp in enumerate(arr.groups):
        for _ in range(len(grp)):
            out[i] = g
            i += 1
    return out


def _locate_block(arr: Arrangement, t: int):
    """(group, position) of the t-th item of the red/block sequence."""
    i = 0
    for g, grp in enumerate(arr.groups):
        if g > 0:
            if i == t:
                raise ValueError("item %d is a red strand" % t)
            i += 1
        for k in range(len(grp)):
            if i == t:
                return (g, k)
            i += 1
    raise IndexError(t)


# -- tableau morphisms ----------------------------------------------------------------


def tableau_tables(t, charges, e: int):
    """Source and target arrangements of a tableau's entry-to-row coset
    datum, with its per-residue contingency tables."""
    from .tableaux import refinements, residue

    la_sh, mu_sh = refinements(t, charges, e)
    mu = Arrangement.from_shadowed(mu_sh)
    la = Arrangement.from_shadowed(la_sh)
    mu_join = mu.join()
    la_join = la.join()
    src_index = {}
    i = 0
    for a in range(1, t.ell + 1):
        for g in range(1, len(mu_sh.groups[a - 1]) + 1):
            src_index[(a, g)] = i
            i += 1
    tgt_index = {}
    i = 0
    for k in range(1, len(la_sh.groups) + 1):
        for r in range(1, len(la_sh.groups[k - 1]) + 1):
            tgt_index[(k, r)] = i
            i += 1
    tables = [[[0] * len(la_join) for _ in range(len(mu_join))]
              for _ in range(e)]
    for box in t.boxes():
        k, r, _c = box
        g, a = t.entry(box)
        res = residue(box, charges, e)
        tables[res][src_index[(a, g)]][tgt_index[(k, r)]] += 1
    tables = tuple(tuple(tuple(row) for row in tt) for tt in tables)
    return mu, la, CosetRep(source=mu_join, target=la_join, tables=tables)


def B_of_tableau(t, charges, e: int) -> OperatorExpr:
    """The cellular-generator operator of a semistandard tableau."""
    mu, la, rep = tableau_tables(t, charges, e)
    return basis_morphism(mu, la, rep)


def C_of_pair(s, t, charges, e: int) -> OpSum:
    """star(B_s) after B_t; the zero sum for distinct shapes."""
    if s.shape != t.shape:
        mu_s, _, _ = tableau_tables(s, charges, e)
        mu_t, _, _ = tableau_tables(t, charges, e)
        return OpSum.zero(mu_t, mu_s)
    bs = B_of_tableau(s, charges, e)
    bt = B_of_tableau(t, charges, e)
    return OpSum.of(bt.then(star(bs)))


def chicken_feet(mu_arr: Arrangement):
    """Summands of the complete-refinement vector out of an idempotent.

    One split chain per ordering of each block's unit vectors; summands
    with distinct orderings end on distinct complete-flag idempotents, so
    the formal sum is returned as the list of its chains.
    """
    join = mu_arr.join()
    if not join:
        return [OperatorExpr.identity(mu_arr)]
    e = mu_arr.e()

    def unit_orders(part):
        def rec(left):
            if not any(left):
                yield ()
                return
            for i in range(e):
                if left[i]:
                    nxt = list(left)
                    nxt[i] -= 1
                    u = [0] * e
                    u[i] = 1
                    for tail in rec(tuple(nxt)):
                        yield (tuple(u),) + tail
        return list(rec(tuple(part)))

    per_block = [unit_orders(p) for p in join]
    out = []
    for combo in _iproduct(*per_block):
        cells_by_block = [list(c) for c in combo]
        moves, _ = _refine_moves(mu_arr, cells_by_block)
        out.append(OperatorExpr.from_moves(mu_arr, moves))
    return out


# -- operator equality and graded matrices --------------------------------------------


def invariant_test_set(arr: Arrangement):
    """Spanning set of the source invariants over the total invariants:
    deduplicated Young-orbit sums of the Artin monomials."""
    join = arr.join()
    amb = dim_vector(join)
    gens = arr.invariance_gens()
    seen = set()
    out = []
    for m in artin_basis(amb):
        v = orbit_sum(m, gens)
        key = tuple(sorted(v.terms.items()))
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def op_equal(a, b) -> bool:
    """Equality of operators decided on the finite invariant test set."""
    if a.source != b.source or a.target != b.target:
        raise ValueError("operators have different ends")
    for v in invariant_test_set(a.source):
        if a.apply(v) != b.apply(v):
            return False
    return True


def monomial_basis_invariants(arr: Arrangement, degree: int):
    """Orbit sums spanning the invariant ring in one polynomial degree,
    as (representative monomial, orbit sum) pairs sorted by representative.

    An invariant's coordinate on an orbit is its integer coefficient at
    the representative monomial.
    """
    join = arr.join()
    amb = dim_vector(join)
    gens = arr.invariance_gens()
    n = sum(amb)
    reps = []
    seen = set()
    for exps in _exponents_of_degree(n, degree):
        if exps in seen:
            continue
        m = MultiPoly.monomial(amb, exps)
        v = orbit_sum(m, gens)
        seen.update(v.terms)
        reps.append((max(v.terms), v))
    reps.sort(key=lambda kv: kv[0])
    return reps


def _exponents_of_degree(n, degree):
    if n == 0:
        if degree == 0:
            yield ()
        return
    for first in range(degree + 1):
        for tail in _exponents_of_degree(n - 1, degree - first):
            yield (first,) + tail


def poly_degree_change(op) -> int:
    """Polynomial-degree change of a homogeneous operator, recovered from
    its degree and the grading shifts of its two ends."""
    delta = op.degree + op.source.dim_q() - op.target.dim_q()
    if delta % 2:
        raise ArithmeticError("odd internal degree change")
    return delta // 2


def invariant_coordinates(g: MultiPoly, basis):
    """Integer coordinates of an invariant on an orbit-sum basis; raises
    when g is not in the span (a non-invariance guard)."""
    coords = []
    rebuilt = MultiPoly.zero(g.ambient)
    for key, v in basis:
        c = g.terms.get(key, 0)
        coords.append(c)
        if c:
            rebuilt = rebuilt + c * v
    if rebuilt != g:
        raise ArithmeticError("polynomial not in the invariant span")
    return coords


def graded_matrix(op, cutoff: int):
    """Integer matrices of op on the orbit-sum bases per polynomial degree.

    Returns a dict degree -> (n_rows, n_cols, matrix), matrix[r][c] being
    the coefficient of the r-th target basis element in the image of the
    c-th source basis element.
    """
    shift = poly_degree_change(op)
    out = {}
    for p in range(cutoff + 1):
        src = monomial_basis_invariants(op.source, p)
        if p + shift < 0:
            out[p] = (0, len(src), [])
            continue
        tgt = monomial_basis_invariants(op.target, p + shift)
        mat = [[0] * len(src) for _ in range(len(tgt))]
        for cidx, (_, v) in enumerate(src):
            img = op.apply(v)
            coords = invariant_coordinates(img, tgt)
            for r, val in enumerate(coords):
                mat[r][cidx] = val
        out[p] = (len(tgt), len(src), mat)
    return out
