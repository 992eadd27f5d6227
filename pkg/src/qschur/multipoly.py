"""Exact sparse polynomials in one alphabet per node of a cyclic quiver.

The ring R(d) for a dimension vector d = (d_0, ..., d_{e-1}) has integer
coefficients and variables x[i, j] where i is a node (0-based, arithmetic
mod e) and j a 1-based position inside that node's alphabet, j <= d_i.

A polynomial is a mapping from flat exponent tuples (node-major, one slot
per variable) to nonzero integer coefficients; {} is zero.  All values are
immutable once built, all arithmetic is exact.

Node-wise permutations act by relabelling positions inside a single
alphabet; divided-difference (Demazure) operators are implemented by
subtracting the transposed polynomial and dividing exactly by the linear
form x[i,j] - x[i,j+1], asserting a zero remainder.
"""

from __future__ import annotations

from itertools import product as _iproduct


class NodeMixError(ValueError):
    """A permutation tried to move variables between node alphabets."""


def offsets(ambient):
    """Flat start index of every node's alphabet."""
    off = []
    t = 0
    for di in ambient:
        off.append(t)
        t += di
    return tuple(off)


def nvars(ambient):
    return sum(ambient)


def flat_index(ambient, node, pos):
    """Flat slot of variable x[node, pos] (pos is 1-based)."""
    if not (1 <= pos <= ambient[node]):
        raise IndexError("position %d out of range for node %d with ambient %r"
                         % (pos, node, ambient))
    return offsets(ambient)[node] + pos - 1


class MultiPoly:
    """Element of R(d); .ambient is d, .terms maps exponents to coefficients."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient, terms=None):
        self.ambient = tuple(int(x) for x in ambient)
        n = nvars(self.ambient)
        t = {}
        if terms:
            for exp, c in terms.items():
                if len(exp) != n:
                    raise ValueError("exponent length %d != %d variables"
                                     % (len(exp), n))
                if c:
                    t[tuple(exp)] = int(c)
        self.terms = t

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(ambient) -> "MultiPoly":
        return MultiPoly(ambient)

    @staticmethod
    def const(ambient, c: int) -> "MultiPoly":
        if c == 0:
            return MultiPoly(ambient)
        return MultiPoly(ambient, {(0,) * nvars(ambient): c})

    @staticmethod
    def one(ambient) -> "MultiPoly":
        return MultiPoly.const(ambient, 1)

    @staticmethod
    def var(ambient, node, pos) -> "MultiPoly":
        """The variable x[node, pos], pos 1-based."""
        n = nvars(ambient)
        e = [0] * n
        e[flat_index(ambient, node, pos)] = 1
        return MultiPoly(ambient, {tuple(e): 1})

    @staticmethod
    def monomial(ambient, exps, c: int = 1) -> "MultiPoly":
        return MultiPoly(ambient, {tuple(exps): c})

    # -- basic structure --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({} if other == 0 else
                                  {(0,) * nvars(self.ambient): other})
        return (isinstance(other, MultiPoly) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.terms.items()))))

    def items_sorted(self):
        """Terms under the fixed monomial order: lex on the flat exponent
        vector (node-major position order), then total degree."""
        return sorted(self.terms.items(), key=lambda kv: (kv[0], sum(kv[0])))

    def __repr__(self):
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        off = offsets(self.ambient)
        for exp, c in self.items_sorted()[:8]:
            mono = []
            for i, di in enumerate(self.ambient):
                for j in range(1, di + 1):
                    k = exp[off[i] + j - 1]
                    if k:
                        mono.append("x[%d,%d]%s" % (i, j, "" if k == 1 else "^%d" % k))
            bits.append("%+d*%s" % (c, "*".join(mono) or "1"))
        if len(self.terms) > 8:
            bits.append("...")
        return "MultiPoly(%s)" % " ".join(bits)

    # -- arithmetic --------------------------------------------------------

    def _chk(self, other):
        if self.ambient != other.ambient:
            raise ValueError("ambient mismatch: %r vs %r"
                             % (self.ambient, other.ambient))

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._chk(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            w = out.get(e, 0) + c
            if w:
                out[e] = w
            else:
                del out[e]
        r = MultiPoly.__new__(MultiPoly)
        r.ambient, r.terms = self.ambient, out
        return r

    def __neg__(self) -> "MultiPoly":
        r = MultiPoly.__new__(MultiPoly)
        r.ambient = self.ambient
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly(self.ambient)
            r = MultiPoly.__new__(MultiPoly)
            r.ambient = self.ambient
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        self._chk(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = out.get(e, 0) + c1 * c2
                if w:
                    out[e] = w
                else:
                    del out[e]
        r = MultiPoly.__new__(MultiPoly)
        r.ambient, r.terms = self.ambient, out
        return r

    __rmul__ = __mul__

    # -- degrees -------------------------------------------------------------

    def total_degree(self):
        """Maximal total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self):
        """Common total degree of all terms; None flags inhomogeneity.

        The zero polynomial reports degree 0.
        """
        degs = {sum(e) for e in self.terms}
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs.pop()

    def graded_piece(self, k: int) -> "MultiPoly":
        return MultiPoly(self.ambient,
                         {e: c for e, c in self.terms.items() if sum(e) == k})


# -- node-wise symmetric group action -----------------------------------------


def identity_node_perm(ambient):
    return tuple(tuple(range(di)) for di in ambient)


def node_transposition(ambient, node, j):
    """Swap of positions j, j+1 (1-based) inside one node's alphabet."""
    perms = [list(range(di)) for di in ambient]
    if not (1 <= j and j + 1 <= ambient[node]):
        raise IndexError("transposition (%d,%d) out of range at node %d"
                         % (j, j + 1, node))
    perms[node][j - 1], perms[node][j] = perms[node][j], perms[node][j - 1]
    return tuple(tuple(p) for p in perms)


def node_perm_from_flat(ambient, flat):
    """Split a flat permutation of all variable slots into per-node pieces.

    Rejects permutations moving a slot out of its node's alphabet.
    """
    off = offsets(ambient)
    out = []
    for i, di in enumerate(ambient):
        lo, hi = off[i], off[i] + di
        piece = []
        for p in range(lo, hi):
            q = flat[p]
            if not (lo <= q < hi):
                raise NodeMixError("slot %d of node %d maps outside its alphabet" % (p, i))
            piece.append(q - lo)
        out.append(tuple(piece))
    return tuple(out)


def compose_node_perms(a, b):
    """a after b, per node (a[i][b[i][k]])."""
    return tuple(tuple(ai[bk] for bk in bi) for ai, bi in zip(a, b))


def apply_permutation(p, f: MultiPoly) -> MultiPoly:
    """Relabel variables by a node-wise permutation (a ring automorphism).

    p[i][k] is the 0-based image of position k at node i: the variable in
    slot k moves to slot p[i][k].
    """
    amb = f.ambient
    if len(p) != len(amb) or any(len(pi) != di for pi, di in zip(p, amb)):
        raise NodeMixError("permutation shape %r does not match ambient %r"
                           % (tuple(len(pi) for pi in p), amb))
    for pi, di in zip(p, amb):
        if sorted(pi) != list(range(di)):
            raise NodeMixError("not a permutation within a node: %r" % (pi,))
    off = offsets(amb)
    n = nvars(amb)
    flat = [0] * n
    for i, pi in enumerate(p):
        for k, q in enumerate(pi):
            flat[off[i] + k] = off[i] + q
    out = {}
    for e, c in f.terms.items():
        ne = [0] * n
        for a, k in enumerate(e):
            if k:
                ne[flat[a]] = k
        ne = tuple(ne)
        w = out.get(ne, 0) + c
        if w:
            out[ne] = w
        else:
            del out[ne]
    r = MultiPoly.__new__(MultiPoly)
    r.ambient, r.terms = amb, out
    return r


def swap_vars(f: MultiPoly, node, j) -> MultiPoly:
    """Action of the simple transposition s_j (1-based) at a node."""
    return apply_permutation(node_transposition(f.ambient, node, j), f)


# -- exact division and Demazure operators ------------------------------------


class RemainderError(ArithmeticError):
    """Division that should be exact left a remainder (index bug guard)."""


def exact_div_linear(f: MultiPoly, a: int, b: int) -> MultiPoly:
    """Divide f by (x_a - x_b) where a, b are flat slots; remainder must vanish.

    Classical synthetic division in the variable x_a over the remaining
    ones: monomial c*x_a^k*m contributes c*m*(x_a^{k-1} + x_a^{k-2} x_b +
    ... + x_b^{k-1}), and the remainder is f with x_a substituted by x_b.
    """
    rem = {}
    out = {}
    for e, c in f.terms.items():
        k = e[a]
        le = list(e)
        le[a] = 0
        re = tuple(le[:b] + [le[b] + k] + le[b + 1:]) if k else tuple(le)
        w = rem.get(re, 0) + c
        if w:
            rem[re] = w
        else:
            del rem[re]
        for t in range(k):
            le2 = list(e)
            le2[a] = t
            le2[b] += k - 1 - t
            te = tuple(le2)
            w = out.get(te, 0) + c
            if w:
                out[te] = w
            else:
                del out[te]
    if rem:
        raise RemainderError("nonzero remainder dividing by x_%d - x_%d" % (a, b))
    r = MultiPoly.__new__(MultiPoly)
    r.ambient, r.terms = f.ambient, out
    return r


def demazure(node: int, j: int, f: MultiPoly) -> MultiPoly:
    """Divided difference (f - s_j f)/(x[node,j] - x[node,j+1]), j 1-based."""
    amb = f.ambient
    if not (1 <= j and j + 1 <= amb[node]):
        raise IndexError("demazure position %d out of range at node %d" % (j, node))
    g = f - swap_vars(f, node, j)
    a = flat_index(amb, node, j)
    b = flat_index(amb, node, j + 1)
    return exact_div_linear(g, a, b)


def demazure_word(word, f: MultiPoly) -> MultiPoly:
    """Apply the composite Demazure operator of a word [(node, j), ...].

    The word is read as an operator product: the last letter acts first,
    so that a word spelling w = s_{i_1} s_{i_2} ... s_{i_l} computes the
    operator for w (independent of the chosen reduced word).
    """
    for node, j in reversed(list(word)):
        f = demazure(node, j, f)
    return f


# -- permutations and reduced words --------------------------------------------


def perm_compose(u, v):
    """u after v on 0-based one-line tuples: (u*v)(k) = u(v(k))."""
    return tuple(u[v[k]] for k in range(len(v)))


def perm_inverse(u):
    out = [0] * len(u)
    for k, uk in enumerate(u):
        out[uk] = k
    return tuple(out)


def perm_length(u) -> int:
    """Number of inversions."""
    n = len(u)
    return sum(1 for a in range(n) for b in range(a + 1, n) if u[a] > u[b])


def reduced_word(w):
    """A fixed bubble-sort reduced word for a 0-based one-line permutation.

    Returns a list of 0-based adjacent positions i (swapping i, i+1) such
    that w = s_{i_1} ... s_{i_l} with l = number of inversions.
    """
    v = list(w)
    rec = []
    n = len(v)
    more = True
    while more:
        more = False
        for i in range(n - 1):
            if v[i] > v[i + 1]:
                v[i], v[i + 1] = v[i + 1], v[i]
                rec.append(i)
                more = True
    return rec[::-1]


def grassmann_perm(c: int, d: int):
    """Minimal-length representative of w_0 in S_{c+d}/(S_c x S_d).

    One-line (0-based): positions 0..c-1 move up by d, positions c..c+d-1
    move down to 0..d-1.  Its Demazure operator integrates (S_c x S_d)-
    invariants onto S_{c+d}-invariants.
    """
    return tuple(list(range(d, d + c)) + list(range(d)))


def merge_demazure_word(ambient, node, base: int, c: int, d: int):
    """Word of the Demazure operator merging adjacent groups of sizes c, d.

    Positions are global: the two groups occupy base+1 .. base+c+d (1-based)
    inside the given node's alphabet.
    """
    if c == 0 or d == 0:
        return []
    w = grassmann_perm(c, d)
    return [(node, base + i + 1) for i in reduced_word(w)]


# -- closed formula for the longest element ------------------------------------


def vandermonde(ambient, node, base: int, r: int) -> MultiPoly:
    """Product of (x_a - x_b) over base+1 <= a < b <= base+r at one node."""
    f = MultiPoly.one(ambient)
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            f = f * (MultiPoly.var(ambient, node, base + a)
                     - MultiPoly.var(ambient, node, base + b))
    return f


def demazure_longest_closed(ambient, node, base: int, r: int, f: MultiPoly) -> MultiPoly:
    """Alternating-sum formula for the operator of the longest element of S_r.

    Computes (sum over w of sign(w) w(f)) divided exactly by the
    Vandermonde determinant of the r consecutive variables starting after
    `base` at the given node.  Independent oracle for the merge chain.
    """
    from itertools import permutations

    amb = f.ambient
    acc = MultiPoly.zero(amb)
    ident = list(range(amb[node]))
    for sigma in permutations(range(r)):
        inv = sum(1 for a in range(r) for b in range(a + 1, r) if sigma[a] > sigma[b])
        pi = list(ident)
        for k in range(r):
            pi[base + k] = base + sigma[k]
        perms = [tuple(range(di)) for di in amb]
        perms[node] = tuple(pi)
        g = apply_permutation(tuple(perms), f)
        acc = acc + (g if inv % 2 == 0 else -g)
    for a in range(1, r + 1):
        for b in range(a + 1, r + 1):
            if acc.is_zero():
                return acc
            acc = exact_div_linear(acc,
                                   flat_index(amb, node, base + a),
                                   flat_index(amb, node, base + b))
    return acc


# -- Euler classes ---------------------------------------------------------------


def euler_class(c, d) -> MultiPoly:
    """Product of (x[i+1, j] - x[i, c_i + k]) over nodes i (mod e),
    1 <= j <= c_{i+1}, 1 <= k <= d_i, in the ambient c + d.

    Empty products give 1.
    """
    c = tuple(c)
    d = tuple(d)
    e = len(c)
    amb = tuple(a + b for a, b in zip(c, d))
    f = MultiPoly.one(amb)
    for i in range(e):
        ip1 = (i + 1) % e
        for j in range(1, c[ip1] + 1):
            for k in range(c[i] + 1, c[i] + d[i] + 1):
                f = f * (MultiPoly.var(amb, ip1, j) - MultiPoly.var(amb, i, k))
    return f


def euler_class_local(ambient, bases, c, d) -> MultiPoly:
    """Euler class of a split relabelled into a larger ambient ring.

    bases[i] is the number of node-i variables preceding the split block,
    so the block's node-i variables are positions bases[i]+1 ... bases[i]+
    c_i+d_i.
    """
    e = len(c)
    f = MultiPoly.one(ambient)
    for i in range(e):
        ip1 = (i + 1) % e
        for j in range(1, c[ip1] + 1):
            for k in range(c[i] + 1, c[i] + d[i] + 1):
                f = f * (MultiPoly.var(ambient, ip1, bases[ip1] + j)
                         - MultiPoly.var(ambient, i, bases[i] + k))
    return f


# -- Artin basis and invariants ---------------------------------------------------


def artin_basis(d):
    """All monomials with exponent of x[i,j] at most d_i - j.

    These generate R(d) freely over the total invariants R(d)^{S_d}.
    """
    d = tuple(d)
    ranges = []
    for i, di in enumerate(d):
        for j in range(1, di + 1):
            ranges.append(range(di - j + 1))
    out = []
    for exps in _iproduct(*ranges):
        out.append(MultiPoly.monomial(d, exps))
    return out


def young_subgroup_transpositions(ambient, block_sizes_per_node):
    """Adjacent transpositions generating the Young subgroup of a flag.

    block_sizes_per_node[i] lists the consecutive segment sizes cutting
    node i's alphabet.  Yields (node, j) with j 1-based.
    """
    for i, sizes in enumerate(block_sizes_per_node):
        base = 0
        for s in sizes:
            for j in range(base + 1, base + s):
                yield (i, j)
            base += s


def is_invariant(f: MultiPoly, gens) -> bool:
    """True when f is fixed by every listed transposition (node, j)."""
    for node, j in gens:
        if swap_vars(f, node, j) != f:
            return False
    return True


def orbit_sum(f: MultiPoly, gens) -> MultiPoly:
    """Sum of the orbit of f under the group generated by the transpositions.

    Used to produce invariant test vectors; f should be a monomial.
    """
    gens = list(gens)
    seen = {f}
    frontier = [f]
    while frontier:
        nxt = []
        for g in frontier:
            for node, j in gens:
                h = swap_vars(g, node, j)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    acc = MultiPoly.zero(f.ambient)
    for g in seen:
        acc = acc + g
    return acc


def elementary_symmetric(ambient, node, k: int) -> MultiPoly:
    """e_k in the full alphabet of one node (a total invariant there)."""
    from itertools import combinations

    di = ambient[node]
    acc = MultiPoly.zero(ambient)
    for sub in combinations(range(1, di + 1), k):
        m = MultiPoly.one(ambient)
        for j in sub:
            m = m * MultiPoly.var(ambient, node, j)
        acc = acc + m
    return acc
