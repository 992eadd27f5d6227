"""Multipartitions, semistandard multitableaux and degree statistics.

Boxes are triples (component, row, column), all 1-based.  The residue of a
box in component k is (z_k + col - row) mod e for the charge z.  Entries of
a tableau are pairs (number, alphabet), ordered first by alphabet, then by
number.

The rule coupling alphabets to components is configurable because the two
natural readings differ; ENTRY_RULE_DEFAULT keeps the reading validated by
the classical worked examples: an entry from alphabet k may only be placed
in components 1..k (equivalently, component c accepts alphabets >= c).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .compositions import Shadowed, dim_vector

ENTRY_RULE_DEFAULT = "alpha_ge_comp"   # alphabet index >= component index
ENTRY_RULE_ALT = "comp_ge_alpha"       # the mirrored reading, kept testable


def entry_allowed(alphabet: int, component: int, rule: str = ENTRY_RULE_DEFAULT) -> bool:
    if rule == "alpha_ge_comp":
        return alphabet >= component
    if rule == "comp_ge_alpha":
        return component >= alphabet
    raise ValueError("unknown entry rule %r" % (rule,))


# -- multipartitions ---------------------------------------------------------------


def check_multipartition(shape, ell=None):
    shape = tuple(tuple(int(r) for r in comp) for comp in shape)
    if ell is not None and len(shape) != ell:
        raise ValueError("expected %d components" % ell)
    for comp in shape:
        if any(r <= 0 for r in comp):
            raise ValueError("rows must be positive: %r" % (comp,))
        if any(comp[i] < comp[i + 1] for i in range(len(comp) - 1)):
            raise ValueError("rows must weakly decrease: %r" % (comp,))
    return shape


def size(shape) -> int:
    return sum(sum(comp) for comp in shape)


def boxes(shape):
    out = []
    for k, comp in enumerate(shape, start=1):
        for r, row_len in enumerate(comp, start=1):
            for c in range(1, row_len + 1):
                out.append((k, r, c))
    return out


def residue(box, charges, e: int) -> int:
    k, r, c = box
    return (charges[k - 1] + c - r) % e


def multipartitions(n: int, ell: int):
    """All ell-multipartitions of n, in a fixed enumeration order."""
    parts = _partitions(n)

    def rec(k, rem):
        if k == ell - 1:
            for p in _partitions_of(rem):
                yield (p,)
            return
        for a in range(rem + 1):
            for p in _partitions_of(a):
                for tail in rec(k + 1, rem - a):
                    yield (p,) + tail

    del parts
    return list(rec(0, n))


@lru_cache(maxsize=None)
def _partitions_of(n: int):
    return tuple(_partitions(n))


def _partitions(n: int, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for tail in _partitions(n - first, first):
            out.append((first,) + tail)
    return out


def cell_key(shape):
    """Sort key realizing the cell order on multipartitions of a common size.

    Shapes are compared lexicographically on their concatenated padded row
    vectors, with the lex-LARGER row vector being the cell-SMALLER shape;
    this is the order in which standard-basis triangularity of the h
    vectors holds (boxes pushed toward earlier rows/components sort lower).
    """
    n = size(shape) + 1
    key = []
    for comp in shape:
        padded = list(comp) + [0] * (n - len(comp))
        key.extend(-x for x in padded)
    return tuple(key)


def cell_less(a, b) -> bool:
    return cell_key(a) < cell_key(b)


def addable_boxes(shape, ell=None):
    """Positions whose addition keeps every component a partition."""
    if ell is None:
        ell = len(shape)
    out = []
    for k in range(1, ell + 1):
        comp = shape[k - 1] if k <= len(shape) else ()
        for r in range(1, len(comp) + 2):
            cur = comp[r - 1] if r <= len(comp) else 0
            above = comp[r - 2] if r >= 2 else None
            if above is None or cur < above:
                out.append((k, r, cur + 1))
    return out


def removable_boxes(shape):
    out = []
    for k, comp in enumerate(shape, start=1):
        for r, row_len in enumerate(comp, start=1):
            below = comp[r] if r < len(comp) else 0
            if row_len > below:
                out.append((k, r, row_len))
    return out


def add_box(shape, box):
    k, r, c = box
    comps = [list(comp) for comp in shape]
    while len(comps) < k:
        comps.append([])
    comp = comps[k - 1]
    if r == len(comp) + 1:
        comp.append(1)
    else:
        comp[r - 1] += 1
    if comp[r - 1] != c:
        raise ValueError("box %r not addable to %r" % (box, shape))
    return tuple(tuple(c_) for c_ in comps)


def contains(eta, xi) -> bool:
    """Componentwise containment of diagrams."""
    if len(eta) < len(xi):
        return False
    for k in range(len(xi)):
        a, b = eta[k] if k < len(eta) else (), xi[k]
        for r, row in enumerate(b):
            if r >= len(a) or a[r] < row:
                return False
    return True


def is_below(box, other) -> bool:
    """True when `other` lies strictly below `box`: a strictly lower row of
    the same component, or anywhere in a later component."""
    (k1, r1, _), (k2, r2, _) = box, other
    return k2 > k1 or (k2 == k1 and r2 > r1)


# -- semistandard tableaux -----------------------------------------------------------


@dataclass(frozen=True)
class Tableau:
    """A filling of an ell-multipartition with (number, alphabet) entries."""

    shape: tuple
    entries: tuple  # tuple of tuples of rows; entries[k-1][r-1][c-1] = (g, a)
    ell: int

    def entry(self, box):
        k, r, c = box
        return self.entries[k - 1][r - 1][c - 1]

    def boxes(self):
        return boxes(self.shape)

    def reading_word(self):
        """Entries read row by row, within components in order."""
        out = []
        for comp in self.entries:
            for row in comp:
                out.extend(row)
        return tuple(out)

    def mult_type(self):
        """Multiplicity type: counts[k-1][g-1] = number of g_k entries."""
        maxnum = [0] * self.ell
        for comp in self.entries:
            for row in comp:
                for g, a in row:
                    maxnum[a - 1] = max(maxnum[a - 1], g)
        counts = [[0] * m for m in maxnum]
        for comp in self.entries:
            for row in comp:
                for g, a in row:
                    counts[a - 1][g - 1] += 1
        return tuple(tuple(c) for c in counts)

    def is_standard(self) -> bool:
        seen = set()
        for comp in self.entries:
            for row in comp:
                for x in row:
                    if x in seen:
                        return False
                    seen.add(x)
        return True

    def __repr__(self):
        comps = []
        for comp in self.entries:
            rows = [" ".join("%d_%d" % (g, a) for g, a in row) for row in comp]
            comps.append("[" + " / ".join(rows) + "]"if rows else "[]")
        return "Tableau(%s)" % " | ".join(comps)


def _entry_key(x):
    g, a = x
    return (a, g)


def validate_tableau(t: Tableau, rule: str = ENTRY_RULE_DEFAULT):
    """Raise ValueError when a semistandardness rule fails."""
    check_multipartition(t.shape, t.ell)
    used = [set() for _ in range(t.ell)]
    for k, comp in enumerate(t.entries, start=1):
        shape_comp = t.shape[k - 1] if k <= len(t.shape) else ()
        if tuple(len(r) for r in comp) != shape_comp:
            raise ValueError("entries do not match shape in component %d" % k)
        for r, row in enumerate(comp, start=1):
            for c, x in enumerate(row, start=1):
                g, a = x
                if not (1 <= a <= t.ell and g >= 1):
                    raise ValueError("bad entry %r" % (x,))
                if not entry_allowed(a, k, rule):
                    raise ValueError("alphabet %d not allowed in component %d" % (a, k))
                if c > 1 and _entry_key(row[c - 2]) > _entry_key(x):
                    raise ValueError("row not weakly increasing at %r" % ((k, r, c),))
                if r > 1 and _entry_key(comp[r - 2][c - 1]) >= _entry_key(x):
                    raise ValueError("column not strictly increasing at %r" % ((k, r, c),))
                used[a - 1].add(g)
    for a, nums in enumerate(used, start=1):
        if nums and sorted(nums) != list(range(1, max(nums) + 1)):
            raise ValueError("gap in alphabet %d: %r" % (a, sorted(nums)))
    return t


def tableau_from_rows(shape, rows, ell=None):
    """Build and validate a tableau from per-component lists of rows of
    (number, alphabet) pairs."""
    shape = tuple(tuple(c) for c in shape)
    if ell is None:
        ell = len(shape)
    entries = tuple(tuple(tuple(tuple(x) for x in row) for row in comp)
                    for comp in rows)
    t = Tableau(shape=shape, entries=entries, ell=ell)
    return validate_tableau(t)


def ground_state(shape, ell=None):
    """The tableau whose entries are just the row numbers (alphabet = component)."""
    shape = tuple(tuple(c) for c in shape)
    if ell is None:
        ell = len(shape)
    rows = []
    for k, comp in enumerate(shape, start=1):
        rows.append([[(r, k)] * row_len for r, row_len in enumerate(comp, start=1)])
    return tableau_from_rows(shape, rows, ell)


def enumerate_semistandard(shape, ell=None, rule: str = ENTRY_RULE_DEFAULT,
                           mult_type=None, standard_only: bool = False,
                           max_number=None):
    """All semistandard fillings of a shape, optionally filtered.

    mult_type fixes the multiplicity type (a tuple per alphabet of counts
    per number); standard_only keeps bijective fillings.  Finiteness comes
    from the no-gap rule: numbers never exceed the box count.
    """
    shape = check_multipartition(shape, ell)
    if ell is None:
        ell = len(shape)
    n = size(shape)
    if n == 0:
        return [Tableau(shape=shape, entries=tuple(() for _ in shape), ell=ell)]
    cap = n if max_number is None else max_number
    if mult_type is not None:
        mult_type = tuple(tuple(m) for m in mult_type)
        if sum(sum(m) for m in mult_type) != n:
            return []

    boxlist = boxes(shape)
    grid = [[[None] * row_len for row_len in comp] for comp in shape]
    out = []
    remaining = None
    if mult_type is not None:
        remaining = {}
        for a, counts in enumerate(mult_type, start=1):
            for g, m in enumerate(counts, start=1):
                if m:
                    remaining[(g, a)] = m

    def candidates(k, r, c):
        lo = None
        if c > 1:
            lo = grid[k - 1][r - 1][c - 2]
        above = grid[k - 1][r - 2][c - 1] if r > 1 else None
        for a in range(1, ell + 1):
            if not entry_allowed(a, k, rule):
                continue
            for g in range(1, cap + 1):
                x = (g, a)
                if mult_type is not None and remaining.get(x, 0) == 0:
                    continue
                if lo is not None and _entry_key(x) < _entry_key(lo):
                    continue
                if above is not None and _entry_key(x) <= _entry_key(above):
                    continue
                yield x

    used_counts = {}

    def no_gaps():
        maxnum = {}
        for (g, a) in used_counts:
            maxnum[a] = max(maxnum.get(a, 0), g)
        for a, m in maxnum.items():
            for g in range(1, m + 1):
                if (g, a) not in used_counts:
                    return False
        return True

    def rec(idx):
        if idx == len(boxlist):
            if no_gaps():
                entries = tuple(tuple(tuple(row) for row in comp) for comp in grid)
                out.append(Tableau(shape=shape, entries=entries, ell=ell))
            return
        k, r, c = boxlist[idx]
        for x in candidates(k, r, c):
            if standard_only and used_counts.get(x, 0) >= 1:
                continue
            grid[k - 1][r - 1][c - 1] = x
            used_counts[x] = used_counts.get(x, 0) + 1
            if mult_type is not None:
                remaining[x] -= 1
            rec(idx + 1)
            if mult_type is not None:
                remaining[x] += 1
            used_counts[x] -= 1
            if not used_counts[x]:
                del used_counts[x]
            grid[k - 1][r - 1][c - 1] = None

    rec(0)
    return out


def enumerate_standard(shape, ell=None, rule: str = ENTRY_RULE_DEFAULT):
    return enumerate_semistandard(shape, ell=ell, rule=rule, standard_only=True)


# -- reading word, minimal permutation, refinements -------------------------------


def w_of_tableau(t: Tableau):
    """Minimal-length permutation sorting the reading word (0-based one-line).

    Position p of the reading word is sent to its rank under a stable sort
    by entry; ties keep their original order, which realizes minimality in
    the double coset of row and type Young subgroups.
    """
    word = t.reading_word()
    order = sorted(range(len(word)), key=lambda p: (_entry_key(word[p]), p))
    w = [0] * len(word)
    for rank, p in enumerate(order):
        w[p] = rank
    return tuple(w)


def refinements(t: Tableau, charges, e: int):
    """The shadowed compositions (row data, entry data) of a tableau.

    Row data: group k lists, per row of component k, the residue-count
    vector of that row.  Entry data: group a lists, per number g used from
    alphabet a, the residue-count vector of the boxes with entry (g, a).
    """
    ell = t.ell
    la_groups = []
    for k, comp in enumerate(t.shape, start=1):
        parts = []
        for r, row_len in enumerate(comp, start=1):
            v = [0] * e
            for c in range(1, row_len + 1):
                v[residue((k, r, c), charges, e)] += 1
            parts.append(tuple(v))
        la_groups.append(tuple(parts))
    mt = t.mult_type()
    mu_groups = []
    counts = {}
    for box in t.boxes():
        g, a = t.entry(box)
        v = counts.setdefault((a, g), [0] * e)
        v[residue(box, charges, e)] += 1
    for a in range(1, ell + 1):
        parts = []
        for g in range(1, len(mt[a - 1]) + 1):
            v = counts.get((a, g))
            if v is None:
                raise ValueError("gap in alphabet %d" % a)
            parts.append(tuple(v))
        mu_groups.append(tuple(parts))
    z = tuple(charges)
    return (Shadowed(charges=z, groups=tuple(la_groups)),
            Shadowed(charges=z, groups=tuple(mu_groups)))


def row_refinement(shape, charges, e: int, ell=None):
    """Row data of a shape (independent of any filling)."""
    t = ground_state(shape, ell)
    la, _ = refinements(t, charges, e)
    return la


# -- degree statistics ---------------------------------------------------------------


def deg_tableau(t: Tableau, charges, e: int) -> int:
    """Combinatorial degree: the sum over the distinct entries x (from
    alphabet a) of the skew weight m_skew of adding x's boxes to the
    subdiagram of strictly smaller entries.

    Each step is evaluated inside the first a components with the first a
    charges: an alphabet-a box is placed before any later component
    exists.  On standard tableaux every step adds a single box, where
    m_skew reduces to counting same-residue addable boxes strictly below
    the new box (in the grown diagram) minus removable ones strictly
    below it (in the old diagram).
    """
    keys = sorted({_entry_key(t.entry(b)) for b in t.boxes()})
    total = 0
    for key in keys:
        a = key[0]
        le_shape = _subshape(t, lambda k2: k2 <= key)[:a]
        lt_shape = _subshape(t, lambda k2: k2 < key)[:a]
        total += m_skew(le_shape, lt_shape, charges[:a], e)
    return total


def _subshape(t: Tableau, pred):
    comps = []
    for k, comp in enumerate(t.entries, start=1):
        rows = []
        for row in comp:
            m = sum(1 for x in row if pred(_entry_key(x)))
            if m:
                rows.append(m)
        comps.append(tuple(rows))
    return tuple(comps)


class ColumnViolation(ValueError):
    """The skew diagram has two boxes in one column."""


def m_skew(eta, xi, charges, e: int) -> int:
    """Weight exponent of the box-adding operator on the q-Fock space.

    Rejects skews with two boxes in one column.  The value is the degree
    of the canonical morphism adjoining the skew boxes: the new content
    splits into its per-row cells, each cell crosses every old box
    strictly below its row (lower rows of the same component or any later
    component) and every red strand below its component, and merges into
    its row.  All contributions are bilinear expressions in residue
    counts; for a single added box x the total collapses to the number of
    same-residue addable boxes of eta strictly below x minus the number
    of same-residue removable boxes of xi strictly below x.
    """
    eta = check_multipartition(eta)
    xi = check_multipartition(xi)
    ell = max(len(eta), len(xi), len(charges))
    if not contains(eta, xi):
        raise ValueError("xi must be contained in eta")

    def row_of(shape, k, r):
        if k <= len(shape) and r <= len(shape[k - 1]):
            return shape[k - 1][r - 1]
        return 0

    cells = {}
    for k in range(1, ell + 1):
        comp = eta[k - 1] if k <= len(eta) else ()
        for r in range(1, len(comp) + 1):
            hi = comp[r - 1]
            lo = row_of(xi, k, r)
            below = comp[r] if r < len(comp) else 0
            if lo < below:
                raise ColumnViolation("two boxes in a column of component %d" % k)
            if lo < hi:
                v = [0] * e
                for c in range(lo + 1, hi + 1):
                    v[residue((k, r, c), charges, e)] += 1
                cells[(k, r)] = v

    def pair_deg(c, d):
        return sum(c[i] * (d[(i - 1) % e] - d[i]) for i in range(e))

    keys = sorted(cells)
    total = 0
    rem = [0] * e
    for kk in keys:
        for i in range(e):
            rem[i] += cells[kk][i]
    for kk in keys:
        C = cells[kk]
        rest = [rem[i] - C[i] for i in range(e)]
        if any(rest):
            total += pair_deg(C, rest)
        rem = rest
    for (k, r) in keys:
        C = cells[(k, r)]
        X = [0] * e
        for kb in range(1, ell + 1):
            comp = xi[kb - 1] if kb <= len(xi) else ()
            for rr in range(1, len(comp) + 1):
                if kb > k or (kb == k and rr > r):
                    for cc in range(1, comp[rr - 1] + 1):
                        X[residue((kb, rr, cc), charges, e)] += 1
        R = [0] * e
        for cc in range(1, row_of(xi, k, r) + 1):
            R[residue((k, r, cc), charges, e)] += 1
        total += pair_deg(C, X) + pair_deg(X, C) + pair_deg(R, C)
        total += sum(C[charges[m] % e] for m in range(k, len(charges)))
    return total


def m_skew_single_box(eta, xi, charges, e: int) -> int:
    """Independent oracle for one-box skews: same-residue addable boxes of
    eta strictly below the new box minus same-residue removable boxes of
    xi strictly below it."""
    ell = max(len(eta), len(xi), len(charges))
    skew = []
    for k in range(1, ell + 1):
        a = eta[k - 1] if k <= len(eta) else ()
        b = xi[k - 1] if k <= len(xi) else ()
        for r in range(1, len(a) + 1):
            hi = a[r - 1]
            lo = b[r - 1] if r <= len(b) else 0
            for c in range(lo + 1, hi + 1):
                skew.append((k, r, c))
    if len(skew) != 1:
        raise ValueError("oracle applies to single-box skews only")
    x = skew[0]
    rx = residue(x, charges, e)
    total = sum(1 for p in addable_boxes(eta, ell)
                if is_below(x, p) and residue(p, charges, e) == rx)
    total -= sum(1 for p in removable_boxes(xi)
                 if is_below(x, p) and residue(p, charges, e) == rx)
    return total


# -- pair counts -----------------------------------------------------------------------


def count_pairs(xi, ell: int, rule: str = ENTRY_RULE_DEFAULT) -> int:
    """Number of same-shape pairs (S, T) with S standard and T of
    multiplicity type xi (an ell-tuple of row-count tuples)."""
    xi = tuple(tuple(c) for c in xi)
    n = sum(sum(c) for c in xi)
    total = 0
    for shape in multipartitions(n, ell):
        t_count = len(enumerate_semistandard(shape, ell=ell, rule=rule,
                                             mult_type=xi))
        if not t_count:
            continue
        s_count = len(enumerate_standard(shape, ell=ell, rule=rule))
        total += s_count * t_count
    return total
