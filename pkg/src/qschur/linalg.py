"""Exact linear algebra over the rationals for integer matrices.

Sparse rows as dicts column -> Fraction; used for the rank tests of the
basis theorem and for expanding operators in a spanning set.
"""

from __future__ import annotations

from fractions import Fraction


def exact_rank(rows) -> int:
    """Rank over Q of a list of sparse rows (dict col -> number)."""
    basis = []  # list of (pivot, row) with row normalized at pivot
    rank = 0
    for row in rows:
        cur = {c: Fraction(v) for c, v in row.items() if v}
        for pivot, base in basis:
            if pivot in cur:
                factor = cur[pivot]
                for c, v in base.items():
                    w = cur.get(c, Fraction(0)) - factor * v
                    if w:
                        cur[c] = w
                    else:
                        cur.pop(c, None)
        if cur:
            pivot = min(cur)
            inv = Fraction(1) / cur[pivot]
            cur = {c: v * inv for c, v in cur.items()}
            basis.append((pivot, cur))
            rank += 1
    return rank


def solve_exact(rows, target):
    """Coefficients x with sum x_i rows_i = target, all sparse dicts; None
    when the target is outside the span.  The system must have a unique
    solution on its support (rows independent), which callers ensure."""
    # Gaussian elimination carrying the combination bookkeeping.
    basis = []  # (pivot, row, combo)
    for i, row in enumerate(rows):
        cur = {c: Fraction(v) for c, v in row.items() if v}
        combo = {i: Fraction(1)}
        for pivot, base, bc in basis:
            if pivot in cur:
                f = cur[pivot]
                for c, v in base.items():
                    w = cur.get(c, Fraction(0)) - f * v
                    if w:
                        cur[c] = w
                    else:
                        cur.pop(c, None)
                for c, v in bc.items():
                    w = combo.get(c, Fraction(0)) - f * v
                    if w:
                        combo[c] = w
                    else:
                        combo.pop(c, None)
        if cur:
            pivot = min(cur)
            inv = Fraction(1) / cur[pivot]
            cur = {c: v * inv for c, v in cur.items()}
            combo = {c: v * inv for c, v in combo.items()}
            basis.append((pivot, cur, combo))
    tgt = {c: Fraction(v) for c, v in target.items() if v}
    out = {}
    for pivot, base, bc in basis:
        if pivot in tgt:
            f = tgt[pivot]
            for c, v in base.items():
                w = tgt.get(c, Fraction(0)) - f * v
                if w:
                    tgt[c] = w
                else:
                    tgt.pop(c, None)
            for c, v in bc.items():
                w = out.get(c, Fraction(0)) + f * v
                if w:
                    out[c] = w
                else:
                    out.pop(c, None)
    if tgt:
        return None
    return out
