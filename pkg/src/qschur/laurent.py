"""Laurent polynomials over the integers in one variable q.

This is the scalar ring for all graded dimensions, Fock space
coefficients and decomposition numbers.  A Laurent polynomial is kept
as a mapping exponent -> nonzero integer coefficient; the empty mapping
is zero.  Instances are immutable.
"""

from __future__ import annotations


class Laurent:
    """An element of Z[q, q^-1]."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, v in dict(coeffs).items():
                if v:
                    c[int(k)] = int(v)
        self._c = c

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Laurent":
        return Laurent()

    @staticmethod
    def one() -> "Laurent":
        return Laurent({0: 1})

    @staticmethod
    def q(exp: int = 1, coeff: int = 1) -> "Laurent":
        """The monomial coeff * q^exp."""
        return Laurent({exp: coeff})

    # -- mapping access ------------------------------------------------

    def coeffs(self) -> dict:
        """Copy of the exponent -> coefficient mapping."""
        return dict(self._c)

    def __getitem__(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def items_sorted(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self._c)
        for k, v in other._c.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        r = Laurent.__new__(Laurent)
        r._c = out
        return r

    def __neg__(self) -> "Laurent":
        r = Laurent.__new__(Laurent)
        r._c = {k: -v for k, v in self._c.items()}
        return r

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Laurent()
            r = Laurent.__new__(Laurent)
            r._c = {k: v * other for k, v in self._c.items()}
            return r
        out = {}
        for k1, v1 in self._c.items():
            for k2, v2 in other._c.items():
                k = k1 + k2
                w = out.get(k, 0) + v1 * v2
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        r = Laurent.__new__(Laurent)
        r._c = out
        return r

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._c == ({} if other == 0 else {0: other})
        return isinstance(other, Laurent) and self._c == other._c

    def __hash__(self):
        return hash(tuple(sorted(self._c.items())))

    # -- structure queries ----------------------------------------------

    def bar(self) -> "Laurent":
        """The substitution q -> q^-1."""
        r = Laurent.__new__(Laurent)
        r._c = {-k: v for k, v in self._c.items()}
        return r

    def is_bar_symmetric(self) -> bool:
        return self.bar() == self

    def nonneg_coeffs(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def in_qinv_lattice(self) -> bool:
        """True when every exponent is <= -1."""
        return all(k <= -1 for k in self._c)

    def max_exp(self):
        return max(self._c) if self._c else None

    def min_exp(self):
        return min(self._c) if self._c else None

    def eval_at_one(self) -> int:
        return sum(self._c.values())

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        """Exponent -> coefficient with decimal string keys, sorted."""
        return {str(k): v for k, v in self.items_sorted()}

    @staticmethod
    def from_json_dict(d: dict) -> "Laurent":
        return Laurent({int(k): int(v) for k, v in d.items()})

    def to_expr(self) -> str:
        """Render as "c*q^k+..." with exponents descending; "0" if zero."""
        if not self._c:
            return "0"
        parts = []
        for k, v in sorted(self._c.items(), reverse=True):
            parts.append("%d*q^%d" % (v, k))
        return "+".join(parts).replace("+-", "-")

    @staticmethod
    def from_expr(s: str) -> "Laurent":
        s = s.strip()
        if s == "0":
            return Laurent()
        s = s.replace("-", "+-")
        out = {}
        for term in s.split("+"):
            term = term.strip()
            if not term:
                continue
            c, _, k = term.partition("*q^")
            out[int(k)] = out.get(int(k), 0) + int(c)
        return Laurent(out)

    def __repr__(self):
        return "Laurent(%s)" % (self.to_expr(),)


def bar_q(p: Laurent) -> Laurent:
    """q -> q^-1 on a Laurent polynomial (exponent negation)."""
    return p.bar()
