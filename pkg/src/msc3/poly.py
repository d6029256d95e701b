"""Sparse polynomials in the stabilizer unknowns a and b.

Only ring operations are provided; they are enough to push a symbolic
(a, b) through ``act_stabilizer`` and read off the equations a
normalization step has to solve.
"""
from __future__ import annotations


from .field import NUMBER_TYPES, FieldCtx, Scalar

VARS = ("a", "b")


class Poly:
    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: FieldCtx, terms=None):
        self.ctx = ctx
        self.terms = {m: v for m, v in (terms or {}).items() if not v.is_zero()}

    @classmethod
    def const(cls, ctx, value) -> Poly:
        return cls(ctx, {(0, 0): ctx.scalar(value)})

    @classmethod
    def var(cls, ctx, name: str) -> Poly:
        return cls(ctx, {(1, 0) if name == "a" else (0, 1): ctx.one()})

    def _lift(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (Scalar,) + NUMBER_TYPES):
            return Poly.const(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, v in other.terms.items():
            terms[m] = terms[m] + v if m in terms else v
        return Poly(self.ctx, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ctx, {m: -v for m, v in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        terms = {}
        for (i, j), v in self.terms.items():
            for (k, l), w in other.terms.items():
                m = (i + k, j + l)
                terms[m] = terms[m] + v * w if m in terms else v * w
        return Poly(self.ctx, terms)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self, var: str) -> int:
        i = VARS.index(var)
        return max((m[i] for m in self.terms), default=-1)

    def coefficients(self, var: str) -> list[Poly]:
        """Coefficients of var^0, var^1, ... as polynomials in the other variable."""
        i = VARS.index(var)
        out = [dict() for _ in range(self.degree(var) + 1)]
        for m, v in self.terms.items():
            rest = (0, m[1]) if i == 0 else (m[0], 0)
            out[m[i]][rest] = v
        return [Poly(self.ctx, t) for t in out]

    def constant(self) -> Scalar:
        """Value of a polynomial with no variables left."""
        if any(m != (0, 0) for m in self.terms):
            raise ValueError(f"{self} is not constant")
        return self.terms.get((0, 0), self.ctx.zero())

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self.terms)

    def substitute(self, var: str, value) -> Poly:
        """Replace var by a Poly or Scalar."""
        value = self._lift(value)
        i = VARS.index(var)
        out = Poly(self.ctx)
        powers = [Poly.const(self.ctx, 1)]
        for m, v in self.terms.items():
            while len(powers) <= m[i]:
                powers.append(powers[-1] * value)
            rest = (0, m[1]) if i == 0 else (m[0], 0)
            out = out + Poly(self.ctx, {rest: v}) * powers[m[i]]
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), v in sorted(self.terms.items()):
            mono = "".join(n + (f"^{e}" if e > 1 else "") for n, e in zip(VARS, (i, j)) if e)
            parts.append(f"{v}{'*' + mono if mono else ''}")
        return " + ".join(parts)
