"""Move an algebra onto the slice Tr1 = (1,0,0), Tr2 = (0,1,0)."""
from __future__ import annotations

from dataclasses import dataclass

from .msc import BasisChange, Msc, act, det3, traces


class TraceDependent(ValueError):
    """The trace vectors are linearly dependent; such algebras are not classified."""


@dataclass(frozen=True)
class NormalizedMsc:
    msc: Msc
    g0: BasisChange


def trace_independent(A: Msc) -> bool:
    t = traces(A)
    u, v = t.tr1, t.tr2
    return any(not (u[i] * v[j] - u[j] * v[i]).is_zero() for i, j in ((0, 1), (0, 2), (1, 2)))


def is_normalized(A: Msc) -> bool:
    t = traces(A)
    return (t.tr1[0].is_one() and t.tr1[1].is_zero() and t.tr1[2].is_zero()
            and t.tr2[0].is_zero() and t.tr2[1].is_one() and t.tr2[2].is_zero())


def normalize_traces(A: Msc) -> NormalizedMsc:
    t = traces(A)
    ctx = A.ctx
    # e_3 first, so that normalized input gets g = I
    for j in (2, 1, 0):
        e = [ctx.one() if i == j else ctx.zero() for i in range(3)]
        g = [list(t.tr1), list(t.tr2), e]
        if not det3(g).is_zero():
            # Tr_i(gA) = Tr_i(A) g^-1 = e_i because Tr_i is row i of g
            return NormalizedMsc(act(g, A), BasisChange(g))
    raise TraceDependent("trace vectors are linearly dependent")
