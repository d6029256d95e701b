"""Brute-force isomorphism search over small prime fields, and a sampling census.

The census draws entries with ``random.Random(seed)`` (Mersenne Twister
MT19937) using ``randrange``, so a (char, samples, seed) triple always gives
the same histogram.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field

from .engine import ClassificationResult
from .field import FieldCtx
from .msc import BasisChange, Msc, StabilizerParams, act, act_stabilizer, det3, inv3, traces
from .normalize import TraceDependent, is_normalized, normalize_traces

MAX_STABILIZER_Q = 13
MAX_FULL_Q = 7


class FieldTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class IsoWitness:
    g: BasisChange
    search_space: str  # "stabilizer" or "full_gl3"


def classify(A: Msc) -> ClassificationResult:
    """Normalize and dispatch on the characteristic."""
    from .classify_char2 import classify_char2
    from .classify_odd import classify_odd
    N = normalize_traces(A)
    return classify_char2(N) if N.msc.ctx.char == 2 else classify_odd(N)


def _check_small(A: Msc, B: Msc, limit: int) -> FieldCtx:
    ctx = A.ctx
    if ctx.char == 0 or ctx.char > limit:
        raise FieldTooLarge(f"search needs a prime field with p <= {limit}")
    for x in A.entries() + B.entries():
        if x.level != 0:
            raise FieldTooLarge("search needs entries in the prime field")
    return FieldCtx.prime(ctx.char)


def stabilizer_candidates(ctx: FieldCtx):
    """All (a, b, c) with c != 0, a outermost, in residue order."""
    els = ctx.elements()
    for a in els:
        for b in els:
            for c in els[1:]:
                yield StabilizerParams(a, b, c)


def gl3_inverses(ctx: FieldCtx):
    """All invertible 3x3 matrices in lexicographic residue order."""
    els = ctx.elements()
    for flat in itertools.product(els, repeat=9):
        h = [list(flat[0:3]), list(flat[3:6]), list(flat[6:9])]
        if not det3(h).is_zero():
            yield h


def brute_force_iso(A: Msc, B: Msc, mode: str = "stabilizer") -> IsoWitness | None:
    """Some g with act(g, A) = B, or None; the first one in enumeration order."""
    if mode == "stabilizer":
        ctx = _check_small(A, B, MAX_STABILIZER_Q)
        if not (is_normalized(A) and is_normalized(B)):
            raise ValueError("stabilizer search needs trace-normalized inputs")
        for p in stabilizer_candidates(ctx):
            if act_stabilizer(p, A) == B:
                return IsoWitness(p.basis_change(), "stabilizer")
        return None
    if mode == "full":
        ctx = _check_small(A, B, MAX_FULL_Q)
        ta, tb = traces(A), traces(B)
        for h in gl3_inverses(ctx):
            # Tr_i(gA) = Tr_i(A) h with h = g^-1: a cheap necessary condition
            if any(sum((t[k] * h[k][j] for k in range(3)), ctx.zero()) != u[j]
                   for t, u in ((ta.tr1, tb.tr1), (ta.tr2, tb.tr2)) for j in range(3)):
                continue
            g = inv3(h)
            if act(g, A, g_inv=h) == B:
                return IsoWitness(BasisChange(g), "full_gl3")
        return None
    raise ValueError(f"unknown mode {mode!r}")


@dataclass
class Census:
    char: int
    samples: int
    seed: int
    counts: Counter = field(default_factory=Counter)
    rejected: int = 0

    @property
    def accepted(self) -> int:
        return sum(self.counts.values())

    def fraction(self, index: int) -> float:
        return self.counts[index] / self.accepted if self.accepted else 0.0


def random_msc(ctx: FieldCtx, rng: random.Random, bound: int = 3) -> Msc:
    if ctx.char:
        return Msc([[ctx.scalar(rng.randrange(ctx.char)) for _ in range(9)] for _ in range(3)])
    return Msc([[ctx.scalar(rng.randint(-bound, bound)) for _ in range(9)] for _ in range(3)])


def census(char: int, samples: int, seed: int) -> Census:
    ctx = FieldCtx.prime(char) if char else FieldCtx.rationals()
    rng = random.Random(seed)
    out = Census(char, samples, seed)
    for _ in range(samples):
        A = random_msc(ctx, rng)
        try:
            r = classify(A)
        except TraceDependent:
            out.rejected += 1
            continue
        out.counts[r.family.index] += 1
    return out
