"""Shared fixtures: fields, random matrices and random group elements."""
from __future__ import annotations

import random

from msc3.cli_io import selftest_field
from msc3.field import FieldCtx, sqrt
from msc3.msc import Msc, StabilizerParams, det3


def field(name: str) -> FieldCtx:
    """'F3', 'F7', 'F2', 'Q', 'F9' (F_3 tower), 'F16', 'Q2' (Q(sqrt 2))."""
    if name == "Q":
        return FieldCtx.rationals()
    if name == "Q2":
        return sqrt(FieldCtx.rationals().scalar(2))[1]
    if name == "F9":
        return selftest_field("odd")
    if name == "F16":
        return selftest_field("char2")
    return FieldCtx.prime(int(name[1:]))


def random_msc(ctx: FieldCtx, rng: random.Random) -> Msc:
    return Msc([[ctx.random(rng) for _ in range(9)] for _ in range(3)])


def random_gl(ctx: FieldCtx, rng: random.Random):
    while True:
        g = [[ctx.random(rng) for _ in range(3)] for _ in range(3)]
        if not det3(g).is_zero():
            return g


def random_stabilizer(ctx: FieldCtx, rng: random.Random) -> StabilizerParams:
    c = ctx.random(rng)
    while c.is_zero():
        c = ctx.random(rng)
    return StabilizerParams(ctx.random(rng), ctx.random(rng), c)
