from __future__ import annotations

import random

import pytest

from helpers import field, random_gl, random_msc, random_stabilizer
from msc3 import catalog
from msc3.catalog_odd import BY_INDEX as ODD
from msc3.field import FieldCtx
from msc3.msc import (Msc, SingularMatrix, StabilizerParams, ZeroC, act, act_stabilizer,
                      identity, inv3, kron, kron_vec, matmul, multiply, traces)
from msc3.normalize import TraceDependent, normalize_traces


def ints(ctx, m):
    return [[ctx.scalar(x) for x in r] for r in m]


def e(ctx, i):
    return [ctx.one() if j == i else ctx.zero() for j in range(3)]


def test_kron_identity():
    q = FieldCtx.rationals()
    i2 = ints(q, [[1, 0], [0, 1]])
    assert kron(i2, i2) == ints(q, [[1 if i == j else 0 for j in range(4)] for i in range(4)])


def test_kron_blocks():
    q = FieldCtx.rationals()
    got = kron(ints(q, [[1, 2], [3, 4]]), ints(q, [[0, 1], [1, 0]]))
    assert got == ints(q, [[0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]])


def test_kron_vec_selects_column():
    q = FieldCtx.rationals()
    w = kron_vec(e(q, 0), e(q, 1))
    assert [x.encode() for x in w] == ["0", "1", "0", "0", "0", "0", "0", "0", "0"]


def test_multiply_examples():
    q = FieldCtx.rationals()
    assert multiply(Msc.zero(q), e(q, 0), e(q, 1)) == [q.zero()] * 3
    A = Msc.from_names(q, {"alpha6": 1})  # e2 . e3 = e1
    assert multiply(A, e(q, 1), e(q, 2)) == e(q, 0)
    A32 = catalog.canonical_msc(ODD[32], {n: 0 for n in ODD[32].free}, q)
    assert multiply(A32, e(q, 2), e(q, 1)) == [q.zero()] * 3


def test_act_identity():
    ctx = field("F7")
    A = random_msc(ctx, random.Random(0))
    assert act(identity(ctx), A) == A


def test_act_flip_on_a1():
    q = FieldCtx.rationals()
    rng = random.Random(3)
    fam = ODD[1]
    params = {n: q.random(rng) for n in fam.free}
    A = catalog.canonical_msc(fam, params, q)
    B = act(ints(q, [[1, 0, 0], [0, 1, 0], [0, 0, -1]]), A)
    assert B == catalog.canonical_msc(fam, catalog.flip(fam, params), q)


def test_act_relabels_single_entry():
    q = FieldCtx.rationals()
    A = Msc.from_names(q, {"alpha6": 1})
    swap = ints(q, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert act(swap, A) == Msc.from_names(q, {"beta3": 1})


def test_act_singular():
    q = FieldCtx.rationals()
    with pytest.raises(SingularMatrix):
        act(ints(q, [[1, 0, 0], [1, 0, 0], [0, 0, 1]]), Msc.zero(q))


@pytest.mark.parametrize("name", ["F3", "F2", "F9", "Q"])
def test_action_law_and_covariance(name):
    ctx = field(name)
    rng = random.Random(11)
    for _ in range(40):
        A = random_msc(ctx, rng)
        g, h = random_gl(ctx, rng), random_gl(ctx, rng)
        assert act(matmul(g, h), A) == act(g, act(h, A))
        t, u = traces(A), traces(act(g, A))
        gi = inv3(g)
        for a, b in ((t.tr1, u.tr1), (t.tr2, u.tr2)):
            assert list(b) == matmul([list(a)], gi)[0]
        x = [ctx.random(rng) for _ in range(3)]
        y = [ctx.random(rng) for _ in range(3)]
        gx = [r[0] for r in matmul(g, [[v] for v in x])]
        gy = [r[0] for r in matmul(g, [[v] for v in y])]
        lhs = multiply(act(g, A), gx, gy)
        rhs = [r[0] for r in matmul(g, [[v] for v in multiply(A, x, y)])]
        assert lhs == rhs


@pytest.mark.parametrize("name", ["F3", "F2", "F16", "Q2"])
def test_act_stabilizer_matches_act(name):
    ctx = field(name)
    rng = random.Random(5)
    for _ in range(60):
        N = normalize_traces_or_none(random_msc(ctx, rng))
        if N is None:
            continue
        p = random_stabilizer(ctx, rng)
        B = act_stabilizer(p, N)
        assert B == act(p.matrix(), N)
        t = traces(B)
        assert t.tr1 == (ctx.one(), ctx.zero(), ctx.zero())
        assert t.tr2 == (ctx.zero(), ctx.one(), ctx.zero())


def normalize_traces_or_none(A):
    try:
        return normalize_traces(A).msc
    except TraceDependent:
        return None


def test_act_stabilizer_trivial_and_column():
    ctx = field("F7")
    rng = random.Random(2)
    A = normalize_traces(random_msc(ctx, rng)).msc
    one, zero = ctx.one(), ctx.zero()
    assert act_stabilizer(StabilizerParams(zero, zero, one), A) == A
    a, b, c = ctx.scalar(2), ctx.scalar(5), ctx.scalar(3)
    B = act_stabilizer(StabilizerParams(a, b, c), A)
    assert B["alpha9"] == c * c * A["alpha9"]
    assert B["beta9"] == c * c * A["beta9"]
    assert B["gamma9"] == c * (-a * A["alpha9"] - b * A["beta9"] - A["alpha7"] - A["beta8"])


def test_act_stabilizer_needs_unit():
    ctx = field("F3")
    with pytest.raises(ZeroC):
        act_stabilizer(StabilizerParams(ctx.one(), ctx.one(), ctx.zero()), Msc.zero(ctx))


def test_traces_examples():
    q = FieldCtx.rationals()
    z = (q.zero(),) * 3
    assert traces(Msc.zero(q)).tr1 == z and traces(Msc.zero(q)).tr2 == z
    A = Msc.from_values(q, [list(range(1, 10)), [0] * 9, [0] * 9])
    t = traces(A)
    assert [x.encode() for x in t.tr1] == ["1", "2", "3"]
    assert [x.encode() for x in t.tr2] == ["1", "4", "7"]


def test_block_accessors():
    q = FieldCtx.rationals()
    A = Msc.from_values(q, [list(range(9)), list(range(9, 18)), list(range(18, 27))])
    assert A.block(1) == [list(r[3:6]) for r in A.rows]
    assert A["beta5"] == q.scalar(13) and A[2, 8] == q.scalar(26)
