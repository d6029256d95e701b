from __future__ import annotations

import random

import pytest

from helpers import field, random_msc, random_stabilizer
from msc3 import catalog
from msc3.catalog_odd import BY_INDEX as ODD
from msc3.msc import Msc, StabilizerParams, act, act_stabilizer
from msc3.normalize import TraceDependent, is_normalized, normalize_traces, trace_independent
from msc3.oracle import FieldTooLarge, brute_force_iso, census, classify, stabilizer_candidates


def normalized(ctx, rng):
    while True:
        try:
            return normalize_traces(random_msc(ctx, rng)).msc
        except TraceDependent:
            pass


def test_stabilizer_space_size():
    assert len(list(stabilizer_candidates(field("F3")))) == 18
    assert len(list(stabilizer_candidates(field("F5")))) == 100


def test_planted_witness():
    f3 = field("F3")
    A = normalized(f3, random.Random(1))
    p = StabilizerParams(f3.scalar(1), f3.scalar(1), f3.scalar(2))
    B = act_stabilizer(p, A)
    w = brute_force_iso(A, B)
    assert w is not None and w.search_space == "stabilizer" and act(w.g, A) == B


def test_a32_instances_not_isomorphic():
    f3 = field("F3")
    fam = ODD[32]
    A = catalog.canonical_msc(fam, {n: 0 for n in fam.free}, f3)
    B = catalog.canonical_msc(fam, {n: 0 for n in fam.free} | {"alpha1": 1}, f3)
    assert brute_force_iso(A, B) is None
    assert brute_force_iso(A, B, "full") is None
    assert not classify(A).same_class(classify(B))


def test_full_search_finds_gl_witness():
    f3 = field("F3")
    rng = random.Random(4)
    A = random_msc(f3, rng)
    g = [[f3.scalar(x) for x in r] for r in ((0, 1, 0), (1, 1, 0), (2, 0, 1))]
    B = act(g, A)
    w = brute_force_iso(A, B, "full")
    assert w is not None and w.search_space == "full_gl3" and act(w.g, A) == B


def test_size_limits():
    with pytest.raises(FieldTooLarge):
        brute_force_iso(normalized(field("F17"), random.Random(0)),
                        normalized(field("F17"), random.Random(1)))
    with pytest.raises(FieldTooLarge):
        brute_force_iso(random_msc(field("F11"), random.Random(0)),
                        random_msc(field("F11"), random.Random(1)), "full")
    with pytest.raises(FieldTooLarge):
        brute_force_iso(normalized(field("Q"), random.Random(0)),
                        normalized(field("Q"), random.Random(1)))
    f9 = field("F9")
    A = normalized(f9, random.Random(0)).replace(alpha1=f9.gen(1))
    with pytest.raises(FieldTooLarge):
        brute_force_iso(A, A)


def test_stabilizer_mode_needs_normalized_input():
    f3 = field("F3")
    A = Msc.from_values(f3, [[1, 2, 0, 1, 2, 0, 1, 2, 0], [0] * 9, [0] * 9])
    assert trace_independent(A) and not is_normalized(A)
    with pytest.raises(ValueError):
        brute_force_iso(A, A)


def test_oracle_agrees_with_canonical_forms():
    f3 = field("F3")
    rng = random.Random(12)
    for i in range(80):
        A = normalized(f3, rng)
        B = act_stabilizer(random_stabilizer(f3, rng), A) if i % 2 else normalized(f3, rng)
        found = brute_force_iso(A, B) is not None
        assert found == classify(A).same_class(classify(B))


def test_census_basics():
    assert census(3, 0, 1).accepted == 0 and census(3, 0, 1).rejected == 0
    c = census(3, 300, 7)
    assert c.accepted + c.rejected == 300
    assert census(3, 300, 7).counts == c.counts
    assert census(0, 20, 1).accepted > 0
