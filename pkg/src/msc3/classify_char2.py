"""Canonical forms in characteristic 2."""
from __future__ import annotations

from . import catalog, rank
from .catalog_char2 import BY_INDEX
from .engine import (ClassificationResult, InternalContradiction, Run,
                     UnsupportedCharacteristic, chain, finish, pivot, rank_cases, solve_pair)
from .field import FieldCtx, sqrt
from .normalize import NormalizedMsc, normalize_traces


def family(index: int) -> catalog.Family:
    return BY_INDEX[index]


def canonical_msc_char2(index: int, params: dict, ctx: FieldCtx | None = None):
    return catalog.canonical_msc(BY_INDEX[index], params, ctx)


def involution_reduce(index: int, params: dict) -> dict:
    return catalog.involution_reduce(BY_INDEX[index], params)


def rank_dispatch(A) -> str:
    """The zero set the rank chain picks, e.g. "{1,2}"."""
    return rank.label(rank.dispatch(A)[0])


def classify_char2(N: NormalizedMsc) -> ClassificationResult:
    if N.msc.ctx.char != 2:
        raise UnsupportedCharacteristic("classify_char2 needs characteristic 2")
    run = Run(N)
    return finish(run, BY_INDEX[_reduce(run)])


def classify(A) -> ClassificationResult:
    return classify_char2(normalize_traces(A))


def _reduce(run: Run) -> int:
    A = run.A
    if not A["alpha9"].is_zero():
        al9 = A["alpha9"]
        c, _ = sqrt(al9.inv())
        run.apply(A["alpha7"] / al9, A["alpha8"] / al9, c)
        return 1
    if not A["beta9"].is_zero():
        be9 = A["beta9"]
        c, _ = sqrt(be9.inv())
        run.apply(A["beta7"] / be9, A["beta8"] / be9, c)
        return 2
    if not A["alpha6"].is_zero():
        return _case3(run)
    if not A["beta6"].is_zero():
        return _case4(run)
    if not A["alpha3"].is_zero():
        return _case5(run)
    if not A["beta3"].is_zero():
        return _case6(run)
    return _case7(run)


def _case3(run: Run) -> int:
    run.scale(run["alpha6"].inv())
    T, var, pinned = pivot(run, "alpha4", "a")
    found = chain(run, T, var, pinned, [
        (3, lambda T: T["alpha5"]),
        (4, lambda T: T["beta5"]),
        (5, lambda T: T["beta4"]),
        (6, lambda T: T["beta1"]),
        (7, lambda T: T["alpha2"]),
    ], last=False)
    if found is not None:
        return found
    al3 = run["alpha3"]
    if al3.is_zero():
        targets = [(8, lambda T: T["gamma3"]), (9, lambda T: T["gamma2"]),
                   (10, lambda T: T["gamma1"]), (11, lambda T: T["gamma4"]),
                   (12, lambda T: T["gamma5"])]
        terminal = 13
    elif run["beta8"] == al3:
        targets = [(14, lambda T: T["gamma1"]), (15, lambda T: T["gamma2"]),
                   (16, lambda T: T["gamma4"]), (17, lambda T: T["gamma5"])]
        terminal = 18
    else:
        targets = [(19, lambda T: T["gamma1"] + al3 * T["gamma2"]),
                   (20, lambda T: T["gamma1"] + al3 * T["gamma4"]),
                   (21, lambda T: T["gamma1"] + al3 * al3 * T["gamma5"]),
                   (22, lambda T: T["gamma1"])]
        terminal = None
    found = chain(run, T, var, pinned, targets)
    if found is None and terminal is None:
        raise InternalContradiction("no move left in subcase 3-2")
    return terminal if found is None else found


def _case4(run: Run) -> int:
    run.scale(run["beta6"].inv())
    T, var, pinned = pivot(run, "beta4", "a")
    found = chain(run, T, var, pinned, [
        (23, lambda T: T["beta5"]),
        (24, lambda T: T["alpha5"]),
        (25, lambda T: T["alpha4"]),
        (26, lambda T: T["beta2"]),
    ], last=False)
    if found is not None:
        return found
    be7 = run["beta7"]
    if be7.is_zero():
        targets = [(27, lambda T: T["gamma1"]), (28, lambda T: T["gamma2"]),
                   (29, lambda T: T["gamma4"]), (30, lambda T: T["gamma5"])]
    else:
        targets = [(32, lambda T: T["gamma1"] + be7 * T["gamma2"]),
                   (33, lambda T: T["gamma1"] + be7 * T["gamma4"]),
                   (34, lambda T: T["gamma1"] + be7 * be7 * T["gamma5"]),
                   (35, lambda T: T["gamma1"])]
    found = chain(run, T, var, pinned, targets)
    if found is None:
        raise InternalContradiction("no move left in the beta6 case")
    return found


def _case5(run: Run) -> int:
    run.scale(run["alpha3"].inv())
    T, var, pinned = pivot(run, "gamma6", "b")
    found = chain(run, T, var, pinned, [
        (36, lambda T: T["alpha1"]),
        (37, lambda T: T["beta2"]),
        (38, lambda T: T["beta1"]),
        (39, lambda T: T["alpha2"]),
        (40, lambda T: T["gamma8"]),
        (63, lambda T: T["gamma2"]),
        (64, lambda T: T["gamma4"]),
    ])
    if found is None:
        raise InternalContradiction("no move left in the alpha3 case")
    return found


def _case6(run: Run) -> int:
    run.scale(run["beta3"].inv())
    T, var, pinned = pivot(run, "gamma3", "b")
    found = chain(run, T, var, pinned, [
        (41, lambda T: T["alpha2"]),
        (42, lambda T: T["alpha1"]),
        (43, lambda T: T["beta1"]),
        (65, lambda T: T["gamma1"]),
        (66, lambda T: T["gamma2"]),
        (67, lambda T: T["gamma4"]),
    ])
    if found is None:
        raise InternalContradiction("no move left in the beta3 case")
    return found


def _case7(run: Run) -> int:
    for lead, pair, index in (("alpha8", ("alpha2", "alpha5"), 44),
                              ("alpha7", ("alpha1", "alpha4"), 45),
                              ("beta7", ("beta1", "beta4"), 46)):
        if not run[lead].is_zero():
            run.scale(run[lead].inv())
            S = run.symbolic()
            a, b = solve_pair(S[pair[0]], S[pair[1]])
            run.apply(a, b, run.ctx.one())
            return index
    return rank_cases(run, 47)
