"""Canonical forms in characteristic not 2."""
from __future__ import annotations

from . import catalog, rank
from .catalog_odd import BY_INDEX, FAMILIES
from .engine import (ClassificationResult, InternalContradiction, Run,
                     UnsupportedCharacteristic, chain, finish, pivot, rank_cases, solve_pair)
from .field import FieldCtx, sqrt
from .normalize import NormalizedMsc, normalize_traces


def family(index: int) -> catalog.Family:
    return BY_INDEX[index]


def canonical_msc(index: int, params: dict, ctx: FieldCtx | None = None):
    return catalog.canonical_msc(BY_INDEX[index], params, ctx)


def involution_reduce(index: int, params: dict) -> dict:
    return catalog.involution_reduce(BY_INDEX[index], params)


def rank_dispatch(A) -> str:
    """The zero set the rank chain picks, e.g. "{1,2}"."""
    return rank.label(rank.dispatch(A)[0])


def classify_odd(N: NormalizedMsc) -> ClassificationResult:
    if N.msc.ctx.char == 2:
        raise UnsupportedCharacteristic("use classify_char2 in characteristic 2")
    run = Run(N)
    return finish(run, BY_INDEX[_reduce(run)])


def classify(A) -> ClassificationResult:
    return classify_odd(normalize_traces(A))


def _reduce(run: Run) -> int:
    A = run.A
    if not A["alpha9"].is_zero():
        al9 = A["alpha9"]
        c, _ = sqrt(al9.inv())
        run.apply(-A["alpha7"] / al9, -A["alpha8"] / al9, c)
        return 1
    if not A["beta9"].is_zero():
        be9 = A["beta9"]
        c, _ = sqrt(be9.inv())
        run.apply(-A["beta7"] / be9, -A["beta8"] / be9, c)
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
        (6, lambda T: T["alpha1"]),
        (7, lambda T: T["beta1"]),
        (8, lambda T: T["alpha2"]),
    ], last=False)
    if found is not None:
        return found
    if run["alpha7"].is_zero():
        targets = [(9, lambda T: T["gamma3"]), (10, lambda T: T["gamma2"]),
                   (11, lambda T: T["gamma1"]), (12, lambda T: T["gamma8"]),
                   (13, lambda T: T["gamma5"]), (14, lambda T: T["gamma4"])]
        terminal = 15
    else:
        targets = [(48, lambda T: T["gamma1"]), (49, lambda T: T["gamma2"]),
                   (50, lambda T: T["gamma4"]), (51, lambda T: T["gamma5"])]
        terminal = 16
    found = chain(run, T, var, pinned, targets)
    return terminal if found is None else found


def _case4(run: Run) -> int:
    run.scale(run["beta6"].inv())
    T, var, pinned = pivot(run, "beta4", "a")
    found = chain(run, T, var, pinned, [
        (17, lambda T: T["beta5"]),
        (18, lambda T: T["alpha5"]),
        (19, lambda T: T["alpha4"]),
        (20, lambda T: T["beta2"]),
        (21, lambda T: T["alpha2"]),
        (22, lambda T: T["gamma8"]),
    ])
    if found is None:
        raise InternalContradiction("no move left in the beta6 case")
    return found


def _case5(run: Run) -> int:
    run.scale(run["alpha3"].inv())
    T, var, pinned = pivot(run, "gamma3", "a")
    found = chain(run, T, var, pinned, [
        (23, lambda T: T["alpha5"]),
        (24, lambda T: T["alpha4"]),
        (25, lambda T: T["beta5"]),
    ])
    if found is None:
        raise InternalContradiction("no move left in the alpha3 case")
    return found


def _case6(run: Run) -> int:
    run.scale(run["beta3"].inv())
    T, var, pinned = pivot(run, "gamma3", "b")
    found = chain(run, T, var, pinned, [
        (26, lambda T: T["alpha2"]),
        (27, lambda T: T["alpha1"]),
        (28, lambda T: T["beta1"]),
        (52, lambda T: T["gamma1"]),
        (53, lambda T: T["gamma2"]),
        (54, lambda T: T["gamma4"]),
        (55, lambda T: T["gamma5"]),
    ])
    return 56 if found is None else found


def _case7(run: Run) -> int:
    for lead, pair, index in (("alpha8", ("alpha2", "alpha5"), 29),
                              ("alpha7", ("alpha1", "alpha4"), 30),
                              ("beta7", ("beta1", "beta4"), 31)):
        if not run[lead].is_zero():
            run.scale(run[lead].inv())
            S = run.symbolic()
            a, b = solve_pair(S[pair[0]], S[pair[1]])
            run.apply(a, b, run.ctx.one())
            return index
    return rank_cases(run, 32)
