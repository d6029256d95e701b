"""Canonical families: templates, guards and samplers.

A family is a partial assignment of the 21 entries not fixed by the trace
normalization.  ``fixed`` lists entries given by an expression in the free
ones (evaluated in order, so later expressions may use earlier results);
every other non-trace entry is a free parameter.  The six trace entries
β₆, γ₃, γ₆, γ₇, γ₈, γ₉ are always computed.

``guards`` are expressions that must be nonzero on the instantiated matrix.
Families of the last two cases (``zero_set`` set) instead require the rank
dispatch to pick that zero set.  Families marked ``empty`` are never
produced; their notes say why.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import rank
from .expr import evaluate, names_in
from .field import FieldCtx, Scalar
from .msc import Msc

NON_TRACE = tuple(
    [f"alpha{i}" for i in range(1, 10)]
    + [f"beta{i}" for i in (1, 2, 3, 4, 5, 7, 8, 9)]
    + ["gamma1", "gamma2", "gamma4", "gamma5"]
)

TRACE_ENTRIES = (
    ("beta6", "alpha7 + beta8 - alpha3"),
    ("gamma3", "-alpha1 - beta2"),
    ("gamma6", "1 - alpha4 - beta5"),
    ("gamma7", "1 - alpha1 - beta4"),
    ("gamma8", "-alpha2 - beta5"),
    ("gamma9", "-alpha7 - beta8"),
)


class GuardViolated(ValueError):
    pass


class MissingParam(KeyError):
    pass


class EmptyFamily(ValueError):
    pass


@dataclass(frozen=True)
class FamilyId:
    parity: str  # "odd" or "char2"
    index: int

    @property
    def name(self) -> str:
        return f"A_{self.index}" + (",2" if self.parity == "char2" else "")

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Family:
    id: FamilyId
    fixed: tuple = ()
    guards: tuple = ()
    zero_set: tuple | None = None
    empty: bool = False
    new: bool = False
    flips: tuple = ()
    note: str = ""
    free: tuple = field(init=False)

    def __post_init__(self):
        fixed = {n for n, _ in self.fixed}
        object.__setattr__(self, "free", tuple(n for n in NON_TRACE if n not in fixed))

    @property
    def index(self) -> int:
        return self.id.index

    def guard_texts(self) -> list[str]:
        out = [f"{g} != 0" for g in self.guards]
        if self.zero_set is not None:
            out.append(f"rank dispatch selects zero set {rank.label(self.zero_set)}")
        return out


# -- template construction -----------------------------------------------------

def instantiate(family: Family, params: dict, ctx: FieldCtx) -> tuple[Msc, dict]:
    """The matrix for ``params`` and the full entry environment, without guard checks."""
    if family.empty:
        raise EmptyFamily(f"{family.id.name} has no members")
    env = {}
    for n in family.free:
        if n not in params:
            raise MissingParam(n)
        env[n] = ctx.scalar(params[n])
    pending = list(family.fixed)
    while pending:
        ready = [(n, e) for n, e in pending
                 if all(d in env for d in names_in(e) if d != n)]
        if not ready:
            raise ValueError(f"cyclic template for {family.id.name}")
        for n, e in ready:
            env[n] = evaluate(e, env, ctx)
        pending = [p for p in pending if p not in ready]
    for n, e in TRACE_ENTRIES:
        env[n] = evaluate(e, env, ctx)
    return Msc.from_names(ctx, env), env


def guards_hold(family: Family, A: Msc, env: dict | None = None) -> bool:
    if env is None:
        env = {n: A[n] for n in _ALL_NAMES}
    ctx = A.ctx
    for g in family.guards:
        if evaluate(g, env, ctx).is_zero():
            return False
    if family.zero_set is not None and rank.dispatch(A)[0] != family.zero_set:
        return False
    return True


def canonical_msc(family: Family, params: dict, ctx: FieldCtx | None = None) -> Msc:
    if ctx is None:
        ctx = _params_ctx(params)
    A, env = instantiate(family, params, ctx)
    if not guards_hold(family, A, env):
        raise GuardViolated(f"parameters violate the guards of {family.id.name}")
    return A


def read_params(family: Family, A: Msc) -> dict:
    return {n: A[n] for n in family.free}


def _params_ctx(params: dict) -> FieldCtx:
    ctx = None
    for v in params.values():
        if isinstance(v, Scalar):
            ctx = v.ctx if ctx is None else ctx.join(v.ctx)
    if ctx is None:
        raise ValueError("a field context is needed for plain-number parameters")
    return ctx


_ALL_NAMES = tuple(f"{r}{i}" for r in ("alpha", "beta", "gamma") for i in range(1, 10))


# -- involution on the first two families --------------------------------------

def flip(family: Family, params: dict) -> dict:
    return {n: (-v if n in family.flips else v) for n, v in params.items()}


def involution_reduce(family: Family, params: dict) -> dict:
    """The smaller of params and its image under diag(1,1,-1), compared
    lexicographically in the order of ``family.free``."""
    if not family.flips:
        return params
    other = flip(family, params)
    key = lambda p: [p[n].key() for n in family.free]
    return other if key(other) < key(params) else params


# -- sampling -------------------------------------------------------------------

def _random_scalar(ctx: FieldCtx, rng: random.Random, max_level: int | None = None) -> Scalar:
    top = ctx.depth if max_level is None else min(max_level, ctx.depth)
    return ctx.random(rng, rng.randint(0, top))


def sample_params(family: Family, ctx: FieldCtx, rng: random.Random,
                  max_tries: int = 20000) -> dict:
    """Random admissible parameters (already involution-reduced)."""
    if family.empty:
        raise EmptyFamily(f"{family.id.name} has no members")
    for _ in range(max_tries):
        if family.zero_set is not None:
            params = _sample_rank_free(family, ctx, rng)
        else:
            params = {n: _random_scalar(ctx, rng) for n in family.free}
        try:
            A, env = instantiate(family, params, ctx)
        except ZeroDivisionError:
            continue
        if guards_hold(family, A, env):
            return involution_reduce(family, params)
    raise RuntimeError(f"no admissible draw for {family.id.name} in {max_tries} tries")


def _sample_rank_free(family: Family, ctx: FieldCtx, rng: random.Random) -> dict:
    """Draws biased towards the degenerate rank patterns the chain separates:
    rows of M forced to vanish or to be parallel, sparse entries, sparse γ."""
    for _ in range(50):
        draw = {n: _random_scalar(ctx, rng) for n in rank.ROW_ENTRIES}
        if rng.random() < 0.3:
            for n in rank.ROW_ENTRIES:
                if rng.random() < 0.5:
                    draw[n] = ctx.zero()
        direction = (_random_scalar(ctx, rng), _random_scalar(ctx, rng))
        if ctx.char == 2 and rng.random() < 0.5:
            # rows 2 and 3 of M sum to (1, 1)
            direction = (ctx.one(), ctx.one())
        # sometimes M of rank at most 1: every row zero or along direction
        rank_one = rng.random() < 0.3
        constraints = []
        for i in range(4):
            u = rng.random() * (0.4 if rank_one else 1)
            if u < 0.2:
                constraints.append((i, None))
            elif u < 0.4:
                constraints.append((i, direction))
        vals = _force_rows(draw, constraints, ctx, rng)
        if vals is not None:
            break
    else:
        vals = draw
    params = {n: _random_scalar(ctx, rng) for n in family.free}
    for n in rank.ROW_ENTRIES:
        if n in params:
            params[n] = vals[n]
    for n in rank.GAMMAS:
        if n in params:
            params[n] = ctx.zero() if rng.random() < 0.3 else _nonzero_scalar(ctx, rng)
    return params


def _nonzero_scalar(ctx: FieldCtx, rng: random.Random) -> Scalar:
    while True:
        x = _random_scalar(ctx, rng)
        if not x.is_zero():
            return x


def _force_rows(vals, constraints, ctx, rng):
    """Move the values so that each constrained row of M vanishes (direction
    None) or is parallel to the given direction; None if impossible."""
    if not constraints:
        return vals
    unknowns = list(rank.ROW_ENTRIES)
    rng.shuffle(unknowns)
    forms = []  # (coefficients, constant) pairs, each to be made 0
    for i, d in constraints:
        (ca, ka), (cb, kb) = rank.ROW_FORMS[i]
        if d is None:
            forms += [({n: ctx.scalar(k) for n, k in ca.items()}, ctx.scalar(ka)),
                      ({n: ctx.scalar(k) for n, k in cb.items()}, ctx.scalar(kb))]
        else:
            # d1 * (second component) - d2 * (first component) = 0
            co = {}
            for n, k in cb.items():
                co[n] = co.get(n, ctx.zero()) + d[0] * k
            for n, k in ca.items():
                co[n] = co.get(n, ctx.zero()) - d[1] * k
            forms.append((co, d[0] * kb - d[1] * ka))
    # sum k_n (v_n + x_n) + const = 0, solved for the shifts x
    eqs = []
    for co, const in forms:
        value = const
        for n, k in co.items():
            value = value + vals[n] * k
        eqs.append([co.get(u, ctx.zero()) for u in unknowns] + [-value])
    piv = []
    r = 0
    for c in range(len(unknowns)):
        p = next((i for i in range(r, len(eqs)) if not eqs[i][c].is_zero()), None)
        if p is None:
            continue
        eqs[r], eqs[p] = eqs[p], eqs[r]
        inv = eqs[r][c].inv()
        eqs[r] = [x * inv for x in eqs[r]]
        for i in range(len(eqs)):
            if i != r and not eqs[i][c].is_zero():
                f = eqs[i][c]
                eqs[i] = [x - f * y for x, y in zip(eqs[i], eqs[r])]
        piv.append(c)
        r += 1
    if any(not eqs[i][-1].is_zero() for i in range(r, len(eqs))):
        return None
    out = dict(vals)
    for i, c in enumerate(piv):
        out[unknowns[c]] = vals[unknowns[c]] + eqs[i][-1]
    return out
