"""Machinery shared by the two classifiers.

A ``Run`` holds the current matrix and the accumulated witness.  A reduction
step pushes a symbolic stabilizer element (a, b, 1) through the action, solves
one entry for one unknown, and then walks a list of target entries in the
remaining unknown: the first target that actually depends on it is set to 0
and the family is decided.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import rank
from .catalog import Family, FamilyId, guards_hold, instantiate, involution_reduce, read_params
from .field import FieldCtx, Scalar, solve_quadratic
from .msc import BasisChange, Msc, StabilizerParams, act_stabilizer, matmul
from .normalize import NormalizedMsc
from .poly import Poly


class InternalContradiction(AssertionError):
    """A reduction step failed in a way the case analysis rules out."""


class UnsupportedCharacteristic(ValueError):
    pass


@dataclass
class ClassificationResult:
    family: FamilyId
    params: dict
    witness: BasisChange
    guards: list = field(default_factory=list)
    msc: Msc | None = None

    def key(self):
        return (self.family.parity, self.family.index,
                tuple((n, self.params[n].key()) for n in sorted(self.params)))

    def same_class(self, other: ClassificationResult) -> bool:
        return self.family == other.family and self.params == other.params


class Run:
    def __init__(self, nm: NormalizedMsc):
        self.A = nm.msc
        self.W = nm.g0.matrix()
        self.start = nm

    @property
    def ctx(self) -> FieldCtx:
        return self.A.ctx

    def __getitem__(self, name):
        return self.A[name]

    def apply(self, a, b, c):
        p = StabilizerParams(a, b, c)
        self.A = act_stabilizer(p, self.A)
        self.W = matmul(p.matrix(), self.W)

    def scale(self, c):
        zero = c * 0
        self.apply(zero, zero, c)

    def copy(self) -> Run:
        other = Run.__new__(Run)
        other.A, other.W, other.start = self.A, self.W, self.start
        return other

    def symbolic(self) -> dict:
        """Every entry after (a, b, 1), as polynomials in a and b."""
        ctx = self.ctx
        one = Poly.const(ctx, 1)
        S = act_stabilizer(StabilizerParams(Poly.var(ctx, "a"), Poly.var(ctx, "b"), one),
                           self.A, c_inv=one)
        names = [f"{r}{i}" for r in ("alpha", "beta", "gamma") for i in range(1, 10)]
        return {n: S[n] for n in names}


def solve_for(p: Poly, var: str) -> Poly:
    """The value of var making the (var-linear) polynomial p vanish."""
    cs = p.coefficients(var)
    if len(cs) != 2 or not cs[1].is_constant() or cs[1].is_zero():
        raise InternalContradiction(f"cannot solve {p} for {var}")
    return -cs[0] * cs[1].constant().inv()


def substitute(T: dict, var: str, value: Poly) -> dict:
    return {n: p.substitute(var, value) for n, p in T.items()}


def other_var(var: str) -> str:
    return "b" if var == "a" else "a"


def roots(p: Poly, var: str) -> list[Scalar]:
    """Roots of a univariate polynomial of degree 1 or 2 (both roots if 2)."""
    cs = [c.constant() for c in p.coefficients(var)]
    if len(cs) == 2:
        return [-cs[0] / cs[1]]
    if len(cs) == 3:
        lead = cs[2].inv()
        b, c = cs[1] * lead, cs[0] * lead
        r, _ = solve_quadratic(b, c)
        return [r, -b - r] if (-b - r) != r else [r]
    raise InternalContradiction(f"unexpected degree in {p}")


def chain(run: Run, T: dict, var: str, pinned: Poly | None, targets,
          last: bool = True) -> int | None:
    """Walk ``targets`` ((family index, target function) pairs); T holds the
    entries as polynomials in ``var`` alone, the other unknown being
    ``pinned`` (a polynomial in var) or 0.

    Returns the index of the first target depending on var after applying
    the corresponding move, or None when no target moves.  With ``last`` the
    unknown must then leave every entry unchanged.
    """
    for index, target in targets:
        p = target(T)
        if p.degree(var) < 1:
            continue
        best = None
        for r in roots(p, var):
            o = pinned.substitute(var, r).constant() if pinned is not None else r * 0
            a, b = (r, o) if var == "a" else (o, r)
            trial = run.copy()
            trial.apply(a, b, r * 0 + 1)
            key = [x.key() for x in trial.A.entries()]
            if best is None or key < best[0]:
                best = (key, trial)
        run.A, run.W = best[1].A, best[1].W
        return index
    if not last:
        return None
    for n, p in T.items():
        if p.degree(var) > 0:
            raise InternalContradiction(f"{n} still depends on {var}")
    if pinned is not None:
        # the free unknown is inert: take it 0 and still make the pivot move
        zero = run.ctx.zero()
        o = pinned.substitute(var, zero).constant()
        run.apply(*((zero, o) if var == "a" else (o, zero)), run.ctx.one())
    return None


def pivot(run: Run, entry: str, var: str) -> tuple[dict, str, Poly]:
    """Solve ``entry`` = 0 for ``var``; returns the entries as polynomials in
    the other unknown, that unknown, and the solved value of ``var``."""
    S = run.symbolic()
    value = solve_for(S[entry], var)
    return substitute(S, var, value), other_var(var), value


def solve_pair(p: Poly, q: Poly) -> tuple[Scalar, Scalar]:
    """(a, b) with p = q = 0 for two polynomials of total degree 1."""
    def lin(x):
        a = x.coefficients("a")
        ca = a[1].constant() if len(a) > 1 else x.ctx.zero()
        b = a[0].coefficients("b")
        cb = b[1].constant() if len(b) > 1 else x.ctx.zero()
        c0 = b[0].constant() if b else x.ctx.zero()
        if x.degree("a") > 1 or x.degree("b") > 1 or any(m[0] and m[1] for m in x.terms):
            raise InternalContradiction(f"{x} is not linear")
        return ca, cb, c0
    a1, b1, c1 = lin(p)
    a2, b2, c2 = lin(q)
    det = a1 * b2 - a2 * b1
    if det.is_zero():
        raise InternalContradiction("singular linear system")
    return (-c1 * b2 + c2 * b1) / det, (-a1 * c2 + a2 * c1) / det


def rank_cases(run: Run, first_index: int) -> int:
    S, (a, b) = rank.dispatch(run.A)
    one = run.ctx.one()
    run.apply(a, b, one)
    for i, g in enumerate(rank.GAMMAS):
        if i not in S:
            v = run[g]
            if v.is_zero():
                raise InternalContradiction(f"{g} vanished after zero set {S}")
            run.scale(v)
            break
    return first_index + rank.CHAIN.index(S)


def finish(run: Run, family: Family) -> ClassificationResult:
    """Read parameters, reduce by the involution and check the template."""
    params = read_params(family, run.A)
    reduced = involution_reduce(family, params)
    if reduced is not params:
        # diag(1, 1, -1) is the stabilizer element c = -1 and flips the parameters
        run.scale(-run.ctx.one())
        params = reduced
    expected, env = instantiate(family, params, run.ctx)
    if expected != run.A:
        raise InternalContradiction(f"result does not match the template of {family.id.name}")
    if not guards_hold(family, run.A, env):
        raise InternalContradiction(f"guards of {family.id.name} fail on the result")
    return ClassificationResult(family.id, params, BasisChange(run.W), family.guard_texts(), run.A)
