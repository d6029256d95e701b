"""The rank system of the last two cases.

Once the upper part of the third block and the entries α₃, β₃, α₆, β₆ vanish,
a stabilizer element (a, b, c) only moves γ₁, γ₂, γ₄, γ₅:

    (γ₁', γ₂', γ₄', γ₅') = c⁻¹ ((γ₁, γ₂, γ₄, γ₅) − M (a, b)ᵀ)

with the rows of M listed in ``rows``.  Zeroing a set S of these entries is
possible exactly when rk M_S = rk M'_S, M' being M with the γ column appended.
"""
from __future__ import annotations

from .msc import Msc

GAMMAS = ("gamma1", "gamma2", "gamma4", "gamma5")

# Zero sets in the order they are tried: larger sets first, and within one
# size the order used by the classification.
CHAIN = (
    (0, 1, 2, 3),
    (1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2),
    (2, 3), (1, 3), (0, 3), (1, 2), (0, 2), (0, 1),
    (0,), (1,), (2,), (3,),
    (),
)


# each component of a row is an affine form: ({entry: coefficient}, constant)
ROW_FORMS = (
    (({"alpha1": 3, "beta2": 1, "beta4": 1}, -1), ({"beta1": 1}, 0)),
    (({"alpha2": 2, "beta5": 1}, 0), ({"alpha1": 1, "beta2": 2}, 0)),
    (({"alpha4": 2, "beta5": 1}, -1), ({"alpha1": 1, "beta4": 2}, -1)),
    (({"alpha5": 1}, 0), ({"alpha2": 1, "alpha4": 1, "beta5": 3}, -1)),
)
ROW_ENTRIES = ("alpha1", "alpha2", "alpha4", "alpha5", "beta1", "beta2", "beta4", "beta5")


def _form(form, get):
    coeffs, const = form
    acc = None
    for n, k in coeffs.items():
        t = get(n) * k
        acc = t if acc is None else acc + t
    return acc + const


def rows(A: Msc):
    """The four rows of M, each as (coefficient of a, coefficient of b)."""
    return rows_from(A.__getitem__)


def rows_from(get):
    return tuple((_form(f, get), _form(g, get)) for f, g in ROW_FORMS)


def solve(M, rhs):
    """Some (a, b) with M (a, b)ᵀ = rhs, or None.  Free unknowns are set to 0."""
    zero = rhs[0] * 0 if rhs else None
    aug = [list(r) + [v] for r, v in zip(M, rhs)]
    pivots = []
    r = 0
    for col in range(2):
        p = next((i for i in range(r, len(aug)) if not aug[i][col].is_zero()), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        inv = aug[r][col].inv()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and not aug[i][col].is_zero():
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if any(not aug[i][2].is_zero() for i in range(r, len(aug))):
        return None
    out = [zero, zero]
    for i, col in enumerate(pivots):
        out[col] = aug[i][2]
    return tuple(out)


def dispatch(A: Msc):
    """The first zero set of ``CHAIN`` that can be reached, with a solving (a, b)."""
    M = rows(A)
    gam = [A[n] for n in GAMMAS]
    zero = gam[0] * 0
    for S in CHAIN:
        if not S:
            return S, (zero, zero)
        x = solve([M[i] for i in S], [gam[i] for i in S])
        if x is not None:
            return S, x
    raise AssertionError("unreachable")


def label(S) -> str:
    return "{" + ",".join(str(i + 1) for i in S) + "}" if S else "{}"

