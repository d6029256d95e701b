"""Families for characteristic not 2.

Indices 1..47 follow the printed numbering where the corresponding branch
exists; 48..56 are branches that the printed list lacks.  See ``note`` on
each family for deviations from the printed display.
"""
from __future__ import annotations

from .catalog import Family, FamilyId
from .rank import CHAIN


def _fixed(text: str) -> tuple:
    out = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        name, expr = part.split("=", 1)
        out.append((name.strip(), expr.strip()))
    return tuple(out)


def F(index, fixed="", guards=(), **kw) -> Family:
    return Family(FamilyId("odd", index), _fixed(fixed), tuple(guards), **kw)


C3 = "alpha9=0; beta9=0; alpha6=1; alpha4=0; "
C3_7A = C3 + "alpha8=-1; alpha7=0; alpha3=0; beta8=0; beta7=0; "
C3_7B = C3 + "alpha8=-1; alpha7=-alpha3; beta8=alpha3; beta7=alpha3**2; beta3=-alpha3**2; "
# the b-coefficients of γ1, γ2, γ4, γ5 on the 7b stratum
K1 = "alpha3 - 3*alpha1*alpha3 - alpha3*beta2 - alpha3*beta4 - beta1"
K2 = "-alpha1 - 2*alpha2*alpha3 - alpha3*beta5 - 2*beta2"
K4 = "1 + alpha3 - alpha1 - alpha3*beta5 - 2*beta4"
K5 = "1 - alpha2 - alpha3*alpha5 - 3*beta5"
B1 = "beta1=alpha3*(1 - 3*alpha1 - beta2 - beta4); "
B2 = "beta2=-(alpha1 + 2*alpha2*alpha3 + alpha3*beta5)/2; "
B4 = "beta4=(1 + alpha3 - alpha1 - alpha3*beta5)/2; "
C4 = "alpha9=0; beta9=0; alpha6=0; alpha7=1 + alpha3 - beta8; beta4=0; "
C5 = "alpha9=0; beta9=0; alpha6=0; alpha3=1; beta8=1 - alpha7; beta2=-alpha1; "
C6 = "alpha9=0; beta9=0; alpha6=0; alpha3=0; beta3=1; beta8=-alpha7; beta2=-alpha1; "
C6R = C6 + "alpha8=0; alpha7=0; beta7=-1; "
C7 = "alpha9=0; beta9=0; alpha6=0; alpha3=0; beta3=0; "
C89 = C7 + "alpha7=0; alpha8=0; beta7=0; beta8=0; "

_GAMMA_PATTERNS = {
    # zero set -> gamma entries fixed by the normal form
    (0, 1, 2, 3): "gamma1=0; gamma2=0; gamma4=0; gamma5=0",
    (1, 2, 3): "gamma1=1; gamma2=0; gamma4=0; gamma5=0",
    (0, 2, 3): "gamma1=0; gamma2=1; gamma4=0; gamma5=0",
    (0, 1, 3): "gamma1=0; gamma2=0; gamma4=1; gamma5=0",
    (0, 1, 2): "gamma1=0; gamma2=0; gamma4=0; gamma5=1",
    (2, 3): "gamma1=1; gamma4=0; gamma5=0",
    (1, 3): "gamma1=1; gamma2=0; gamma5=0",
    (0, 3): "gamma1=0; gamma2=1; gamma5=0",
    (1, 2): "gamma1=1; gamma2=0; gamma4=0",
    (0, 2): "gamma1=0; gamma2=1; gamma4=0",
    (0, 1): "gamma1=0; gamma2=0; gamma4=1",
    (0,): "gamma1=0; gamma2=1",
    (1,): "gamma1=1; gamma2=0",
    (2,): "gamma1=1; gamma4=0",
    (3,): "gamma1=1; gamma5=0",
    (): "gamma1=1",
}

# rows of M that must vanish for a late zero set to be first (odd char)
_FORCED_ODD = {
    (1,): "beta1=0; beta4=1 - 3*alpha1 - beta2; ",
    (2,): "beta1=0; beta2=-alpha1/2; beta4=1 - 5*alpha1/2; beta5=-2*alpha2; ",
    (3,): ("alpha1=1/4; beta1=0; beta2=-1/8; beta4=3/8; beta5=-2*alpha2; "
           "alpha4=(1 + 2*alpha2)/2; "),
    (): ("alpha1=1/4; alpha2=-1/8; alpha4=3/8; alpha5=0; beta1=0; beta2=-1/8; "
         "beta4=3/8; beta5=1/4; "),
}


def _rank_families(first_index: int, forced: dict, base: str) -> list[Family]:
    out = []
    for i, S in enumerate(CHAIN):
        out.append(F(first_index + i, base + forced.get(S, "") + _GAMMA_PATTERNS[S],
                     zero_set=S, note=f"zero set {S}"))
    return out


FLIP_1 = ("alpha3", "alpha6", "beta3", "beta7", "beta8", "gamma1", "gamma2", "gamma4", "gamma5")
FLIP_2 = ("alpha3", "alpha6", "alpha7", "alpha8", "beta3", "gamma1", "gamma2", "gamma4", "gamma5")

FAMILIES = [
    F(1, "alpha7=0; alpha8=0; alpha9=1", flips=FLIP_1),
    F(2, "alpha9=0; beta7=0; beta8=0; beta9=1", flips=FLIP_2),
    F(3, C3 + "alpha5=0", ["alpha8 + 1"]),
    F(4, C3 + "alpha8=-1; beta5=0", ["alpha7 + 2*beta8 - alpha3"]),
    F(5, C3 + "alpha8=-1; alpha7=alpha3 - 2*beta8; beta4=0",
      ["beta7 + (alpha3 - 2*beta8)*beta8"]),
    F(6, C3 + "alpha8=-1; alpha7=alpha3 - 2*beta8; beta7=-(alpha3 - 2*beta8)*beta8; alpha1=0",
      ["(alpha3 - 2*beta8)*(alpha3 - beta8)"]),
    F(7, C3 + "alpha8=-1; alpha7=-alpha3; beta8=alpha3; beta7=alpha3**2; beta1=0",
      ["alpha3*(beta3 + alpha3**2)"]),
    F(8, C3 + "alpha8=-1; alpha7=0; alpha3=2*beta8; beta7=0; alpha2=0", ["beta8"],
      note="corrected: the alpha2 step applies exactly when alpha7 = 0 and alpha3 = 2 beta8 != 0"),
    F(9, C3_7A + "beta2=-alpha1", ["beta3"]),
    F(10, C3_7A + "beta3=0; gamma2=0", ["alpha1 + 2*beta2"],
      note="corrected guard: the gamma2 coefficient is alpha1 + 2 beta2"),
    F(11, C3_7A + "beta3=0; alpha1=-2*beta2; gamma1=0", ["beta1"]),
    F(12, empty=True,
      note="the gamma8 step needs beta8 != 0, impossible once alpha7 = alpha3 = 0 forces beta8 = 0"),
    F(13, C3_7A + "beta3=0; alpha1=-2*beta2; beta1=0; gamma5=0", ["1 - alpha2 - 3*beta5"]),
    F(14, C3_7A + "beta3=0; alpha1=-2*beta2; beta1=0; alpha2=1 - 3*beta5; gamma4=0",
      ["1 - alpha1 - 2*beta4"]),
    F(15, C3_7A + "beta3=0; beta1=0; alpha2=1 - 3*beta5; alpha1=1 - 2*beta4; beta2=beta4 - 1/2",
      note="corrected: beta2 = -alpha1/2 rather than 0"),
    F(16, C3_7B + "alpha2=1 - alpha3*alpha5 - 3*beta5; " + B4 + B2 + B1.rstrip("; "), ["alpha3"],
      note="alpha3 stays a free nonzero modulus; all four b-coefficients vanish"),
    F(17, C4 + "beta5=0", ["beta8 + 1"]),
    F(18, C4 + "beta8=-1; alpha5=0", ["alpha8"]),
    F(19, C4 + "beta8=-1; alpha8=0; alpha4=0", ["alpha3 + 2"]),
    F(20, C4 + "beta8=-1; alpha8=0; alpha3=-2; beta2=0", ["beta3 + beta7"],
      note="corrected guard: the beta2 coefficient is beta3 + beta7"),
    F(21, C4 + "beta8=-1; alpha8=0; alpha3=-2; beta3=-beta7; alpha2=0",
      note="the alpha2 coefficient is the constant -2, so this step always applies"),
    F(22, empty=True, note="unreachable: the alpha2 step of the previous family always applies"),
    F(23, C5 + "alpha5=0", ["alpha8"]),
    F(24, C5 + "alpha8=0; alpha4=0", ["alpha7"]),
    F(25, C5 + "alpha8=0; alpha7=0; beta5=0"),
    F(26, C6 + "alpha2=0", ["alpha8"]),
    F(27, "alpha9=0; beta9=0; alpha6=0; alpha3=0; beta3=1; beta8=-alpha7; "
          "alpha8=0; alpha1=0; beta2=0", ["alpha7"]),
    F(28, C6 + "alpha8=0; alpha7=0; beta1=0", ["beta7 + 1"],
      note="corrected: the free translation moves beta1 (beta2 is fixed by gamma3 = 0)"),
    F(29, C7 + "alpha8=1; beta8=-alpha7; alpha2=0; alpha5=0"),
    F(30, C7 + "alpha8=0; alpha7=1; beta8=-1; alpha1=0; alpha4=0"),
    F(31, C7 + "alpha8=0; alpha7=0; beta8=0; beta7=1; beta1=0; beta4=0"),
]
FAMILIES += _rank_families(32, _FORCED_ODD, C89)
FAMILIES += [
    F(48, C3_7B + "gamma1=0", ["alpha3", K1], new=True),
    F(49, C3_7B + B1 + "gamma2=0", ["alpha3", K2], new=True),
    F(50, C3_7B + B2 + B1 + "gamma4=0", ["alpha3", K4], new=True),
    F(51, C3_7B + B4 + B2 + B1 + "gamma5=0", ["alpha3", K5], new=True),
    F(52, C6R + "gamma1=0", ["1 - 2*alpha1 - beta4"], new=True),
    F(53, C6R + "beta4=1 - 2*alpha1; gamma2=0", ["2*alpha2 + beta5"], new=True),
    F(54, C6R + "beta4=1 - 2*alpha1; beta5=-2*alpha2; gamma4=0",
      ["1 - 2*alpha4 - beta5"], new=True),
    F(55, C6R + "beta4=1 - 2*alpha1; beta5=-2*alpha2; alpha4=(1 + 2*alpha2)/2; gamma5=0",
      ["alpha5"], new=True),
    F(56, C6R + "beta4=1 - 2*alpha1; beta5=-2*alpha2; alpha4=(1 + 2*alpha2)/2; alpha5=0",
      new=True),
]

BY_INDEX = {f.index: f for f in FAMILIES}
