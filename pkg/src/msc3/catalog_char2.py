"""Families for characteristic 2.

Indices 1..62 follow the printed numbering where the corresponding branch
exists; 63..67 are branches that the printed list lacks.  Minus signs are
immaterial here, so templates are written with plus signs.
"""
from __future__ import annotations

from .catalog import Family, FamilyId
from .catalog_odd import _GAMMA_PATTERNS, _fixed
from .rank import CHAIN


def F(index, fixed="", guards=(), **kw) -> Family:
    return Family(FamilyId("char2", index), _fixed(fixed), tuple(guards), **kw)


C3 = "alpha9=0; beta9=0; alpha6=1; alpha4=0; "
C31 = C3 + "alpha8=1; alpha7=0; alpha3=0; beta7=0; "
C32 = C3 + "alpha8=1; alpha7=alpha3; beta7=alpha3*beta8; beta3=alpha3*beta8; "
C32L = C32 + "beta8=alpha3; "
# linear b-coefficient of gamma1 on the 3-2 stratum, and the combinations
# gamma1 + alpha3 gamma2, gamma1 + alpha3 gamma4, gamma1 + alpha3^2 gamma5
L1 = "alpha3*(alpha1 + beta2 + beta4 + 1) + beta1"
D1 = "alpha3*(beta2 + beta4 + 1) + beta1 + alpha3**2*beta5"
D3 = L1 + " + alpha3**2*(alpha2 + alpha3*alpha5 + beta5 + 1)"
C4 = "alpha9=0; beta9=0; alpha6=0; alpha7=1 + alpha3 + beta8; beta4=0; "
C4R = C4 + "beta8=1; alpha8=0; alpha3=0; beta3=beta7; "
C5 = "alpha9=0; beta9=0; alpha6=0; alpha3=1; beta8=alpha7 + 1; beta5=alpha4 + 1; "
C5R = C5 + "alpha7=1; beta7=beta3; alpha8=0; "
C6 = "alpha9=0; beta9=0; alpha6=0; alpha3=0; beta3=1; beta8=alpha7; beta2=alpha1; "
C6R = C6 + "alpha8=0; alpha7=0; beta7=1; "
C7 = "alpha9=0; beta9=0; alpha6=0; alpha3=0; beta3=0; "
C89 = C7 + "alpha7=0; alpha8=0; beta7=0; beta8=0; "

# rows 2 and 3 of M sum to (1, 1) in characteristic 2, so at most one of
# them vanishes; the zero sets needing both are empty.  Zero sets {1} and
# {2} alone force every row of M to be parallel to that sum (1, 1).
_FORCED = {
    (0,): "beta1=alpha1 + beta2 + beta4 + 1; beta5=alpha1; alpha5=alpha1 + alpha2 + alpha4 + 1; ",
    (1,): "beta1=0; beta4=alpha1 + beta2 + 1; beta5=alpha1; alpha5=alpha1 + alpha2 + alpha4 + 1; ",
    (2,): "beta1=0; beta5=0; alpha1=0; beta4=beta2 + 1; ",
}
_EMPTY_RANK = {(3,), ()}

_RANK = []
for _i, _S in enumerate(CHAIN):
    if _S in _EMPTY_RANK:
        _RANK.append(F(47 + _i, empty=True,
                       note="needs rows 2 and 3 of M to vanish together, impossible in "
                            "characteristic 2"))
    else:
        _RANK.append(F(47 + _i, C89 + _FORCED.get(_S, "") + _GAMMA_PATTERNS[_S],
                       zero_set=_S, note=f"zero set {_S}"))

FAMILIES = [
    F(1, "alpha7=0; alpha8=0; alpha9=1"),
    F(2, "alpha9=0; beta7=0; beta8=0; beta9=1"),
    F(3, C3 + "alpha5=0", ["alpha8 + 1"]),
    F(4, C3 + "alpha8=1; beta5=0", ["alpha3 + alpha7"]),
    F(5, C3 + "alpha8=1; alpha7=alpha3; beta4=0", ["beta7 + alpha3*beta8"]),
    F(6, C3 + "alpha8=1; alpha7=alpha3; beta7=alpha3*beta8; beta1=0",
      ["alpha3*(beta3 + alpha3*beta8)"]),
    F(7, empty=True, note="the alpha2 coefficient vanishes identically in characteristic 2"),
    F(8, C31 + "beta2=alpha1", ["beta3"]),
    F(9, C31 + "beta3=0; gamma2=0", ["alpha1"], note="corrected guard: alpha1 != 0"),
    F(10, C31 + "beta3=0; alpha1=0; gamma1=0", ["beta1"]),
    F(11, C31 + "beta3=0; alpha1=0; beta1=0; gamma4=0",
      note="the gamma4 coefficient is alpha1 + 1 = 1, so this step always applies"),
    F(12, empty=True, note="unreachable: the gamma4 step always applies"),
    F(13, empty=True, note="unreachable: the gamma4 step always applies"),
    F(14, C32L + "gamma1=0", ["alpha3", L1]),
    F(15, C32L + "beta1=alpha3*(alpha1 + beta2 + beta4 + 1); gamma2=0",
      ["alpha3", "alpha1 + alpha3*beta5"]),
    F(16, C32L + "beta1=alpha3*(alpha1 + beta2 + beta4 + 1); alpha1=alpha3*beta5; gamma4=0",
      ["alpha3", "alpha3 + 1"]),
    F(17, C32L + "alpha3=1; alpha1=beta5; beta1=alpha1 + beta2 + beta4 + 1; gamma5=0",
      ["alpha2 + alpha5 + beta5 + 1"]),
    F(18, C32L + "alpha3=1; alpha1=beta5; beta1=alpha1 + beta2 + beta4 + 1; "
                 "alpha2=alpha5 + beta5 + 1"),
    F(19, C32 + "gamma1=alpha3*gamma2", ["alpha3", "alpha3 + beta8", D1],
      note="gauge gamma1 = alpha3 gamma2"),
    F(20, C32 + "beta1=alpha3*(beta2 + beta4 + 1) + alpha3**2*beta5; gamma1=alpha3*gamma4",
      ["alpha3", "alpha3 + beta8", "alpha3 + 1"], note="gauge gamma1 = alpha3 gamma4"),
    F(21, C32 + "alpha3=1; beta1=beta2 + beta4 + 1 + beta5; gamma1=gamma5",
      ["beta8 + 1", D3], note="gauge gamma1 = gamma5"),
    F(22, C32 + "alpha3=1; beta1=beta2 + beta4 + 1 + beta5; "
                "alpha2=alpha1 + beta2 + beta4 + 1 + beta1 + alpha5 + beta5 + 1; gamma1=0",
      ["beta8 + 1"], note="gamma1 = 0 through a quadratic in b; both roots give this matrix"),
    F(23, C4 + "beta5=0", ["beta8 + 1"]),
    F(24, C4 + "beta8=1; alpha5=0", ["alpha8"]),
    F(25, C4 + "beta8=1; alpha8=0; alpha4=0", ["alpha3"]),
    F(26, C4 + "beta8=1; alpha8=0; alpha3=0; beta2=0", ["beta3 + beta7"],
      note="corrected guard: the beta2 coefficient is beta3 + beta7"),
    F(27, C4R + "beta7=0; gamma1=0", ["beta1"]),
    F(28, C4R + "beta7=0; beta1=0; gamma2=0", ["alpha1"]),
    F(29, C4R + "beta7=0; beta1=0; alpha1=0; gamma4=0",
      note="the gamma4 coefficient is 1 at this point"),
    F(30, empty=True, note="unreachable: the gamma4 step always applies"),
    F(31, empty=True, note="beta1 does not depend on b on this stratum"),
    F(32, C4R + "gamma1=beta7*gamma2",
      ["beta7", "beta1 + beta2*beta7 + beta7 + beta7**2*beta5"],
      note="gauge gamma1 = beta7 gamma2"),
    F(33, C4R + "beta1=beta2*beta7 + beta7 + beta7**2*beta5; gamma1=beta7*gamma4",
      ["beta7", "beta7 + 1"], note="gauge gamma1 = beta7 gamma4"),
    F(34, C4R + "beta7=1; beta1=beta2 + 1 + beta5; gamma1=gamma5",
      ["alpha1 + beta1 + beta2 + 1 + alpha2 + alpha4 + alpha5 + beta5 + 1"],
      note="gauge gamma1 = gamma5"),
    F(35, C4R + "beta7=1; beta1=beta2 + 1 + beta5; "
                "alpha2=alpha1 + beta1 + beta2 + alpha4 + alpha5 + beta5; gamma1=0",
      note="gamma1 = 0 through a quadratic in b; both roots give this matrix"),
    F(36, C5 + "alpha1=0", ["alpha7 + 1"]),
    F(37, empty=True, note="beta2 does not depend on a once b is fixed by gamma6 = 0"),
    F(38, C5 + "alpha7=1; beta1=0", ["beta3 + beta7"],
      note="corrected guard: the beta1 coefficient is beta3 + beta7"),
    F(39, C5 + "alpha7=1; beta7=beta3; alpha2=0", ["alpha8"]),
    F(40, empty=True, note="the gamma8 coefficient vanishes identically here"),
    F(41, C6 + "alpha2=0", ["alpha8"]),
    F(42, C6 + "alpha8=0; alpha1=0", ["alpha7"]),
    F(43, C6 + "alpha8=0; alpha7=0; beta1=0", ["beta7 + 1"],
      note="corrected: the translation moves beta1; beta2 is fixed by gamma3 = 0"),
    F(44, C7 + "alpha8=1; beta8=alpha7; alpha2=0; alpha5=0"),
    F(45, C7 + "alpha8=0; alpha7=1; beta8=1; alpha1=0; alpha4=0"),
    F(46, C7 + "alpha8=0; alpha7=0; beta8=0; beta7=1; beta1=0; beta4=0"),
]
FAMILIES += _RANK
FAMILIES += [
    F(63, C5R + "gamma2=0", ["alpha4 + 1"], new=True),
    F(64, C5R + "alpha4=1; gamma4=0", new=True),
    F(65, C6R + "gamma1=0", ["beta4 + 1"], new=True),
    F(66, C6R + "beta4=1; gamma2=0", ["beta5"], new=True),
    F(67, C6R + "beta4=1; beta5=0; gamma4=0", new=True),
]

BY_INDEX = {f.index: f for f in FAMILIES}
