"""Structure-constant matrices of 3-dimensional algebras and the
basis-change action on them.

An ``Msc`` is the 3x9 matrix A with ``u.v = A (u (x) v)``.  Column ``3(i-1)+(j-1)``
holds the coordinates of ``e_i . e_j``; row 0/1/2 are the alpha/beta/gamma rows.
Entries only need ``+ - *`` so the same code runs on polynomial entries.
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import FieldCtx, Scalar

ROW_NAMES = ("alpha", "beta", "gamma")


class SingularMatrix(ArithmeticError):
    pass


class ZeroC(ArithmeticError):
    pass


def entry_name(row: int, col: int) -> str:
    return f"{ROW_NAMES[row]}{col + 1}"


def parse_entry_name(name: str) -> tuple[int, int]:
    hit = _ENTRY_INDEX.get(name)
    if hit is not None:
        return hit
    for r, prefix in enumerate(ROW_NAMES):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            col = int(name[len(prefix):]) - 1
            if 0 <= col < 9:
                return r, col
    raise KeyError(name)


_ENTRY_INDEX = {entry_name(r, c): (r, c) for r in range(3) for c in range(9)}


# -- small dense matrices (lists of rows) ------------------------------------

def matmul(x, y):
    inner = len(y)
    return [[_dot([row[k] for k in range(inner)], [y[k][j] for k in range(inner)])
             for j in range(len(y[0]))] for row in x]


def _dot(u, v):
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def kron(m, n):
    return [[m[i][j] * n[k][l] for j in range(len(m[0])) for l in range(len(n[0]))]
            for i in range(len(m)) for k in range(len(n))]


def kron_vec(u, v):
    """u (x) v as a length-9 list, in the column order of an Msc."""
    return [a * b for a in u for b in v]


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def adj3(m):
    def cof(i, j):
        r = [x for x in range(3) if x != i]
        c = [x for x in range(3) if x != j]
        v = m[r[0]][c[0]] * m[r[1]][c[1]] - m[r[0]][c[1]] * m[r[1]][c[0]]
        return v if (i + j) % 2 == 0 else -v
    return [[cof(j, i) for j in range(3)] for i in range(3)]


def inv3(m):
    d = det3(m)
    if d.is_zero():
        raise SingularMatrix("basis change is not invertible")
    di = d.inv()
    return [[x * di for x in row] for row in adj3(m)]


def identity(ctx: FieldCtx, n: int = 3):
    return [[ctx.one() if i == j else ctx.zero() for j in range(n)] for i in range(n)]


# -- the structure-constant matrix --------------------------------------------

class Msc:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != 3 or any(len(r) != 9 for r in rows):
            raise ValueError("an Msc is 3x9")
        self.rows = rows

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Msc:
        return cls([[ctx.zero()] * 9 for _ in range(3)])

    @classmethod
    def from_values(cls, ctx: FieldCtx, rows) -> Msc:
        return cls([[ctx.scalar(v) for v in r] for r in rows])

    @classmethod
    def from_names(cls, ctx: FieldCtx, values: dict) -> Msc:
        rows = [[ctx.zero()] * 9 for _ in range(3)]
        for name, v in values.items():
            r, c = parse_entry_name(name)
            rows[r][c] = ctx.scalar(v)
        return cls(rows)

    def __getitem__(self, key):
        if isinstance(key, str):
            r, c = parse_entry_name(key)
            return self.rows[r][c]
        r, c = key
        return self.rows[r][c]

    def replace(self, **values) -> Msc:
        rows = [list(r) for r in self.rows]
        for name, v in values.items():
            r, c = parse_entry_name(name)
            rows[r][c] = v
        return Msc(rows)

    def block(self, k: int):
        """The 3x3 block of columns 3k..3k+2 (k = 0, 1, 2)."""
        return [list(r[3 * k:3 * k + 3]) for r in self.rows]

    @property
    def ctx(self) -> FieldCtx:
        ctx = self.rows[0][0].ctx
        for r in self.rows:
            for x in r:
                if x.ctx is not ctx:
                    ctx = ctx.join(x.ctx)
        return ctx

    def entries(self):
        return [x for r in self.rows for x in r]

    def __eq__(self, other):
        return isinstance(other, Msc) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Msc[{body}]"


@dataclass(frozen=True)
class BasisChange:
    g: tuple

    def __init__(self, g):
        object.__setattr__(self, "g", tuple(tuple(r) for r in g))

    @classmethod
    def identity(cls, ctx: FieldCtx) -> BasisChange:
        return cls(identity(ctx))

    def matrix(self):
        return [list(r) for r in self.g]

    def inverse(self) -> BasisChange:
        return BasisChange(inv3(self.matrix()))

    def __matmul__(self, other: BasisChange) -> BasisChange:
        return BasisChange(matmul(self.matrix(), other.matrix()))


@dataclass(frozen=True)
class StabilizerParams:
    """g^-1 = [[1,0,0],[0,1,0],[a,b,c]]."""
    a: object
    b: object
    c: object

    def inverse_matrix(self):
        one, zero = self.c * 0 + 1, self.c * 0
        return [[one, zero, zero], [zero, one, zero], [self.a, self.b, self.c]]

    def matrix(self):
        if not self.c:
            raise ZeroC("stabilizer needs c != 0")
        ci = 1 / self.c
        one, zero = self.c * 0 + 1, self.c * 0
        return [[one, zero, zero], [zero, one, zero], [-self.a * ci, -self.b * ci, ci]]

    def basis_change(self) -> BasisChange:
        return BasisChange(self.matrix())


@dataclass(frozen=True)
class TraceVectors:
    tr1: tuple
    tr2: tuple


def multiply(A: Msc, u, v):
    w = kron_vec(u, v)
    return [_dot(list(row), w) for row in A.rows]


def act(g, A: Msc, g_inv=None) -> Msc:
    """g A (g^-1 (x) g^-1).  ``g_inv`` may be supplied to skip the inversion."""
    if isinstance(g, BasisChange):
        g = g.matrix()
    h = inv3(g) if g_inv is None else g_inv
    ht = [list(col) for col in zip(*h)]
    # a row of A times h (x) h is h^T X h, X being the row read as a 3x3 matrix
    out = []
    for row in matmul(g, [list(r) for r in A.rows]):
        X = [row[0:3], row[3:6], row[6:9]]
        Y = matmul(ht, matmul(X, h))
        out.append(Y[0] + Y[1] + Y[2])
    return Msc(out)


def act_stabilizer(p: StabilizerParams, A: Msc, c_inv=None) -> Msc:
    """The action of the stabilizer element p, written out column by column.

    With g^-1 = [[1,0,0],[0,1,0],[a,b,c]] the new blocks are
    g(A1 + a A3)g^-1, g(A2 + b A3)g^-1 and c g A3 g^-1, and for a block X
    with rows x, y, z the columns of g X g^-1 are
      (x1 + a x3, y1 + a y3, (z1 + a z3 - a(x1 + a x3) - b(y1 + a y3)) / c)
      (x2 + b x3, y2 + b y3, (z2 + b z3 - a(x2 + b x3) - b(y2 + b y3)) / c)
      (c x3,      c y3,      z3 - a x3 - b y3).
    ``c_inv`` lets polynomial callers pass 1/c when c is a unit they can't invert.
    """
    a, b, c = p.a, p.b, p.c
    if c_inv is None:
        if not c:
            raise ZeroC("stabilizer needs c != 0")
        c_inv = 1 / c
    al, be, ga = A.rows
    blocks = []
    for k, s in ((0, a), (1, b), (2, None)):
        lo = 3 * k
        if s is None:
            x = al[lo:lo + 3]
            y = be[lo:lo + 3]
            z = ga[lo:lo + 3]
        else:
            x = [al[lo + j] + s * al[6 + j] for j in range(3)]
            y = [be[lo + j] + s * be[6 + j] for j in range(3)]
            z = [ga[lo + j] + s * ga[6 + j] for j in range(3)]
        n1x, n1y = x[0] + a * x[2], y[0] + a * y[2]
        n2x, n2y = x[1] + b * x[2], y[1] + b * y[2]
        col1 = (n1x, n1y, (z[0] + a * z[2] - a * n1x - b * n1y) * c_inv)
        col2 = (n2x, n2y, (z[1] + b * z[2] - a * n2x - b * n2y) * c_inv)
        col3 = (c * x[2], c * y[2], z[2] - a * x[2] - b * y[2])
        if s is None:
            col1 = tuple(v * c for v in col1)
            col2 = tuple(v * c for v in col2)
            col3 = tuple(v * c for v in col3)
        blocks.append((col1, col2, col3))
    rows = [[blocks[k][j][r] for k in range(3) for j in range(3)] for r in range(3)]
    return Msc(rows)


def traces(A: Msc) -> TraceVectors:
    al, be, ga = A.rows
    tr1 = (al[0] + be[3] + ga[6], al[1] + be[4] + ga[7], al[2] + be[5] + ga[8])
    tr2 = (al[0] + be[1] + ga[2], al[3] + be[4] + ga[5], al[6] + be[7] + ga[8])
    return TraceVectors(tr1, tr2)
