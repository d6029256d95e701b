"""Exact scalars: the rationals, prime fields, and lazily built towers of
quadratic extensions over either.

A tower element at level k is stored as a nested pair ``(lo, hi)`` meaning
``lo + hi*t_k`` with ``t_k**2 + b_k*t_k + c_k = 0``; level 0 is a rational
(characteristic 0; ``gmpy2.mpq`` when installed, else ``Fraction``) or an
``int`` residue (characteristic p).  Scalars always
sit at the smallest level that holds them.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction

try:
    from gmpy2 import mpq as rational
except ImportError:
    rational = Fraction

# values accepted wherever a base-field constant is expected
NUMBER_TYPES = (int, Fraction) if rational is Fraction else (int, Fraction, rational)


class FieldError(ArithmeticError):
    pass


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class IncompatibleTowers(FieldError):
    pass


class UnsupportedField(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, math.isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


_TOWERS: dict = {}


_PRODUCT_CACHE = 1 << 18


class FieldCtx:
    """Characteristic plus an append-only list of defining quadratics.

    ``levels[i]`` is the pair ``(b, c)`` (raw values at level ``i``) defining
    level ``i + 1``.  Contexts are immutable; extending returns a new one that
    shares the old levels as a prefix.
    """

    __slots__ = ("char", "levels", "_zeros", "_ones", "_sqrt_table", "_as_cache", "_special", "_products", "_consts")

    def __init__(self, char: int = 0, levels=()):
        if char != 0 and not _is_prime(char):
            raise UnsupportedField(f"characteristic {char} is not 0 or a prime")
        self.char = char
        self.levels = tuple(levels)
        self._zeros = [rational(0) if char == 0 else 0]
        self._ones = [rational(1) if char == 0 else 1]
        for _ in self.levels:
            self._zeros.append((self._zeros[-1], self._zeros[-1]))
            self._ones.append((self._ones[-1], self._zeros[-2]))
        # the defining coefficients at their minimal levels, for cheap scaling
        self._consts = []
        for j, (b, c) in enumerate(self.levels):
            b_low = None if b == self._zeros[j] else self.demote(b, j)
            self._consts.append((b_low, self.demote(c, j)))
        self._sqrt_table = None
        self._as_cache = {}
        self._special = {}
        # finite towers have few elements, so products are memoized
        self._products = {} if char else None

    @classmethod
    def rationals(cls) -> FieldCtx:
        return cls(0)

    @classmethod
    def prime(cls, p: int) -> FieldCtx:
        return cls(p)

    @property
    def depth(self) -> int:
        return len(self.levels)

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.char == other.char
                and self.levels == other.levels)

    def __hash__(self):
        return hash((self.char, self.levels))

    def __repr__(self):
        return f"FieldCtx(char={self.char}, depth={self.depth})"

    def extends(self, other: FieldCtx) -> bool:
        """True when ``other`` is a prefix of this tower."""
        return (self.char == other.char and len(other.levels) <= len(self.levels)
                and self.levels[:len(other.levels)] == other.levels)

    def join(self, other: FieldCtx) -> FieldCtx:
        if self is other:
            return self
        if self.extends(other):
            return self
        if other.extends(self):
            return other
        raise IncompatibleTowers("scalars come from diverging towers")

    def extend(self, b, c) -> FieldCtx:
        """Append the level defined by x^2 + b x + c (raw values at the top level).

        Equal requests return the same context object, so independent
        computations that need the same root share one tower.
        """
        levels = self.levels + ((b, c),)
        key = (self.char, levels)
        ctx = _TOWERS.get(key)
        if ctx is None:
            ctx = _TOWERS[key] = FieldCtx(self.char, levels)
        return ctx

    def _top_candidates(self):
        """Nonzero top-level raws in a fixed order."""
        k = self.depth
        if k == 0:
            yield from range(1, self.char)
            return
        below = FieldCtx(self.char, self.levels[:-1])
        lows = [self.zero_raw(k - 1)] + list(below._top_candidates())
        for hi in lows[1:]:
            for lo in lows:
                yield (lo, hi)

    def irreducible_raw(self, b, c) -> bool:
        """Whether x^2 + b x + c has no root at the top level."""
        k = self.depth
        if self.char == 2:
            if self.is_zero_raw(b, k):
                return False  # Frobenius is onto in a finite field
            t = self.mul(c, self.inv(self.mul(b, b, k), k), k)
            return self.artin_schreier_raw(t, k) is None
        four = self.lift(rational(4) if self.char == 0 else 4 % self.char, 0, k)
        disc = self.sub(self.mul(b, b, k), self.mul(four, c, k), k)
        return self.sqrt_raw(disc, k) is None

    def nonsquare_raw(self):
        """The first non-square at the top level of a finite odd tower."""
        if "ns" not in self._special:
            k = self.depth
            self._special["ns"] = next(x for x in self._top_candidates()
                                       if self.sqrt_raw(x, k) is None)
        return self._special["ns"]

    def as_obstruction_raw(self):
        """The first a at the top level of a char-2 tower with y^2 + y = a unsolvable."""
        if "as" not in self._special:
            k = self.depth
            self._special["as"] = next(x for x in self._top_candidates()
                                       if self.artin_schreier_raw(x, k) is None)
        return self._special["as"]

    # -- raw arithmetic ----------------------------------------------------

    def zero_raw(self, k):
        return self._zeros[k]

    def one_raw(self, k):
        return self._ones[k]

    def is_zero_raw(self, x, k) -> bool:
        return x == self._zeros[k]

    def add(self, x, y, k):
        if k == 0:
            return (x + y) % self.char if self.char else x + y
        if k == 1:
            p = self.char
            if p:
                return ((x[0] + y[0]) % p, (x[1] + y[1]) % p)
            return (x[0] + y[0], x[1] + y[1])
        return (self.add(x[0], y[0], k - 1), self.add(x[1], y[1], k - 1))

    def sub(self, x, y, k):
        if k == 0:
            return (x - y) % self.char if self.char else x - y
        if k == 1:
            p = self.char
            if p:
                return ((x[0] - y[0]) % p, (x[1] - y[1]) % p)
            return (x[0] - y[0], x[1] - y[1])
        return (self.sub(x[0], y[0], k - 1), self.sub(x[1], y[1], k - 1))

    def neg(self, x, k):
        if k == 0:
            return (-x) % self.char if self.char else -x
        return (self.neg(x[0], k - 1), self.neg(x[1], k - 1))

    def mul(self, x, y, k):
        if k == 0:
            return (x * y) % self.char if self.char else x * y
        if self._products is not None:
            r = self._products.get((x, y))
            if r is None:
                r = self._mul_tower(x, y, k)
                if len(self._products) < _PRODUCT_CACHE:
                    self._products[(x, y)] = r
            return r
        return self._mul_tower(x, y, k)

    def _mul_tower(self, x, y, k):
        # Karatsuba: three products one level down, then reduce t^2 = -b t - c
        j = k - 1
        x0, x1 = x
        y0, y1 = y
        b_low, (c_raw, c_lvl) = self._consts[j]
        if j == 0:
            ll, hh = x0 * y0, x1 * y1
            hi = x0 * y1 + x1 * y0
            if b_low is not None:
                hi -= hh * b_low[0]
            p = self.char
            if p:
                return ((ll - hh * c_raw) % p, hi % p)
            return (ll - hh * c_raw, hi)
        ll = self.mul(x0, y0, j)
        hh = self.mul(x1, y1, j)
        mid = self.mul(self.add(x0, x1, j), self.add(y0, y1, j), j)
        lo = self.sub(ll, self.scale(hh, c_raw, j, c_lvl), j)
        hi = self.sub(self.sub(mid, ll, j), hh, j)
        if b_low is not None:
            hi = self.sub(hi, self.scale(hh, b_low[0], j, b_low[1]), j)
        return (lo, hi)

    def scale(self, x, s, k, j):
        """Multiply raw ``x`` at level k by raw ``s`` at lower level j."""
        if k == j:
            return self.mul(x, s, k)
        return (self.scale(x[0], s, k - 1, j), self.scale(x[1], s, k - 1, j))

    def inv(self, x, k):
        if k == 0:
            if x == 0:
                raise DivisionByZero("inverse of zero")
            return pow(x, -1, self.char) if self.char else 1 / x
        j = k - 1
        x0, x1 = x
        b_low, (c_raw, c_lvl) = self._consts[j]
        # x * conj(x) = x0^2 - b x0 x1 + c x1^2 lies one level down
        n = self.add(self.mul(x0, x0, j), self.scale(self.mul(x1, x1, j), c_raw, j, c_lvl), j)
        lo = x0
        if b_low is not None:
            n = self.sub(n, self.scale(self.mul(x0, x1, j), b_low[0], j, b_low[1]), j)
            lo = self.sub(x0, self.scale(x1, b_low[0], j, b_low[1]), j)
        ni = self.inv(n, j)
        return (self.mul(lo, ni, j), self.neg(self.mul(x1, ni, j), j))

    def lift(self, x, k, to):
        while k < to:
            x = (x, self._zeros[k])
            k += 1
        return x

    def demote(self, x, k):
        while k > 0 and x[1] == self._zeros[k - 1]:
            x = x[0]
            k -= 1
        return x, k

    def key_raw(self, x, k):
        if k == 0:
            if self.char:
                return x
            sign = 0 if x == 0 else (1 if x > 0 else 2)
            return (sign, abs(x.numerator), x.denominator)
        return (self.key_raw(x[0], k - 1), self.key_raw(x[1], k - 1))

    def power_raw(self, x, e, k):
        r = self._ones[k]
        while e:
            if e & 1:
                r = self.mul(r, x, k)
            x = self.mul(x, x, k)
            e >>= 1
        return r

    # -- square roots, char != 2 -------------------------------------------

    def _base_sqrt(self, x):
        if self.char == 0:
            if x < 0:
                return None
            n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
            if n * n == x.numerator and d * d == x.denominator:
                return rational(n, d)
            return None
        if self._sqrt_table is None:
            table = {}
            for r in range(self.char - 1, -1, -1):
                table[r * r % self.char] = r
            self._sqrt_table = table
        return self._sqrt_table.get(x)

    def sqrt_raw(self, x, k):
        """Some square root of raw ``x`` at level k, or None."""
        if k == 0:
            return self._base_sqrt(x)
        j = k - 1
        b, c = self.levels[j]
        d = self.neg(c, j)  # odd characteristic levels are all t^2 = d
        x0, x1 = x
        zero = self._zeros[j]
        if x1 == zero:
            r = self.sqrt_raw(x0, j)
            if r is not None:
                return (r, zero)
            r = self.sqrt_raw(self.mul(x0, self.inv(d, j), j), j)
            return None if r is None else (zero, r)
        n = self.sqrt_raw(self.sub(self.mul(x0, x0, j), self.mul(d, self.mul(x1, x1, j), j), j), j)
        if n is None:
            return None
        half = self.inv(self.add(self._ones[j], self._ones[j], j), j)
        for s in (n, self.neg(n, j)):
            u = self.sqrt_raw(self.mul(self.add(x0, s, j), half, j), j)
            if u is not None and u != zero:
                v = self.mul(x1, self.inv(self.add(u, u, j), j), j)
                return (u, v)
        return None

    # -- characteristic 2 helpers ------------------------------------------

    def _bits(self, x, k):
        if k == 0:
            return [x]
        return self._bits(x[0], k - 1) + self._bits(x[1], k - 1)

    def _from_bits(self, bits, k):
        if k == 0:
            return bits[0]
        h = len(bits) // 2
        return (self._from_bits(bits[:h], k - 1), self._from_bits(bits[h:], k - 1))

    def frobenius_inverse_raw(self, x, k):
        m = 1 << k  # level k is GF(2^m)
        for _ in range(m - 1):
            x = self.mul(x, x, k)
        return x

    def artin_schreier_raw(self, a, k):
        """A root y of y^2 + y = a at level k, or None.  Solved as an
        GF(2)-linear system in the coordinates of y."""
        m = 1 << k
        if k not in self._as_cache:
            rows = []
            for i in range(m):
                e = [0] * m
                e[i] = 1
                y = self._from_bits(e, k)
                img = self.add(self.mul(y, y, k), y, k)
                bits = self._bits(img, k)
                rows.append(sum(bit << r for r, bit in enumerate(bits)))
            self._as_cache[k] = rows
        cols = self._as_cache[k]
        target = sum(bit << r for r, bit in enumerate(self._bits(a, k)))
        # eliminate: basis of column images with combination masks
        basis = {}  # pivot bit -> (vector, combination mask)
        for i, v in enumerate(cols):
            combo = 1 << i
            while v:
                p = v.bit_length() - 1
                if p not in basis:
                    basis[p] = (v, combo)
                    break
                bv, bc = basis[p]
                v ^= bv
                combo ^= bc
        combo = 0
        v = target
        while v:
            p = v.bit_length() - 1
            if p not in basis:
                return None
            bv, bc = basis[p]
            v ^= bv
            combo ^= bc
        return self._from_bits([(combo >> i) & 1 for i in range(m)], k)

    # -- constructors ------------------------------------------------------

    def scalar(self, value) -> Scalar:
        if isinstance(value, Scalar):
            return value
        if self.char == 0:
            return Scalar(self, 0, rational(value))
        if isinstance(value, NUMBER_TYPES[1:]):
            return Scalar(self, 0, value.numerator * pow(value.denominator, -1, self.char) % self.char)
        return Scalar(self, 0, int(value) % self.char)

    def element(self, raw, level: int) -> Scalar:
        """The Scalar for a raw value at ``level``, demoted to its minimal level."""
        raw, level = self.demote(raw, level)
        return Scalar(self, level, raw)

    def zero(self) -> Scalar:
        return Scalar(self, 0, self._zeros[0])

    def one(self) -> Scalar:
        return Scalar(self, 0, self._ones[0])

    def gen(self, k: int) -> Scalar:
        """The generator t_k of level k."""
        return Scalar(self, k, (self._zeros[k - 1], self._ones[k - 1]))

    def random_raw(self, rng: random.Random, k: int, bound: int = 5):
        if k == 0:
            if self.char:
                return rng.randrange(self.char)
            return rational(rng.randint(-bound, bound), rng.randint(1, bound))
        return (self.random_raw(rng, k - 1, bound), self.random_raw(rng, k - 1, bound))

    def random(self, rng: random.Random, level: int | None = None, bound: int = 5) -> Scalar:
        k = self.depth if level is None else level
        raw, lvl = self.demote(self.random_raw(rng, k, bound), k)
        return Scalar(self, lvl, raw)

    def elements(self):
        """All elements of a finite level-0 field, in residue order."""
        if not self.char:
            raise UnsupportedField("rationals are not enumerable")
        return [Scalar(self, 0, r) for r in range(self.char)]

    # -- text encoding -----------------------------------------------------

    def encode_raw(self, x, k) -> str:
        if k == 0:
            if self.char:
                return str(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return f"[{self.encode_raw(x[0], k - 1)},{self.encode_raw(x[1], k - 1)}]"

    def parse(self, text: str) -> Scalar:
        raw, k = self._parse_raw(text.replace(" ", ""))
        if k > self.depth:
            raise ValueError(f"scalar {text!r} is deeper than the tower")
        raw, k = self.demote(raw, k)
        return Scalar(self, k, raw)

    def _parse_raw(self, s: str):
        if s.startswith("["):
            if not s.endswith("]"):
                raise ValueError(f"malformed scalar {s!r}")
            inner = s[1:-1]
            depth = 0
            for i, ch in enumerate(inner):
                if ch == "[":
                    depth += 1
                elif ch == "]":
                    depth -= 1
                elif ch == "," and depth == 0:
                    lo, klo = self._parse_raw(inner[:i])
                    hi, khi = self._parse_raw(inner[i + 1:])
                    if klo != khi:
                        raise ValueError(f"unbalanced scalar {s!r}")
                    return (lo, hi), klo + 1
            raise ValueError(f"malformed scalar {s!r}")
        if self.char:
            v = int(s)
            if not 0 <= v < self.char:
                raise ValueError(f"residue {s} out of range")
            return v, 0
        v = Fraction(s)
        if s != (str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"):
            raise ValueError(f"non-canonical rational {s!r}")
        return rational(v), 0

    def to_json(self) -> dict:
        tower = []
        for i, (b, c) in enumerate(self.levels):
            tower.append([self.encode_raw(b, i), self.encode_raw(c, i)])
        return {"char": self.char, "tower": tower}

    @classmethod
    def from_json(cls, doc: dict) -> FieldCtx:
        ctx = cls(int(doc["char"]))
        for b, c in doc.get("tower", []):
            k = ctx.depth
            rb, kb = ctx._parse_raw(b)
            rc, kc = ctx._parse_raw(c)
            if kb != k or kc != k:
                raise ValueError("tower coefficient at the wrong level")
            if not ctx.irreducible_raw(rb, rc):
                raise ValueError(f"x^2 + {b} x + {c} is reducible at level {k}")
            ctx = ctx.extend(rb, rc)
        return ctx


class Scalar:
    __slots__ = ("ctx", "level", "raw")

    def __init__(self, ctx: FieldCtx, level: int, raw):
        self.ctx = ctx
        self.level = level
        self.raw = raw

    def _coerce(self, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, NUMBER_TYPES):
            return self.ctx.scalar(other)
        return NotImplemented

    def _binary(self, other, op):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.ctx is other.ctx:
            ctx = self.ctx
        elif self.ctx.char != other.ctx.char:
            raise IncompatibleTowers("scalars of different characteristic")
        elif other.level == 0:
            ctx = self.ctx
        elif self.level == 0:
            ctx = other.ctx
        else:
            ctx = self.ctx.join(other.ctx)
        k = max(self.level, other.level)
        x = ctx.lift(self.raw, self.level, k)
        y = ctx.lift(other.raw, other.level, k)
        r = op(ctx, x, y, k)
        if k:
            r, k = ctx.demote(r, k)
        return Scalar(ctx, k, r)

    def __add__(self, other):
        if isinstance(other, Scalar) and self.level == other.level == 0 and self.ctx is other.ctx:
            p = self.ctx.char
            return Scalar(self.ctx, 0, (self.raw + other.raw) % p if p else self.raw + other.raw)
        return self._binary(other, FieldCtx.add)

    def __sub__(self, other):
        if isinstance(other, Scalar) and self.level == other.level == 0 and self.ctx is other.ctx:
            p = self.ctx.char
            return Scalar(self.ctx, 0, (self.raw - other.raw) % p if p else self.raw - other.raw)
        return self._binary(other, FieldCtx.sub)

    def __mul__(self, other):
        if isinstance(other, Scalar) and self.level == other.level == 0 and self.ctx is other.ctx:
            p = self.ctx.char
            return Scalar(self.ctx, 0, (self.raw * other.raw) % p if p else self.raw * other.raw)
        return self._binary(other, FieldCtx.mul)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __radd__(self, other):
        return self._coerce(other) + self

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __rmul__(self, other):
        return self._coerce(other) * self

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        return Scalar(self.ctx, self.level, self.ctx.neg(self.raw, self.level))

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        raw, k = self.ctx.demote(self.ctx.power_raw(self.raw, e, self.level), self.level)
        return Scalar(self.ctx, k, raw)

    def inv(self) -> Scalar:
        if self.is_zero():
            raise DivisionByZero("division by zero scalar")
        raw, k = self.ctx.demote(self.ctx.inv(self.raw, self.level), self.level)
        return Scalar(self.ctx, k, raw)

    def is_zero(self) -> bool:
        return self.level == 0 and self.raw == self.ctx._zeros[0]

    def is_one(self) -> bool:
        return self.level == 0 and self.raw == self.ctx._ones[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, NUMBER_TYPES):
            other = self.ctx.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        if self.level != other.level or self.raw != other.raw or self.ctx.char != other.ctx.char:
            return False
        if self.level and self.ctx is not other.ctx:
            return self.ctx.levels[:self.level] == other.ctx.levels[:self.level]
        return True

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.ctx.char, self.level, self.raw))

    def key(self):
        return (self.level, self.ctx.key_raw(self.raw, self.level))

    def __lt__(self, other):
        return canonical_order(self, other) < 0

    def encode(self) -> str:
        return self.ctx.encode_raw(self.raw, self.level)

    __str__ = encode

    def __repr__(self):
        return f"Scalar({self.encode()})"

    def lifted(self, k: int):
        """Raw representation at level k >= self.level."""
        return self.ctx.lift(self.raw, self.level, k)


def canonical_order(x: Scalar, y: Scalar) -> int:
    """-1, 0 or 1: level first, then the representation lexicographically."""
    kx, ky = x.key(), y.key()
    return (kx > ky) - (kx < ky)


def smallest(*xs: Scalar) -> Scalar:
    return min(xs, key=Scalar.key)


def sqrt(x: Scalar, ctx: FieldCtx | None = None) -> tuple[Scalar, FieldCtx]:
    """Square root, extending the tower when x is a non-square in all of it.

    Returns the smaller root under ``canonical_order`` and the (possibly new)
    context it lives in.
    """
    ctx = x.ctx if ctx is None else ctx.join(x.ctx)
    if ctx.char == 2:
        return _frobenius_inverse(x, ctx), ctx
    if x.is_zero():
        return x, ctx
    top = ctx.depth
    raw = ctx.sqrt_raw(x.lifted(top), top)
    if raw is not None:
        r = ctx.element(raw, top)
        return smallest(r, -r), ctx
    # extend by t^2 = d for a d fixed by the tower (over Q at level 0: by the
    # square class of x), then sqrt(x) = sqrt(x/d) t
    if ctx.char:
        d = ctx.element(ctx.nonsquare_raw(), top)
    elif x.level == 0:
        d = ctx.scalar(_squarefree_kernel(x.raw))
    else:
        d = x
    ctx = ctx.extend(ctx.zero_raw(top), ctx.neg(d.lifted(top), top))
    u = ctx.sqrt_raw((x / d).lifted(top), top)
    r = ctx.element(u, top) * ctx.gen(top + 1)
    return smallest(r, -r), ctx


def _squarefree_kernel(q: Fraction) -> int:
    n = q.numerator * q.denominator
    sign = -1 if n < 0 else 1
    n = abs(n)
    out, f = 1, 2
    while f * f <= n:
        while n % (f * f) == 0:
            n //= f * f
        if n % f == 0:
            out *= f
            n //= f
        f += 1
    return sign * out * n


def _frobenius_inverse(x: Scalar, ctx: FieldCtx) -> Scalar:
    raw = ctx.frobenius_inverse_raw(x.raw, x.level)
    return Scalar(ctx, x.level, raw)


def solve_quadratic(b: Scalar, c: Scalar, ctx: FieldCtx | None = None) -> tuple[Scalar, FieldCtx]:
    """A root of x^2 + b x + c, the smaller of the two under canonical_order."""
    ctx = b.ctx.join(c.ctx) if ctx is None else ctx.join(b.ctx).join(c.ctx)
    if ctx.char != 2:
        r, ctx = sqrt(b * b - 4 * c, ctx)
        half = ctx.scalar(rational(1, 2))
        return smallest((r - b) * half, (-r - b) * half), ctx
    if b.is_zero():
        return _frobenius_inverse(c, ctx), ctx
    target = c / (b * b)
    top = ctx.depth
    raw = ctx.artin_schreier_raw(target.lifted(top), top)
    if raw is None:
        # t^2 + t = a0 for a fixed a0; target + a0 then has a root y0 below
        a0 = ctx.as_obstruction_raw()
        y0 = ctx.artin_schreier_raw(ctx.add(target.lifted(top), a0, top), top)
        ctx = ctx.extend(ctx.one_raw(top), a0)
        y = ctx.element(y0, top) + ctx.gen(top + 1)
    else:
        y = ctx.element(raw, top)
    return smallest(b * y, b * (y + 1)), ctx
