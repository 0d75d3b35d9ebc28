"""Exact arithmetic in multi-quadratic fields Q(sqrt(d_1), ..., sqrt(d_k)).

Generators are squarefree integers independent modulo squares.  An element is
a dict mapping a frozenset S of generator positions to the rational
coefficient of prod_{i in S} sqrt(d_i).
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

import sympy


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = s * f^2 with s squarefree (sign kept in s)."""
    if n == 0:
        return 0, 0
    sign = -1 if n < 0 else 1
    s, f = sign, 1
    for p, e in sympy.factorint(abs(n)).items():
        f *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, f


class QuadTower:
    def __init__(self):
        self.gens: list[int] = []
        self._vecs: list[frozenset] = []  # prime-support of each generator (with -1 as a "prime")

    @staticmethod
    def _support(s: int) -> frozenset:
        out = set(sympy.factorint(abs(s)))
        if s < 0:
            out.add(-1)
        return frozenset(out)

    def sqrt(self, q) -> "QuadElement":
        """An exact square root of the rational ``q``, extending the tower if needed."""
        q = Fraction(q)
        if q == 0:
            return QuadElement(self, {})
        # sqrt(a/b) = sqrt(a b) / b
        s, f = _squarefree_split(q.numerator * q.denominator)
        coef = Fraction(f, q.denominator)
        if s == 1:
            return QuadElement(self, {frozenset(): coef})
        target = self._support(s)
        combo = self._express(target)
        if combo is None:
            self.gens.append(s)
            self._vecs.append(target)
            return QuadElement(self, {frozenset([len(self.gens) - 1]): coef})
        # sqrt(s) = sqrt(prod g_i) * (sqrt(s)/sqrt(prod g_i)), the latter rational
        prod = 1
        for i in combo:
            prod *= self.gens[i]
        ratio2 = Fraction(s, prod)  # a rational square, up to sign handled by support
        n, d = ratio2.numerator, ratio2.denominator
        rn, rd = isqrt(abs(n)), isqrt(d)
        assert rn * rn == abs(n) and rd * rd == d and n > 0
        return QuadElement(self, {frozenset(combo): coef * Fraction(rn, rd)})

    def _express(self, target: frozenset):
        """Subset of generators whose supports XOR to ``target``, or None."""
        # Gaussian elimination over F_2
        basis: list = []  # (pivot, vec, subset)
        for i, v in enumerate(self._vecs):
            sub = frozenset([i])
            for piv, bv, bs in basis:
                if piv in v:
                    v, sub = v ^ bv, sub ^ bs
            if v:
                basis.append((min(v, key=repr), v, sub))
        v, sub = target, frozenset()
        for piv, bv, bs in basis:
            if piv in v:
                v, sub = v ^ bv, sub ^ bs
        return sub if not v else None

    def one(self) -> "QuadElement":
        return QuadElement(self, {frozenset(): Fraction(1)})

    def const(self, q) -> "QuadElement":
        q = Fraction(q)
        return QuadElement(self, {frozenset(): q} if q else {})


class QuadElement:
    __slots__ = ("tower", "c")

    def __init__(self, tower: QuadTower, coeffs: dict):
        self.tower = tower
        self.c = {k: Fraction(v) for k, v in coeffs.items() if v != 0}

    def _lift(self, other) -> "QuadElement":
        if isinstance(other, QuadElement):
            return other
        return self.tower.const(other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return QuadElement(self.tower, out)

    __radd__ = __add__

    def __neg__(self):
        return QuadElement(self.tower, {k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, QuadElement):
            q = Fraction(other)
            return QuadElement(self.tower, {k: v * q for k, v in self.c.items()})
        gens = self.tower.gens
        out: dict = {}
        for s, a in self.c.items():
            for t, b in other.c.items():
                f = a * b
                for i in s & t:
                    f *= gens[i]
                k = s ^ t
                out[k] = out.get(k, 0) + f
        return QuadElement(self.tower, out)

    __rmul__ = __mul__

    def conj(self, i: int) -> "QuadElement":
        return QuadElement(self.tower, {k: (-v if i in k else v) for k, v in self.c.items()})

    def inverse(self) -> "QuadElement":
        if not self.c:
            raise ZeroDivisionError("inverse of zero in quadratic tower")
        num = self.tower.one()
        x = self
        for i in range(len(self.tower.gens)):
            if any(i in k for k in x.c):
                xc = x.conj(i)
                num = num * xc
                x = x * xc
        assert set(x.c) <= {frozenset()}
        return num * (1 / x.c[frozenset()])

    def __truediv__(self, other):
        if not isinstance(other, QuadElement):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.tower.const(other)
        if not isinstance(other, QuadElement):
            return NotImplemented
        return (self - other).c == {}

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def is_rational(self) -> bool:
        return set(self.c) <= {frozenset()}

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is irrational")
        return self.c.get(frozenset(), Fraction(0))

    def __float__(self):
        import math
        out = 0.0
        for k, v in self.c.items():
            t = float(v)
            for i in k:
                g = self.tower.gens[i]
                if g < 0:
                    raise ValueError("complex element has no float value")
                t *= math.sqrt(g)
            out += t
        return out

    def to_mp(self):
        import mpmath
        out = mpmath.mpc(0)
        for k, v in self.c.items():
            t = mpmath.mpf(v.numerator) / v.denominator
            for i in k:
                t = t * mpmath.sqrt(mpmath.mpf(self.tower.gens[i]))
            out += t
        return out

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for k, v in sorted(self.c.items(), key=lambda kv: sorted(kv[0])):
            rad = "*".join(f"sqrt({self.tower.gens[i]})" for i in sorted(k))
            parts.append(f"{v}" + (f"*{rad}" if rad else ""))
        return " + ".join(parts)


def quadratic_roots(tower: QuadTower, s, p) -> tuple:
    """Roots of x^2 - s x + p in the tower."""
    s, p = Fraction(s), Fraction(p)
    root = tower.sqrt(s * s - 4 * p)
    half = Fraction(1, 2)
    return ((root + s) * half, (-root + s) * half)
