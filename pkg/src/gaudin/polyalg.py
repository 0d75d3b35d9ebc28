"""Exact univariate polynomials, quasi-polynomials and rational functions over Q.

Also the linear solver for the Wronskian equation ``W(y, x^s q) = rhs`` which
drives both the criticality test and the reproduction procedure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class NoSolution(ArithmeticError):
    """The Wronskian equation has no polynomial solution."""


class NonUnique(ArithmeticError):
    """The Wronskian equation has a one-parameter family of solutions of the requested degree."""


def _trim(coeffs: Iterable) -> tuple:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class Poly:
    """Dense polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        out = cls.const(1)
        for t in roots:
            out = out * cls((-Fraction(t), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.lead == 1

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                s = mono
            else:
                s = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", s))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {sg} {s}" for sg, s in terms[1:])

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(c * a for a in self.coeffs)

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly((0,) * k + self.coeffs)

    def deriv(self) -> "Poly":
        return Poly(k * self.coeffs[k] for k in range(1, len(self.coeffs)))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        lead = other.lead
        dv = other.degree
        for k in range(len(rem) - 1, dv - 1, -1):
            c = rem[k] / lead
            if c:
                q[k - dv] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dv + j] -= c * b
        return Poly(q), Poly(rem[:dv] if dv > 0 else [])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        return (other % self).is_zero()

    def valuation(self) -> int:
        """Order of vanishing at x = 0."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("valuation of the zero polynomial")

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_strings(cls, items: Sequence[str]) -> "Poly":
        return cls(Fraction(s) for s in items)


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd; ``gcd(f, 0) = monic(f)``."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def is_squarefree(f: Poly) -> bool:
    return f.degree <= 0 or gcd(f, f.deriv()).degree == 0


def coprime(f: Poly, g: Poly) -> bool:
    return gcd(f, g).degree == 0


@dataclass(frozen=True)
class QuasiPoly:
    """x^exponent * body, with body(0) != 0 unless the quasi-polynomial is zero."""

    exponent: Fraction
    body: Poly

    @classmethod
    def make(cls, exponent, body: Poly) -> "QuasiPoly":
        if body.is_zero():
            return cls(Fraction(0), body)
        v = body.valuation()
        if v:
            body = Poly(body.coeffs[v:])
        return cls(Fraction(exponent) + v, body)

    @classmethod
    def of(cls, p: Poly) -> "QuasiPoly":
        return cls.make(0, p)

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __mul__(self, other):
        if isinstance(other, Poly):
            other = QuasiPoly.of(other)
        if isinstance(other, QuasiPoly):
            return QuasiPoly.make(self.exponent + other.exponent, self.body * other.body)
        return QuasiPoly.make(self.exponent, self.body.scale(other))

    __rmul__ = __mul__

    def __neg__(self):
        return QuasiPoly(self.exponent, -self.body)

    def __add__(self, other: "QuasiPoly") -> "QuasiPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        d = self.exponent - other.exponent
        if d.denominator != 1:
            raise ValueError("sum of quasi-polynomials with non-integral exponent gap")
        lo = min(self.exponent, other.exponent)
        a = self.body.shift_up(int(self.exponent - lo))
        b = other.body.shift_up(int(other.exponent - lo))
        return QuasiPoly.make(lo, a + b)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = QuasiPoly.of(other)
        return (isinstance(other, QuasiPoly) and self.body == other.body
                and (self.is_zero() or self.exponent == other.exponent))

    def __hash__(self):
        return hash((self.exponent, self.body))

    def __str__(self):
        if self.is_zero():
            return "0"
        if self.exponent == 0:
            return str(self.body)
        return f"x^{self.exponent}*({self.body})"

    def as_poly(self) -> Poly:
        if self.is_zero():
            return self.body
        if self.exponent.denominator != 1 or self.exponent < 0:
            raise ValueError(f"{self} is not a polynomial")
        return self.body.shift_up(int(self.exponent))


def wronskian(f, g) -> QuasiPoly:
    """W(f, g) = f' g - f g' for (quasi-)polynomials."""
    if isinstance(f, Poly):
        f = QuasiPoly.of(f)
    if isinstance(g, Poly):
        g = QuasiPoly.of(g)
    if f.is_zero() or g.is_zero():
        return QuasiPoly.of(Poly())
    a, p = f.exponent, f.body
    b, q = g.exponent, g.body
    body = (p * q).scale(a - b) + (p.deriv() * q - p * q.deriv()).shift_up(1)
    return QuasiPoly.make(a + b - 1, body)


# -- linear algebra over Q ------------------------------------------------------

def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]):
    """Solve ``rows @ x = rhs``; returns (particular solution, kernel basis) or raises NoSolution."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        p = aug[row][col]
        if p != 1:
            aug[row] = [v / p for v in aug[row]]
        for i in range(m):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    for i in range(row, m):
        if aug[i][n] != 0:
            raise NoSolution("inconsistent linear system")
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    free = [c for c in range(n) if c not in pivots]
    kernel = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -aug[i][fcol]
        kernel.append(v)
    return x, kernel


@dataclass(frozen=True)
class WronskianSolution:
    """``poly`` is monic; the raw solution of the equation is ``scale * poly``."""

    poly: Poly
    scale: Fraction
    shift: Fraction

    @property
    def raw(self) -> Poly:
        return self.poly.scale(self.scale)

    @property
    def quasi(self) -> QuasiPoly:
        return QuasiPoly.make(self.shift, self.raw)


def solve_wronskian(y: Poly, rhs, shift, degree: int | None = None) -> WronskianSolution:
    """Find a polynomial q with ``W(y, x^shift q) = rhs``.

    When ``-shift`` is a nonnegative integer the solutions form a line
    ``q0 + c y x^{-shift}``; the representative returned has no x^{deg y - shift}
    term, unless ``degree`` asks for exactly that degree (``NonUnique``).
    With ``degree`` given, a solution of any other degree raises ``NoSolution``.
    """
    if isinstance(rhs, Poly):
        rhs = QuasiPoly.of(rhs)
    shift = Fraction(shift)
    if y.is_zero():
        raise ValueError("solve_wronskian: y must be nonzero")
    m = y.degree
    if rhs.is_zero():
        target = Poly()
    else:
        e = rhs.exponent - shift + 1
        if e.denominator != 1 or e < 0:
            raise NoSolution(f"exponent mismatch: rhs x^{rhs.exponent}, shift {shift}")
        target = rhs.body.shift_up(int(e))
    kernel_deg = None
    if shift.denominator == 1 and m - shift >= 0:
        kernel_deg = int(m - shift)
    bound = max(target.degree - m, 0)
    if kernel_deg is not None:
        bound = max(bound, kernel_deg)
    if degree is not None:
        bound = max(bound, degree)
    yd = y.deriv()
    # column j: L(x^j) = x^{j+1} y' - (j + shift) x^j y
    cols = [yd.shift_up(j + 1) - y.shift_up(j).scale(j + shift) for j in range(bound + 1)]
    nrows = max(target.degree, m + bound) + 1
    rows = [[c[i] for c in cols] for i in range(nrows)]
    x, kernel = solve_linear(rows, [target[i] for i in range(nrows)])
    if len(kernel) > 1:
        raise NonUnique("kernel of dimension > 1")
    if kernel:
        k = kernel[0]
        if degree is not None and degree == kernel_deg:
            raise NonUnique(f"degree {degree} solutions form a family")
        x = [a - x[kernel_deg] / k[kernel_deg] * b for a, b in zip(x, k)]
    q = Poly(x)
    if degree is not None and q.degree != degree:
        raise NoSolution(f"solution has degree {q.degree}, expected {degree}")
    if q.is_zero():
        return WronskianSolution(q, Fraction(1), shift)
    return WronskianSolution(q.monic(), q.lead, shift)


@dataclass(frozen=True)
class SquarefreeReport:
    squarefree: tuple
    coprime_pairs: dict

    @property
    def ok(self) -> bool:
        return all(self.squarefree) and all(self.coprime_pairs.values())


def squarefree_and_coprime_checks(polys: Sequence[Poly], pairs: Iterable = ()) -> SquarefreeReport:
    sq = tuple(is_squarefree(p) for p in polys)
    cp = {(i, j): coprime(polys[i], polys[j]) for i, j in pairs}
    return SquarefreeReport(sq, cp)


class RationalFn:
    """num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced: bool = False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = Poly.const(1)
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not reduced:
            if num.is_zero():
                den = Poly.const(1)
            else:
                g = gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.lead
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num, self.den = num, den

    @classmethod
    def log_derivative(cls, p: Poly) -> "RationalFn":
        return cls(p.deriv(), p)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFn({self})"

    def __str__(self):
        if self.den == Poly.const(1):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduced=True)

    def __add__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn(other)
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        g = gcd(self.den, other.den)
        a, b = self.den // g, other.den // g
        return RationalFn(self.num * b + other.num * a, a * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalFn):
            if isinstance(other, Poly):
                other = RationalFn(other)
            else:
                return RationalFn(self.num.scale(other), self.den, reduced=other != 0)
        g1, g2 = gcd(self.num, other.den), gcd(other.num, self.den)
        return RationalFn((self.num // g1) * (other.num // g2),
                          (self.den // g2) * (other.den // g1))

    __rmul__ = __mul__

    def inverse(self) -> "RationalFn":
        return RationalFn(self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, RationalFn):
            other = RationalFn(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RationalFn(other) * self.inverse()

    def deriv(self) -> "RationalFn":
        n, d = self.num, self.den
        return RationalFn(n.deriv() * d - n * d.deriv(), d * d)

    def __call__(self, x):
        den = self.den(x)
        if den == 0:
            raise ZeroDivisionError("pole of rational function")
        return self.num(x) / den

    def compose(self, inner: "RationalFn") -> "RationalFn":
        """self(inner(x))."""
        def horner(p: Poly) -> RationalFn:
            acc = RationalFn(0)
            for c in reversed(p.coeffs):
                acc = acc * inner + c
            return acc
        return horner(self.num) / horner(self.den)
