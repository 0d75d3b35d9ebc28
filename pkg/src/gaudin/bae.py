"""Bethe ansatz equations, the Wronskian criticality test, genericity and eigenvalues.

A critical point is carried as an r-tuple of monic polynomials whose roots
are the Bethe variables of each color.  All exact checks work with the
polynomials directly, so irrational roots never have to be extracted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .polyalg import (
    NoSolution,
    NonUnique,
    Poly,
    QuasiPoly,
    WronskianSolution,
    coprime,
    is_squarefree,
    solve_wronskian,
)
from .rootsys import LieDatum, as_weight, bilinear, casimir_value, is_dominant, sub


class ForbiddenCoincidence(ZeroDivisionError):
    pass


class GenericityFailure(ValueError):
    def __init__(self, report: "GenericityReport"):
        super().__init__(f"tuple is not generic: {report.describe()}")
        self.report = report


class PoleAtPoint(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class BAEInstance:
    datum: LieDatum
    weights: tuple
    points: tuple
    lvec: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(as_weight(w) for w in self.weights))
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "lvec", tuple(int(k) for k in self.lvec))
        if len(self.weights) != len(self.points):
            raise ValueError("one point per weight is required")
        if len(set(self.points)) != len(self.points):
            raise ValueError(f"points must be pairwise distinct: {self.points}")
        if len(self.lvec) != self.datum.rank or any(k < 0 for k in self.lvec):
            raise ValueError(f"bad l-vector {self.lvec}")
        if any(len(w) != self.datum.rank for w in self.weights):
            raise ValueError("weight of wrong rank")

    @classmethod
    def two_point(cls, datum: LieDatum, lam: Sequence, lvec: Sequence[int]) -> "BAEInstance":
        """Data (lam, omega_1) at z = (0, 1)."""
        return cls(datum, (as_weight(lam), datum.fundamental(1)), (Fraction(0), Fraction(1)), tuple(lvec))

    @property
    def colors(self) -> tuple:
        """The nondecreasing color map, 1-based colors."""
        return tuple(i + 1 for i, k in enumerate(self.lvec) for _ in range(k))

    @property
    def total_weight(self):
        out = self.datum.zero
        for w in self.weights:
            out = tuple(a + b for a, b in zip(out, w))
        return out

    @property
    def final_weight(self):
        """Lambda_1 + ... + Lambda_n - alpha(l)."""
        return sub(self.total_weight, self.datum.alpha_of(self.lvec))

    def t_exponents(self, i: int) -> tuple:
        """Exponents of T_i at each point."""
        return tuple(w[i - 1] for w in self.weights)


@dataclass(frozen=True)
class CriticalTuple:
    polys: tuple
    label: object = None

    def __post_init__(self):
        object.__setattr__(self, "polys", tuple(self.polys))

    @property
    def lvec(self) -> tuple:
        return tuple(p.degree for p in self.polys)

    @property
    def length(self) -> int:
        return sum(self.lvec)

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, i):
        return self.polys[i]


# -- numeric residuals -------------------------------------------------------

def bae_residual_numeric(inst: BAEInstance, t: Sequence[Sequence]) -> list:
    """Logarithmic derivatives of the master function in the Bethe variables.

    ``t[m]`` lists the variables of color m+1.  Works with any field-like
    scalars (complex, mpmath, Fraction).
    """
    datum = inst.datum
    if [len(g) for g in t] != list(inst.lvec):
        raise ValueError(f"root groups {[len(g) for g in t]} do not match l = {inst.lvec}")
    pair = [[bilinear(datum, datum.simple_root(a + 1), w) for w in inst.weights]
            for a in range(datum.rank)]
    gram = datum.root_gram
    flat = [(a, v) for a, g in enumerate(t) for v in g]
    out = []
    for idx, (a, ti) in enumerate(flat):
        acc = 0
        for s, zs in enumerate(inst.points):
            c = pair[a][s]
            if c:
                d = ti - zs
                if d == 0:
                    raise ForbiddenCoincidence(f"t = z_{s + 1} with nonzero pairing")
                acc -= c / d
        for jdx, (b, tj) in enumerate(flat):
            c = gram[a][b]
            if jdx != idx and c:
                d = ti - tj
                if d == 0:
                    raise ForbiddenCoincidence("coincident Bethe variables with nonzero pairing")
                acc += c / d
        out.append(acc)
    return out


# -- genericity ----------------------------------------------------------------

@dataclass(frozen=True)
class GenericityReport:
    g1: bool
    g2: bool
    g3: bool
    failures: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return self.g1 and self.g2 and self.g3

    def describe(self) -> str:
        return "; ".join(self.failures) if self.failures else "G1 G2 G3 pass"


def genericity(inst: BAEInstance, y: CriticalTuple | Sequence[Poly]) -> GenericityReport:
    polys = tuple(y)
    datum = inst.datum
    fails = []
    g1 = True
    for i, p in enumerate(polys):
        if not is_squarefree(p):
            g1 = False
            fails.append(f"G1: y_{i + 1} has a multiple root")
    g2 = True
    for i, p in enumerate(polys):
        for s, (w, zs) in enumerate(zip(inst.weights, inst.points)):
            if w[i] != 0 and p(zs) == 0:
                g2 = False
                fails.append(f"G2: y_{i + 1} vanishes at z_{s + 1}")
    g3 = True
    for i in range(datum.rank):
        for j in range(i + 1, datum.rank):
            if datum.cartan[i][j] < 0 and not coprime(polys[i], polys[j]):
                g3 = False
                fails.append(f"G3: y_{i + 1}, y_{j + 1} share a root")
    return GenericityReport(g1, g2, g3, tuple(fails))


# -- Wronskian criterion ---------------------------------------------------------

def _point_factor(zs) -> Poly:
    return Poly((-Fraction(zs), 1))


def wronskian_rhs(inst: BAEInstance, y: Sequence[Poly], i: int) -> QuasiPoly:
    """T_i * prod_{j != i} y_j^{-a_ij} as a quasi-polynomial (requires z_1 = 0)."""
    datum = inst.datum
    if inst.points[0] != 0:
        raise ValueError("the Wronskian criterion is set up with z_1 = 0")
    body = Poly.const(1)
    for w, zs in zip(inst.weights[1:], inst.points[1:]):
        e = w[i - 1]
        if e.denominator != 1 or e < 0:
            raise ValueError("weights at z_2..z_n must be dominant integral")
        body = body * _point_factor(zs) ** int(e)
    for j in range(datum.rank):
        e = -datum.cartan[i - 1][j]
        if j != i - 1 and e:
            body = body * y[j] ** e
    return QuasiPoly.make(inst.weights[0][i - 1], body)


def wronskian_shift(inst: BAEInstance, i: int) -> Fraction:
    """<Lambda_1 + rho, alpha_i^vee>."""
    return inst.weights[0][i - 1] + 1


def solve_direction(inst: BAEInstance, y: Sequence[Poly], i: int,
                    degree: int | None = None) -> WronskianSolution:
    return solve_wronskian(y[i - 1], wronskian_rhs(inst, y, i), wronskian_shift(inst, i), degree)


@dataclass(frozen=True)
class CriticalityResult:
    critical: bool
    witnesses: tuple  # WronskianSolution or None per direction
    genericity: GenericityReport
    failed_direction: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.critical


def is_critical_wronskian(inst: BAEInstance, y: CriticalTuple | Sequence[Poly],
                          *, check_generic: bool = True) -> CriticalityResult:
    """Exact criticality test: every direction of the Wronskian equation is solvable."""
    polys = tuple(y)
    if tuple(p.degree for p in polys) != inst.lvec:
        raise ValueError(f"degrees {tuple(p.degree for p in polys)} do not match l = {inst.lvec}")
    if not all(p.is_monic() for p in polys):
        raise ValueError("tuple polynomials must be monic")
    for w in inst.weights[1:]:
        if not is_dominant(w):
            raise ValueError("weights at z_2..z_n must be dominant integral")
    gen = genericity(inst, polys)
    if check_generic and not gen.ok:
        raise GenericityFailure(gen)
    wit = []
    for i in range(1, inst.datum.rank + 1):
        try:
            wit.append(solve_direction(inst, polys, i))
        except NonUnique:
            # a one-parameter family of solutions still proves existence
            wit.append(None)
        except NoSolution as exc:
            return CriticalityResult(False, tuple(wit), gen, i, str(exc))
    return CriticalityResult(True, tuple(wit), gen)


# -- eigenvalues -------------------------------------------------------------------

def gaudin_eigenvalue(inst: BAEInstance, y: CriticalTuple | Sequence[Poly], i: int) -> Fraction:
    """Eigenvalue of H_i(z) on the Bethe vector of ``y`` (i is 1-based)."""
    datum = inst.datum
    polys = tuple(y)
    zi, li = inst.points[i - 1], inst.weights[i - 1]
    acc = Fraction(0)
    for j, (zj, lj) in enumerate(zip(inst.points, inst.weights)):
        if j != i - 1:
            acc += bilinear(datum, li, lj) / (zi - zj)
    for m, p in enumerate(polys):
        if p.degree <= 0:
            continue
        c = bilinear(datum, datum.simple_root(m + 1), li)
        if c == 0:
            continue
        v = p(zi)
        if v == 0:
            raise PoleAtPoint(f"y_{m + 1} vanishes at z_{i}")
        # sum over roots t of 1/(t - z_i) = -y'(z_i)/y(z_i)
        acc += c * (-p.deriv()(zi) / v)
    return acc


def gaudin_eigenvalue_numeric(inst: BAEInstance, t: Sequence[Sequence], i: int):
    datum = inst.datum
    zi, li = inst.points[i - 1], inst.weights[i - 1]
    acc = 0
    for j, (zj, lj) in enumerate(zip(inst.points, inst.weights)):
        if j != i - 1:
            acc += bilinear(datum, li, lj) / (zi - zj)
    for m, group in enumerate(t):
        c = bilinear(datum, datum.simple_root(m + 1), li)
        if c:
            for tk in group:
                acc += c / (tk - zi)
    return acc


def casimir_eigenvalue(datum: LieDatum, lam: Sequence, mu: Sequence,
                       z1=Fraction(0), z2=Fraction(1)) -> Fraction:
    """H_1 on the summand V_mu of V_lam (x) V_{omega_1}: (c(mu) - c(lam) - c(omega_1)) / 2(z_1 - z_2)."""
    c = casimir_value
    return (c(datum, mu) - c(datum, lam) - c(datum, datum.fundamental(1))) / (2 * (Fraction(z1) - z2))
