"""The reproduction procedure: single steps, descent chains, and the rebuild from (1, ..., 1).

Steps act on a pair (first weight nu, tuple y) for the data (nu, omega_1) at
z = (0, 1).  A step in direction i replaces y_i by the monic solution of the
Wronskian equation and nu by s_i . nu.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .bae import BAEInstance, CriticalTuple, GenericityReport, genericity, is_critical_wronskian, solve_direction
from .closedform import LengthLabel, is_admissible, lvector
from .polyalg import NoSolution, Poly, RationalFn
from .rootsys import LieDatum, as_weight, format_weight, shifted_reflect, shifted_word

log = logging.getLogger(__name__)


class ChainBlocked(RuntimeError):
    pass


@dataclass(frozen=True)
class ReproStep:
    direction: int
    weight_in: tuple
    tuple_in: tuple
    weight_out: tuple
    tuple_out: tuple
    scale: Fraction
    generic: GenericityReport

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "weight_in": [str(c) for c in self.weight_in],
            "weight_out": [str(c) for c in self.weight_out],
            "tuple_in": [p.to_strings() for p in self.tuple_in],
            "tuple_out": [p.to_strings() for p in self.tuple_out],
            "scale": str(self.scale),
            "generic": self.generic.ok,
        }


def new_lvector(datum: LieDatum, lvec: Sequence[int], i: int) -> tuple:
    """l' with omega_1 - alpha(l') = s_i(omega_1 - alpha(l))."""
    a = datum.cartan[i - 1]
    li = lvec[i - 1] + (1 if i == 1 else 0) - sum(a[j] * lvec[j] for j in range(datum.rank))
    out = list(lvec)
    out[i - 1] = li
    return tuple(out)


def reproduce(datum: LieDatum, nu: Sequence, y: Sequence[Poly], i: int) -> ReproStep:
    nu = as_weight(nu)
    y = tuple(y)
    datum._check_index(i)
    lvec = tuple(p.degree for p in y)
    target = new_lvector(datum, lvec, i)
    if target[i - 1] < 0:
        raise NoSolution(f"direction {i}: negative degree {target[i - 1]} required")
    inst = BAEInstance.two_point(datum, nu, lvec)
    sol = solve_direction(inst, y, i, degree=target[i - 1])
    out = y[:i - 1] + (sol.poly,) + y[i:]
    nu_out = shifted_reflect(datum, i, nu)
    gen = genericity(BAEInstance.two_point(datum, nu_out, target), out)
    return ReproStep(i, nu, y, nu_out, out, sol.scale, gen)


# -- descent words ---------------------------------------------------------------

def descent_word(datum: LieDatum, label: LengthLabel) -> tuple | None:
    """Directions, in order of application, taking length ``label`` down to 0.

    None for B_r at length r, where no chain exists.
    """
    r, l, fam = datum.rank, label.value, datum.family
    down = lambda k: tuple(range(k, 0, -1))  # noqa: E731
    if fam == "B":
        if l < r:
            return down(l)
        if l == r:
            return None
        return tuple(range(2 * r - l + 1, r)) + (r,) + down(r - 1)
    if fam == "C":
        if l <= r:
            return down(l)
        return tuple(range(2 * r - l, r)) + (r,) + down(r - 1)
    if label.bar:
        return (r,) + down(r - 2)
    if l <= r - 1:
        return down(l)
    if l == r:
        return (r - 1, r) + down(r - 2)
    return tuple(range(2 * r - l - 1, r - 1)) + (r - 1, r) + down(r - 2)


def descent_chain(datum: LieDatum, lam: Sequence, label) -> tuple:
    """The descent word, with the nonnegativity guards and degree bookkeeping checked."""
    label = LengthLabel.parse(label)
    lam = as_weight(lam)
    if not is_admissible(datum, lam, label):
        raise ChainBlocked(f"length {label} is not admissible")
    word = descent_word(datum, label)
    if word is None:
        raise ChainBlocked(f"{datum.name}: no reproduction chain at length {label}")
    nu, lvec = lam, lvector(datum, label)
    for d in word:
        if nu[d - 1] < 0:
            raise ChainBlocked(f"guard nu_{d} >= 0 violated at nu={format_weight(nu)}")
        lvec = new_lvector(datum, lvec, d)
        if lvec[d - 1] < 0:
            raise ChainBlocked(f"negative degree in direction {d}")
        nu = shifted_reflect(datum, d, nu)
    if any(lvec):
        raise ChainBlocked(f"chain ends at l={lvec}, not 0")
    return word


def theta(datum: LieDatum, lam: Sequence, label) -> tuple:
    """The first weight at the bottom of the descent chain."""
    word = descent_chain(datum, lam, label)
    return shifted_word(datum, tuple(reversed(word)), lam)


def run_descent(datum: LieDatum, lam: Sequence, y: Sequence[Poly], word: Sequence[int]) -> list:
    steps = []
    nu, cur = as_weight(lam), tuple(y)
    for d in word:
        st = reproduce(datum, nu, cur, d)
        steps.append(st)
        nu, cur = st.weight_out, st.tuple_out
    return steps


def rebuild_transcript(datum: LieDatum, lam: Sequence, label) -> list:
    """Ascent steps from ((theta, omega_1), (1, ..., 1)) up to length ``label``."""
    label = LengthLabel.parse(label)
    word = descent_chain(datum, lam, label)
    nu = theta(datum, lam, label)
    cur = tuple(Poly.const(1) for _ in range(datum.rank))
    steps = []
    for d in reversed(word):
        st = reproduce(datum, nu, cur, d)
        if not st.generic.ok:
            log.info("intermediate tuple not generic at direction %d: %s", d, st.generic.describe())
        steps.append(st)
        nu, cur = st.weight_out, st.tuple_out
    if nu != as_weight(lam):
        raise ChainBlocked(f"ascent ended at {format_weight(nu)}, expected {format_weight(lam)}")
    return steps


def rebuild_from_trivial(datum: LieDatum, lam: Sequence, label) -> CriticalTuple:
    label = LengthLabel.parse(label)
    lam = as_weight(lam)
    if descent_word(datum, label) is None:
        out = solve_by_elimination(datum, lam, label)
    else:
        steps = rebuild_transcript(datum, lam, label)
        out = CriticalTuple(steps[-1].tuple_out if steps else
                            tuple(Poly.const(1) for _ in range(datum.rank)), label)
    inst = BAEInstance.two_point(datum, lam, out.lvec)
    res = is_critical_wronskian(inst, out)
    if not res:
        raise NoSolution(f"rebuilt tuple is not critical: {res.reason}")
    return out


# -- direct elimination for tuples of linear polynomials on a path ---------------------

def solve_by_elimination(datum: LieDatum, lam: Sequence, label) -> CriticalTuple:
    """Solve the Bethe equations with one root per color along the Dynkin path 1-2-...-r.

    Each equation expresses t_{i+1} through t_1, ..., t_i; the last one leaves a
    univariate equation in t_1 whose rational roots are tested exactly.
    Used for B_r at length r, which no reproduction chain reaches.
    """
    label = LengthLabel.parse(label)
    lam = as_weight(lam)
    lvec = lvector(datum, label)
    if set(lvec) != {1}:
        raise ValueError("elimination handles l = (1, ..., 1) only")
    if datum.family == "D":
        raise ValueError("the D diagram is not a path")
    gram, r = datum.root_gram, datum.rank
    one = RationalFn(1)
    t = [RationalFn(Poly.x())]
    g = None
    for i in range(r):
        g = RationalFn(0)
        if lam[i]:
            g = g + gram[i][i] / 2 * lam[i] / t[i]  # (alpha_i, lam) = d_i lam_i
        if i == 0:
            g = g + gram[0][0] / 2 / (t[0] - one)
        if i > 0:
            g = g - gram[i][i - 1] / (t[i] - t[i - 1])
        if i < r - 1:
            if g.is_zero():
                raise NoSolution("elimination degenerates")
            t.append(t[i] - g.inverse() * gram[i][i + 1])
    # g is now the last equation; its numerator must vanish
    num = g.num
    x = sympy.Symbol("x")
    sp = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(num.coeffs)], x, domain="QQ")
    roots = set()
    for fac, _ in sp.factor_list()[1]:
        if fac.degree() == 1:
            a, b = fac.all_coeffs()
            q = -sympy.Rational(b) / sympy.Rational(a)
            roots.add(Fraction(int(q.p), int(q.q)))
    found = []
    for t1 in sorted(roots):
        try:
            vals = [ti(t1) for ti in t]
        except ZeroDivisionError:
            continue
        polys = tuple(Poly((-v, 1)) for v in vals)
        inst = BAEInstance.two_point(datum, lam, lvec)
        if not genericity(inst, polys).ok:
            continue
        if is_critical_wronskian(inst, polys, check_generic=False):
            found.append(polys)
    if len(found) != 1:
        raise NoSolution(f"elimination found {len(found)} rational critical tuples")
    return CriticalTuple(found[0], label)
