"""Factorized scalar differential operators D_lambda(y) for types B and C.

An operator is a product of first-order factors (d - ln'(u)) where u is a
monomial in the T-functions and the entries of y.  Expansion happens in the
ring of operators sum c_k d^k over rational functions, with d f = f d + f'.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .closedform import LengthLabel, _check_label, is_admissible, NotAdmissible, solve_closed_form
from .polyalg import Poly, QuasiPoly, RationalFn
from .rootsys import LieDatum, as_weight
from .sparse import kernel


class UnsupportedType(ValueError):
    pass


class ExcludedCase(ValueError):
    pass


def log_derivative(u) -> RationalFn:
    """ln'(u) for a polynomial or quasi-polynomial u."""
    if isinstance(u, QuasiPoly):
        if u.is_zero():
            raise ZeroDivisionError("logarithmic derivative of zero")
        out = RationalFn.log_derivative(u.body)
        if u.exponent:
            out = out + RationalFn(Poly.const(u.exponent), Poly.x())
        return out
    if u.is_zero():
        raise ZeroDivisionError("logarithmic derivative of zero")
    return RationalFn.log_derivative(u)


@dataclass(frozen=True)
class Factor:
    """(d - f) with f = sum_k e_k ln'(u_k); ``parts`` holds (exponent, name)."""

    parts: tuple
    f: RationalFn

    def argument(self) -> str:
        num = [n if e == 1 else f"{n}^{e}" for e, n in self.parts if e > 0]
        den = [n if e == -1 else f"{n}^{-e}" for e, n in self.parts if e < 0]
        top = "*".join(num) or "1"
        return top + ("/" + "*".join(den) if len(den) == 1 else f"/({'*'.join(den)})" if den else "")


def expand(factors: Sequence[RationalFn]) -> list:
    """Coefficients c_0..c_n of (d - f_1)(d - f_2)...(d - f_n)."""
    coeffs = [RationalFn(1)]
    for f in reversed(list(factors)):
        out = [RationalFn(0) for _ in range(len(coeffs) + 1)]
        for k, c in enumerate(coeffs):
            out[k + 1] = out[k + 1] + c
            out[k] = out[k] + c.deriv() - f * c
        coeffs = out
    return coeffs


class ScalarDiffOp:
    def __init__(self, factors: Sequence[Factor]):
        self.factors = list(factors)
        self.coeffs = expand([fc.f for fc in self.factors])

    @property
    def order(self) -> int:
        return len(self.factors)

    def __eq__(self, other) -> bool:
        return isinstance(other, ScalarDiffOp) and self.coeffs == other.coeffs

    __hash__ = None

    def apply(self, p: Poly) -> RationalFn:
        out = RationalFn(0)
        d = p
        for c in self.coeffs:
            out = out + c * RationalFn(d)
            d = d.deriv()
        return out

    def polynomial_kernel(self, degree_bound: int) -> list:
        """Basis of polynomial solutions of degree <= degree_bound (exact)."""
        den = Poly.const(1)
        from .polyalg import gcd
        for c in self.coeffs:
            g = gcd(den, c.den)
            den = den * (c.den // g)
        images = []
        for m in range(degree_bound + 1):
            r = self.apply(Poly.monomial(m))
            images.append((r.num * (den // r.den)) if not r.is_zero() else Poly.const(0))
        height = max((p.degree for p in images), default=0) + 1
        rows = []
        for k in range(height):
            row = {m: p.coeffs[k] for m, p in enumerate(images) if k < len(p.coeffs) and p.coeffs[k]}
            if row:
                rows.append(row)
        return [Poly([v.get(m, 0) for m in range(degree_bound + 1)]) for v in kernel(rows, range(degree_bound + 1))]

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "factors": [{"argument": fc.argument(), "log_derivative": str(fc.f)} for fc in self.factors],
            "coefficients": [str(c) for c in self.coeffs],
        }


# -- T-functions and factor lists ------------------------------------------------------

def t_functions(lam: Sequence) -> list:
    """T_i = x^{lambda_i} (x - 1)^{delta_i1} for weights (lambda, omega_1) at z = (0, 1)."""
    out = []
    for i, c in enumerate(lam):
        body = Poly([-1, 1]) if i == 0 else Poly.const(1)
        out.append(QuasiPoly.make(c, body))
    return out


def _factor_specs(family: str, r: int) -> list:
    """Each factor as {name: exponent} over T1..Tr, y1..yr (y0 = 1)."""
    specs = []

    def T(coefs: dict) -> dict:
        return {f"T{i}": e for i, e in coefs.items() if e}

    def merge(*ds):
        out: dict = {}
        for d in ds:
            for k, v in d.items():
                out[k] = out.get(k, 0) + v
        return {k: v for k, v in out.items() if v}

    def y(j, e=1):
        return {f"y{j}": e} if j >= 1 else {}

    if family == "B":
        full = T({i: 2 for i in range(1, r)} | {r: 1})
        for j in range(1, r + 1):
            specs.append(merge(y(j - 1), full, y(j, -1), T({i: -1 for i in range(1, j)})))
        for j in range(r, 0, -1):
            specs.append(merge(y(j), T({i: 1 for i in range(1, j)}), y(j - 1, -1)))
    elif family == "C":
        full = T({i: 2 for i in range(1, r + 1)})
        for j in range(1, r):
            specs.append(merge(y(j - 1), full, y(j, -1), T({i: -1 for i in range(1, j)})))
        specs.append(merge(y(r - 1), full, y(r, -2), T({i: -1 for i in range(1, r)})))
        specs.append(T({i: 1 for i in range(1, r + 1)}))
        specs.append(merge(y(r, 2), T({i: 1 for i in range(1, r)}), y(r - 1, -1)))
        for j in range(r - 1, 0, -1):
            specs.append(merge(y(j), T({i: 1 for i in range(1, j)}), y(j - 1, -1)))
    else:
        raise UnsupportedType(f"no scalar operator for type {family}")
    return specs


def _order_key(name: str):
    return (name[0] != "T", int(name[1:]))


def build_operator(datum: LieDatum, lam: Sequence, y: Sequence, T: Sequence | None = None) -> ScalarDiffOp:
    if datum.family not in ("B", "C"):
        raise UnsupportedType(f"no scalar operator for type {datum.family}")
    r = datum.rank
    if len(y) != r:
        raise ValueError(f"expected {r} functions, got {len(y)}")
    T = t_functions(as_weight(lam)) if T is None else list(T)
    logs = {f"T{i + 1}": log_derivative(t) for i, t in enumerate(T)}
    logs.update({f"y{i + 1}": log_derivative(u) for i, u in enumerate(y)})
    factors = []
    for spec in _factor_specs(datum.family, r):
        f = RationalFn(0)
        for name, e in spec.items():
            f = f + logs[name] * e
        parts = tuple((e, name) for name, e in sorted(spec.items(), key=lambda kv: _order_key(kv[0])))
        factors.append(Factor(parts, f))
    return ScalarDiffOp(factors)


# -- exponent profiles --------------------------------------------------------------------

def exponent_profile(datum: LieDatum, lam: Sequence, label) -> tuple:
    label = LengthLabel.parse(label) if not isinstance(label, LengthLabel) else label
    _check_label(datum, label)
    lam = as_weight(lam)
    r, l = datum.rank, label.value
    S = lambda i, j: sum(lam[i - 1:j], Fraction(0))  # noqa: E731  lambda_i + ... + lambda_j
    if datum.family == "B":
        if l == r:
            raise ExcludedCase("type B at length r has no operator identity")
        if l < r:
            return tuple(S(i, l) + l + 1 - i if i <= l else Fraction(0) for i in range(1, r + 1))
        k = 2 * r - l
        mid = 2 * S(k + 1, r - 1) + lam[r - 1]
        return tuple(S(i, k) + mid + 2 * r - k - i if i <= k else mid + 2 * r - 2 * k - 1
                     for i in range(1, r + 1))
    if datum.family == "C":
        if l < r:
            return tuple(S(i, l) + l + 1 - i if i <= l else Fraction(0) for i in range(1, r + 1))
        if l == r:
            return tuple(S(i, r - 1) + 2 * lam[r - 1] + r + 2 - i for i in range(1, r)) + (lam[r - 1] + 1,)
        k = 2 * r - l - 1
        mid = 2 * S(k + 1, r)
        head = tuple(S(i, k) + mid + 2 * r + 1 - k - i for i in range(1, k + 1))
        body = tuple(mid + 2 * r - 2 * k for _ in range(k + 1, r))
        return head + body + (S(k + 1, r) + r - k,)
    raise UnsupportedType(f"no exponent profile for type {datum.family}")


def monomial_tuple(profile: Sequence) -> list:
    return [QuasiPoly.make(a, Poly.const(1)) for a in profile]


def operator_pair(datum: LieDatum, lam: Sequence, label) -> tuple:
    """(D_lambda(y), D_lambda(x^a(1), ..., x^a(r))) for the closed-form tuple y."""
    profile = exponent_profile(datum, lam, label)
    if not is_admissible(datum, lam, LengthLabel.parse(label) if not isinstance(label, LengthLabel) else label):
        raise NotAdmissible(f"length {label} is not admissible for {tuple(lam)}")
    y = solve_closed_form(datum, lam, label)
    return build_operator(datum, lam, list(y.polys)), build_operator(datum, lam, monomial_tuple(profile))


def check_operator_identity(datum: LieDatum, lam: Sequence, label) -> bool:
    lhs, rhs = operator_pair(datum, lam, label)
    return lhs == rhs


def kernel_degree_bound(datum: LieDatum, lam: Sequence, label) -> int:
    """Generous degree bound for the polynomial kernel: every exponent of D(x^a) is below it."""
    prof = exponent_profile(datum, lam, label)
    return int(2 * (sum(as_weight(lam)) + sum(prof)) + 2 * datum.rank + 4)


def kernel_is_polynomial(datum: LieDatum, lam: Sequence, label) -> bool:
    """The kernel of D_lambda(y) is spanned by polynomials: polynomial solutions fill the whole order."""
    lhs, _ = operator_pair(datum, lam, label)
    return len(lhs.polynomial_kernel(kernel_degree_bound(datum, lam, label))) == lhs.order
