"""Admissible lengths, the decomposition of V_lam (x) V_{omega_1}, and explicit solutions.

All solutions are for the data (lam, omega_1) at z = (0, 1).  A length label
is a nonnegative integer, plus a bar flag used only for the second length
r-1 in type D.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .bae import CriticalTuple
from .polyalg import Poly
from .rootsys import LieDatum, add, as_weight, is_dominant, sub, weyl_dim


class NotAdmissible(ValueError):
    pass


class FormulaDegeneracy(ZeroDivisionError):
    """A denominator of an explicit formula vanishes."""


@dataclass(frozen=True, order=True)
class LengthLabel:
    value: int
    bar: bool = False

    def __str__(self):
        return f"{self.value}bar" if self.bar else str(self.value)

    @classmethod
    def parse(cls, text) -> "LengthLabel":
        if isinstance(text, LengthLabel):
            return text
        if isinstance(text, int):
            return cls(text)
        s = str(text).strip().lower()
        bar = s.endswith("bar")
        if bar:
            s = s[:-3]
        try:
            v = int(s)
        except ValueError:
            raise ValueError(f"bad length label {text!r}") from None
        if v < 0:
            raise ValueError(f"negative length {v}")
        return cls(v, bar)

    def to_json(self) -> dict:
        return {"length": self.value, "bar": self.bar}


def _check_label(datum: LieDatum, label: LengthLabel) -> None:
    r = datum.rank
    top = {"B": 2 * r, "C": 2 * r - 1, "D": 2 * r - 2}[datum.family]
    if label.bar and not (datum.family == "D" and label.value == r - 1):
        raise NotAdmissible(f"bar label only exists for D at length {r - 1}")
    if label.value > top:
        raise NotAdmissible(f"length {label.value} exceeds {top} for {datum.name}")


def lvector(datum: LieDatum, label: LengthLabel) -> tuple:
    """The l-vector with the given length label (admissible or not)."""
    _check_label(datum, label)
    r, l, fam = datum.rank, label.value, datum.family
    if fam == "D":
        if label.bar:
            return (1,) * (r - 2) + (0, 1)
        if l <= r - 1:
            return (1,) * l + (0,) * (r - l)
        if l == r:
            return (1,) * r
        k = 2 * r - l - 2
        return (1,) * k + (2,) * (r - 2 - k) + (1, 1)
    if l <= r:
        return (1,) * l + (0,) * (r - l)
    if fam == "B":
        k = 2 * r - l
        return (1,) * k + (2,) * (r - k)
    k = 2 * r - l - 1
    return (1,) * k + (2,) * (r - 1 - k) + (1,)


def all_labels(datum: LieDatum) -> list:
    r = datum.rank
    top = {"B": 2 * r, "C": 2 * r - 1, "D": 2 * r - 2}[datum.family]
    out = [LengthLabel(v) for v in range(top + 1)]
    if datum.family == "D":
        out.insert(r, LengthLabel(r - 1, True))
    return out


def is_admissible(datum: LieDatum, lam: Sequence, label: LengthLabel) -> bool:
    lam = as_weight(lam)
    r, l, fam = datum.rank, label.value, datum.family
    try:
        _check_label(datum, label)
    except NotAdmissible:
        return False
    L = lambda i: lam[i - 1]  # noqa: E731
    if l == 0 and not label.bar:
        return True
    if fam == "B":
        if l <= r:
            return L(l) > 0
        if l == r + 1:
            return L(r) > 1
        return L(2 * r - l + 1) > 0
    if fam == "C":
        if l <= r:
            return L(l) > 0
        return L(2 * r - l) > 0
    if label.bar:
        return L(r) > 0
    if l <= r - 1:
        return L(l) > 0
    if l == r:
        return L(r - 1) > 0 and L(r) > 0
    return L(2 * r - l - 1) > 0


def admissible_lengths(datum: LieDatum, lam: Sequence) -> list:
    if not is_dominant(lam):
        raise ValueError(f"lambda must be dominant integral, got {tuple(lam)}")
    return [lb for lb in all_labels(datum) if is_admissible(datum, lam, lb)]


def summand_weight(datum: LieDatum, lam: Sequence, label: LengthLabel) -> tuple:
    """mu = lam + omega_1 - alpha(l)."""
    return sub(add(lam, datum.fundamental(1)), datum.alpha_of(lvector(datum, label)))


def decompose(datum: LieDatum, lam: Sequence) -> list:
    """[(mu, label)] for the summands V_mu of V_lam (x) V_{omega_1}."""
    return [(summand_weight(datum, lam, lb), lb) for lb in admissible_lengths(datum, lam)]


def vector_dim(datum: LieDatum) -> int:
    return 2 * datum.rank + 1 if datum.family == "B" else 2 * datum.rank


def decomposition_dims_ok(datum: LieDatum, lam: Sequence) -> bool:
    total = sum(weyl_dim(datum, mu) for mu, _ in decompose(datum, lam))
    return total == weyl_dim(datum, lam) * vector_dim(datum)


# -- explicit formulas ------------------------------------------------------------

@dataclass
class ClosedFormSolution:
    """Linear roots c_j and quadratic (sum, product) data, keyed by 1-based index."""

    datum: LieDatum
    lam: tuple
    label: LengthLabel
    linear: dict = field(default_factory=dict)
    quadratic: dict = field(default_factory=dict)

    def polys(self) -> tuple:
        out = []
        for i in range(1, self.datum.rank + 1):
            if i in self.linear:
                out.append(Poly((-self.linear[i], 1)))
            elif i in self.quadratic:
                s, p = self.quadratic[i]
                out.append(Poly((p, -s, 1)))
            else:
                out.append(Poly.const(1))
        return tuple(out)

    def tuple(self) -> CriticalTuple:
        return CriticalTuple(self.polys(), self.label)


class _Eval:
    """Helpers over a fixed lam with denominator checking."""

    def __init__(self, lam: Sequence, where: str):
        self.lam = as_weight(lam)
        self.where = where

    def S(self, i: int, j: int) -> Fraction:
        return sum(self.lam[i - 1:j], Fraction(0)) if i <= j else Fraction(0)

    def ratio(self, num, den, what: str) -> Fraction:
        if den == 0:
            raise FormulaDegeneracy(f"{self.where}: vanishing denominator in {what}")
        return Fraction(num) / den

    def fac(self, x, what: str) -> Fraction:
        """(x - 1) / x."""
        return self.ratio(x - 1, x, what)

    def prod(self, rng, term: Callable[[int], Fraction]) -> Fraction:
        out = Fraction(1)
        for i in rng:
            out *= term(i)
        return out


def _short_linear(ev: _Eval, l: int) -> dict:
    """c_j = prod_{i<=j} (S(i,l)+l-i)/(S(i,l)+l-i+1), j = 1..l."""
    out, acc = {}, Fraction(1)
    for j in range(1, l + 1):
        acc *= ev.fac(ev.S(j, l) + l - j + 1, f"c_{j}")
        out[j] = acc
    return out


def _solve_B(ev: _Eval, r: int, l: int, sol: ClosedFormSolution) -> None:
    S, L = ev.S, lambda i: ev.lam[i - 1]
    if l < r:
        sol.linear = _short_linear(ev, l)
        return
    if l == r:
        acc = Fraction(1)
        for j in range(1, r + 1):
            acc *= ev.fac(S(j, r - 1) + L(r) / 2 + r - j + 1, f"c_{j}")
            sol.linear[j] = acc
        return
    k0 = 2 * r - l
    P = lambda j: S(j, k0) + 2 * S(k0 + 1, r - 1) + L(r) + l - j  # noqa: E731
    Q = lambda j: S(k0 + 1, j) + 2 * S(j + 1, r - 1) + L(r) + l - j - 1  # noqa: E731
    R = lambda i: S(k0 + 1, r - i) + l - r - i  # noqa: E731
    U = 2 * S(k0 + 1, r - 1) + L(r) + 2 * l - 2 * r
    fP = lambda j: ev.fac(P(j), f"P_{j}")  # noqa: E731
    fQ = lambda j: ev.fac(Q(j), f"Q_{j}")  # noqa: E731
    fR = lambda i: ev.fac(R(i), f"R_{i}")  # noqa: E731
    acc = Fraction(1)
    for k in range(1, k0 + 1):
        acc *= fP(k)
        sol.linear[k] = acc
    pc = acc
    q_all = ev.prod(range(k0 + 1, r), fQ)
    for k in range(k0 + 1, r + 1):
        q_k = ev.prod(range(k0 + 1, k), fQ)
        r_k = ev.prod(range(1, r - k + 1), fR)
        prod = pc * pc * q_all * q_k * r_k * ev.ratio(U - 3, U - 1, "U")
        total = ev.ratio(U - 3, U - 2, "U") * pc * (q_k + q_all * r_k)
        sol.quadratic[k] = (total, prod)


def _solve_C(ev: _Eval, r: int, l: int, sol: ClosedFormSolution) -> None:
    S, L = ev.S, lambda i: ev.lam[i - 1]
    if l < r:
        sol.linear = _short_linear(ev, l)
        return
    if l == r:
        acc = Fraction(1)
        for j in range(1, r):
            acc *= ev.fac(S(j, r - 1) + 2 * L(r) + r + 2 - j, f"c_{j}")
            sol.linear[j] = acc
        sol.linear[r] = ev.ratio(L(r), L(r) + 1, "c_r") * acc
        return
    m = 2 * r - l
    P = lambda i: S(i, m - 1) + 2 * S(m, r) + l + 2 - i  # noqa: E731
    Q = lambda i: S(m, i) + 2 * S(i + 1, r) + l - i + 1  # noqa: E731
    R = lambda i: S(m, r + 1 - i) + l + 2 - i - r  # noqa: E731
    W = lambda i: S(m, i) + l + i + 1 - 2 * r  # noqa: E731
    V = 2 * S(m, r) + 2 * l - 2 * r
    fP = lambda i: ev.fac(P(i), f"P_{i}")  # noqa: E731
    fQ = lambda i: ev.fac(Q(i), f"Q_{i}")  # noqa: E731
    fR = lambda i: ev.fac(R(i), f"R_{i}")  # noqa: E731
    fW = lambda i: ev.fac(W(i), f"W_{i}")  # noqa: E731
    acc = Fraction(1)
    for j in range(1, m):
        acc *= fP(j)
        sol.linear[j] = acc
    pc = acc
    q_all = ev.prod(range(m, r + 1), fQ)
    sol.linear[r] = pc * q_all
    for k in range(m, r):
        q_k = ev.prod(range(m, k), fQ)
        prod = pc * pc * q_k * q_all * ev.prod(range(1, r + 2 - k), fR)
        inner = (ev.ratio(V, V + 1, "V") + ev.ratio(V + 2, V + 1, "V")
                 * ev.prod(range(k, r + 1), fQ) * ev.prod(range(k, r + 1), fW))
        sol.quadratic[k] = (pc * q_k * inner, prod)


def _solve_D(ev: _Eval, r: int, label: LengthLabel, sol: ClosedFormSolution) -> None:
    S, L = ev.S, lambda i: ev.lam[i - 1]
    l = label.value
    if label.bar:
        acc = Fraction(1)
        for j in range(1, r - 1):
            acc *= ev.fac(S(j, r - 2) + L(r) + r - j, f"c_{j}")
            sol.linear[j] = acc
        sol.linear[r] = ev.ratio(L(r), L(r) + 1, "c_r") * acc
        return
    if l < r:
        sol.linear = _short_linear(ev, l)
        return
    if l == r:
        acc = Fraction(1)
        for j in range(1, r - 1):
            acc *= ev.fac(S(j, r) + r + 1 - j, f"c_{j}")
            sol.linear[j] = acc
        sol.linear[r - 1] = ev.ratio(L(r - 1), L(r - 1) + 1, "c_{r-1}") * acc
        sol.linear[r] = ev.ratio(L(r), L(r) + 1, "c_r") * acc
        return
    m = 2 * r - 1 - l
    tail = L(r - 1) + L(r)
    P = lambda i: S(i, m - 1) + 2 * S(m, r - 2) + tail + l + 1 - i  # noqa: E731
    Q = lambda i: S(m, i) + 2 * S(i + 1, r - 2) + tail + l - i  # noqa: E731
    W = lambda i: S(m, i) + l + i + 2 - 2 * r  # noqa: E731
    X = S(m, r - 2) + L(r - 1) + l - r + 1
    Y = S(m, r - 2) + L(r) + l - r + 1
    V = 2 * S(m, r - 2) + tail + 2 * l - 2 * r
    fP = lambda i: ev.fac(P(i), f"P_{i}")  # noqa: E731
    fQ = lambda i: ev.fac(Q(i), f"Q_{i}")  # noqa: E731
    fW = lambda i: ev.fac(W(i), f"W_{i}")  # noqa: E731
    fX, fY = ev.fac(X, "X"), ev.fac(Y, "Y")
    acc = Fraction(1)
    for j in range(1, m):
        acc *= fP(j)
        sol.linear[j] = acc
    pc = acc
    q_all = ev.prod(range(m, r - 1), fQ)
    sol.linear[r - 1] = pc * q_all * fX
    sol.linear[r] = pc * q_all * fY
    for k in range(m, r - 1):
        q_k = ev.prod(range(m, k), fQ)
        w_k = ev.prod(range(k, r - 1), fW)
        prod = pc * pc * q_all * q_k * w_k * fX * fY
        inner = (ev.ratio(V, V + 1, "V") + ev.ratio(V + 2, V + 1, "V")
                 * ev.prod(range(k, r - 1), fQ) * fX * fY * w_k)
        sol.quadratic[k] = (pc * q_k * inner, prod)


def closed_form_data(datum: LieDatum, lam: Sequence, label) -> ClosedFormSolution:
    label = LengthLabel.parse(label)
    lam = as_weight(lam)
    if len(lam) != datum.rank:
        raise ValueError(f"lambda has {len(lam)} entries, expected {datum.rank}")
    if not is_dominant(lam):
        raise ValueError(f"lambda must be dominant integral, got {tuple(lam)}")
    if not is_admissible(datum, lam, label):
        raise NotAdmissible(f"length {label} is not admissible for {datum.name}, lambda={tuple(map(str, lam))}")
    sol = ClosedFormSolution(datum, lam, label)
    ev = _Eval(lam, f"{datum.name} l={label}")
    r = datum.rank
    if label.value == 0:
        return sol
    if datum.family == "B":
        _solve_B(ev, r, label.value, sol)
    elif datum.family == "C":
        _solve_C(ev, r, label.value, sol)
    else:
        _solve_D(ev, r, label, sol)
    return sol


def solve_closed_form(datum: LieDatum, lam: Sequence, label) -> CriticalTuple:
    sol = closed_form_data(datum, lam, label)
    t = sol.tuple()
    assert t.lvec == lvector(datum, sol.label), (t.lvec, lvector(datum, sol.label))
    return t


# -- recursion identities in terms of theta (type B, lengths r+1..2r) -------------------

@dataclass(frozen=True)
class IdentityCheck:
    name: str
    k: int
    holds: bool
    lhs: Fraction
    rhs: Fraction


@dataclass
class RegressionReport:
    lam: tuple
    label: LengthLabel
    theta: tuple
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.holds for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.holds]


class ThetaFormsB:
    """c_k, a_k b_k and a_k + b_k of type B as functions of the bottom weight theta.

    ``printed=True`` evaluates a_k + b_k in its commonly quoted form: prefactor
    (2T + 2r + 1)/(2T + 2r) with T = theta_1 + ... + theta_{r-1}, and a constant
    2r - k in the last product.  That form violates the recursion.  The default
    carries theta_r in the prefactor and 2r - j in the j-th factor.
    """

    def __init__(self, r: int, theta: Sequence, printed: bool = False):
        self.r = r
        self.th = as_weight(theta)
        self.printed = printed
        self.ev = _Eval(self.th, f"B{r} theta-form")

    def T(self, j: int) -> Fraction:
        return self.ev.S(1, j)

    def c(self, k: int) -> Fraction:
        if k == 0:
            return Fraction(1)
        return self.ev.prod(range(1, k + 1), lambda j: self.ev.ratio(self.T(j) + j + 1, self.T(j) + j, "c"))

    def _top(self) -> Fraction:
        return 2 * self.T(self.r - 1) + self.th[self.r - 1]

    def ab(self, k: int) -> Fraction:
        r, th, ev = self.r, self.th, self.ev
        top = self._top()
        tail = lambda i: self.T(r - 1) + ev.S(r + 1 - i, r) + r + i  # noqa: E731
        return (ev.ratio(top + 2 * r + 1, top + 2 * r - 1, "ab") * self.c(r - 1) * self.c(k - 1)
                * ev.prod(range(1, r - k + 1), lambda i: ev.ratio(tail(i), tail(i) - 1, "ab")))

    def sum(self, k: int) -> Fraction:
        r, th, ev = self.r, self.th, self.ev
        base = 2 * self.T(r - 1) + (0 if self.printed else th[r - 1])
        pref = ev.ratio(base + 2 * r + 1, base + 2 * r, "sum")
        p1 = ev.prod(range(k, r), lambda j: ev.ratio(self.T(j) + j + 1, self.T(j) + j, "sum"))
        mid = lambda j: self.T(j) + 2 * ev.S(j + 1, r - 1) + th[r - 1] + 2 * r - (k if self.printed else j)  # noqa: E731
        p2 = ev.prod(range(k, r), lambda j: ev.ratio(mid(j), mid(j) - 1, "sum"))
        return pref * self.c(k - 1) * (1 + p1 * p2)

    def A(self, k: int) -> Fraction:
        """First-weight coordinate governing the step in direction k."""
        r = self.r
        if k == r:
            return self._top() + 2 * r - 2
        return self.T(k) + 2 * self.ev.S(k + 1, r - 1) + self.th[r - 1] + 2 * r - k - 2


def theta_of(datum: LieDatum, lam: Sequence, label: LengthLabel) -> tuple:
    """Bottom weight of the descent chain for type B, lengths r+1..2r."""
    from .rootsys import shifted_word
    r, l = datum.rank, label.value
    word = tuple(range(1, r)) + (r,) + tuple(range(r - 1, 2 * r - l, -1))
    return shifted_word(datum, word, lam)


def closed_form_symbolic_regression(datum: LieDatum, lam: Sequence, label, *,
                                    printed: bool = False) -> RegressionReport:
    """Check the theta-form recursion identities and their agreement with the final formulas."""
    label = LengthLabel.parse(label)
    r, l = datum.rank, label.value
    if datum.family != "B" or l <= r:
        raise ValueError("regression covers type B lengths r+1..2r")
    sol = closed_form_data(datum, lam, label)
    th = theta_of(datum, lam, label)
    f = ThetaFormsB(r, th, printed)
    checks = []

    def record(name, k, lhs, rhs):
        checks.append(IdentityCheck(name, k, lhs == rhs, lhs, rhs))

    k0 = 2 * r - l
    A = f.A(r)
    record("base a_r b_r", r, f.ab(r), (A + 3) / (A + 1) * f.c(r - 1) ** 2)
    record("base a_r + b_r", r, f.sum(r), 2 * (A + 3) / (A + 2) * f.c(r - 1))
    for k in range(max(k0, 1), r):
        A = f.A(k)
        ck, cp = f.c(k), f.c(k - 1)
        abk, sk, ab1, s1 = f.ab(k), f.sum(k), f.ab(k + 1), f.sum(k + 1)
        record("constant term", k, (A + 1) * ck * abk, (A + 2) * cp * ab1)
        record("x^2 coefficient", k, (A + 1) * (sk + ck) + 2 * ck, (A + 2) * (s1 + cp))
        record("x coefficient", k, (A + 1) * (ck * sk + abk) + ck * sk - abk, (A + 2) * (cp * s1 + ab1))
    for j in range(1, k0 + 1):
        record("c agrees", j, f.c(j), sol.linear[j])
    for k in range(k0 + 1, r + 1):
        s, p = sol.quadratic[k]
        record("ab agrees", k, f.ab(k), p)
        record("sum agrees", k, f.sum(k), s)
    return RegressionReport(as_weight(lam), label, th, checks)
