"""Cartan data and weights for the classical series B_r, C_r, D_r.

Weights are tuples of :class:`~fractions.Fraction` in fundamental-weight
coordinates, ``lam[i] = <lam, alpha_{i+1}^vee>``.  Indices passed to the public
functions (simple-root directions) are 1-based, as in the usual notation.

The invariant form is normalized so that ``(alpha_i, alpha_j) = d_i a_ij``
with relatively prime symmetrizers ``d_i``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Weight = tuple  # tuple[Fraction, ...]

MIN_RANK = {"B": 2, "C": 3, "D": 4}


class RootSystemError(ValueError):
    pass


def as_weight(coords: Iterable) -> Weight:
    return tuple(Fraction(c) for c in coords)


def _cartan(family: str, r: int) -> tuple[tuple[int, ...], ...]:
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2
    for i in range(r - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if family == "B":
        # alpha_r short: <alpha_{r-1}, alpha_r^vee> = -2
        a[r - 1][r - 2] = -2
    elif family == "C":
        a[r - 2][r - 1] = -2
    elif family == "D":
        a[r - 2][r - 1] = a[r - 1][r - 2] = 0
        a[r - 3][r - 1] = a[r - 1][r - 3] = -1
    return tuple(tuple(row) for row in a)


def _symmetrizers(family: str, r: int) -> tuple[int, ...]:
    if family == "B":
        return (2,) * (r - 1) + (1,)
    if family == "C":
        return (1,) * (r - 1) + (2,)
    return (1,) * r


def _inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


@dataclass(frozen=True)
class LieDatum:
    family: str
    rank: int
    cartan: tuple = field(init=False, repr=False, compare=False)
    symmetrizers: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        fam = self.family.upper()
        if fam not in MIN_RANK:
            raise RootSystemError(f"unsupported family {self.family!r}")
        if self.rank < MIN_RANK[fam]:
            raise RootSystemError(f"{fam}_{self.rank}: rank must be >= {MIN_RANK[fam]}")
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "cartan", _cartan(fam, self.rank))
        object.__setattr__(self, "symmetrizers", _symmetrizers(fam, self.rank))

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @cached_property
    def root_gram(self) -> tuple:
        """``(alpha_i, alpha_j) = d_i a_ij``."""
        d, a = self.symmetrizers, self.cartan
        return tuple(tuple(Fraction(d[i] * a[i][j]) for j in range(self.rank))
                     for i in range(self.rank))

    @cached_property
    def cartan_inverse(self) -> tuple:
        return tuple(tuple(row) for row in _inverse(self.cartan))

    @cached_property
    def weight_gram(self) -> tuple:
        """``(omega_i, omega_j)``, i.e. the matrix ``D A^{-1}``."""
        inv, d = self.cartan_inverse, self.symmetrizers
        return tuple(tuple(d[i] * inv[i][j] for j in range(self.rank))
                     for i in range(self.rank))

    def simple_root(self, i: int) -> Weight:
        """alpha_i in fundamental coordinates (column ``i`` of the Cartan matrix)."""
        self._check_index(i)
        return tuple(Fraction(self.cartan[j][i - 1]) for j in range(self.rank))

    def fundamental(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(Fraction(int(j == i - 1)) for j in range(self.rank))

    @property
    def rho(self) -> Weight:
        return (Fraction(1),) * self.rank

    @property
    def zero(self) -> Weight:
        return (Fraction(0),) * self.rank

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple root index {i} out of range 1..{self.rank}")

    def root_coords(self, lam: Sequence) -> tuple:
        """Coordinates of ``lam`` in the basis of simple roots."""
        inv = self.cartan_inverse
        return tuple(sum(inv[i][j] * lam[j] for j in range(self.rank))
                     for i in range(self.rank))

    def alpha_of(self, lvec: Sequence[int]) -> Weight:
        """alpha(l) = sum_i l_i alpha_i in fundamental coordinates."""
        a = self.cartan
        return tuple(Fraction(sum(a[j][i] * lvec[i] for i in range(self.rank)))
                     for j in range(self.rank))


def parse_datum(family: str, rank: int) -> LieDatum:
    return LieDatum(family, int(rank))


def add(u: Sequence, v: Sequence) -> Weight:
    return tuple(Fraction(a) + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Weight:
    return tuple(Fraction(a) - b for a, b in zip(u, v))


def scale(c, u: Sequence) -> Weight:
    return tuple(Fraction(c) * a for a in u)


def bilinear(datum: LieDatum, u: Sequence, v: Sequence) -> Fraction:
    """Invariant form on weights given in fundamental coordinates."""
    g = datum.weight_gram
    r = datum.rank
    return sum((Fraction(u[i]) * g[i][j] * v[j] for i in range(r) for j in range(r)
                if u[i] and v[j]), Fraction(0))


def casimir_value(datum: LieDatum, lam: Sequence) -> Fraction:
    """(lam + rho, lam + rho) - (rho, rho), the Casimir eigenvalue on V_lam."""
    return bilinear(datum, lam, add(lam, scale(2, datum.rho)))


def coroot_pairing(datum: LieDatum, lam: Sequence, i: int) -> Fraction:
    """<lam, alpha_i^vee>, computed through the form as a consistency check."""
    al = datum.simple_root(i)
    return 2 * bilinear(datum, lam, al) / bilinear(datum, al, al)


def is_integral(lam: Sequence) -> bool:
    return all(Fraction(c).denominator == 1 for c in lam)


def is_dominant(lam: Sequence) -> bool:
    return is_integral(lam) and all(c >= 0 for c in lam)


def dominates(datum: LieDatum, mu: Sequence, nu: Sequence) -> bool:
    """True iff ``mu - nu`` is a nonzero Z_{>=0}-combination of simple roots."""
    diff = datum.root_coords(sub(mu, nu))
    return (all(c.denominator == 1 and c >= 0 for c in diff)
            and any(c != 0 for c in diff))


def shifted_reflect(datum: LieDatum, i: int, lam: Sequence) -> Weight:
    """s_i . lam = s_i(lam + rho) - rho."""
    datum._check_index(i)
    lam = as_weight(lam)
    k = lam[i - 1] + 1
    return tuple(c - k * datum.cartan[j][i - 1] for j, c in enumerate(lam))


def shifted_word(datum: LieDatum, word: Sequence[int], lam: Sequence) -> Weight:
    """(s_{w_1} s_{w_2} ... s_{w_m}) . lam; the rightmost reflection acts first."""
    out = as_weight(lam)
    for i in reversed(tuple(word)):
        out = shifted_reflect(datum, i, out)
    return out


# -- epsilon realization, used only for positive roots / dimensions ----------

def _fund_to_eps(datum: LieDatum) -> list[list[Fraction]]:
    r, fam = datum.rank, datum.family
    half = Fraction(1, 2)
    rows = []
    for i in range(1, r + 1):
        if fam == "B" and i == r:
            rows.append([half] * r)
        elif fam == "D" and i == r - 1:
            rows.append([half] * (r - 1) + [-half])
        elif fam == "D" and i == r:
            rows.append([half] * r)
        else:
            rows.append([Fraction(1)] * i + [Fraction(0)] * (r - i))
    return rows


def to_epsilon(datum: LieDatum, lam: Sequence) -> tuple:
    rows = _fund_to_eps(datum)
    r = datum.rank
    return tuple(sum(Fraction(lam[i]) * rows[i][k] for i in range(r)) for k in range(r))


def _positive_roots_eps(datum: LieDatum) -> list[tuple]:
    r = datum.rank
    roots = []
    for i, j in combinations(range(r), 2):
        for sign in (-1, 1):
            v = [0] * r
            v[i], v[j] = 1, sign
            roots.append(tuple(v))
    for i in range(r):
        v = [0] * r
        if datum.family == "B":
            v[i] = 1
            roots.append(tuple(v))
        elif datum.family == "C":
            v[i] = 2
            roots.append(tuple(v))
    return roots


def positive_root_count(datum: LieDatum) -> int:
    return len(_positive_roots_eps(datum))


def weyl_dim(datum: LieDatum, lam: Sequence) -> int:
    if not is_dominant(lam):
        raise RootSystemError(f"weyl_dim needs a dominant integral weight, got {tuple(lam)}")
    lr = to_epsilon(datum, add(lam, datum.rho))
    rr = to_epsilon(datum, datum.rho)
    num = den = Fraction(1)
    for a in _positive_roots_eps(datum):
        num *= sum(x * y for x, y in zip(lr, a))
        den *= sum(x * y for x, y in zip(rr, a))
    out = num / den
    assert out.denominator == 1
    return int(out)


def format_weight(lam: Sequence) -> str:
    return "(" + ",".join(str(Fraction(c)) for c in lam) + ")"
