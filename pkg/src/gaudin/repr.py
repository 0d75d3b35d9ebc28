"""Matrix representations, Casimir tensors, Gaudin Hamiltonians and Bethe vectors.

Irreducible modules are realized inside tensor powers of the vector
representation, so only weights with integral epsilon-coordinates are
reachable (no spin representations).  Every module keeps its highest weight
vector at basis index 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product as iproduct
from typing import Sequence

import mpmath

from .bae import BAEInstance, CriticalTuple, casimir_eigenvalue, gaudin_eigenvalue
from .closedform import admissible_lengths, solve_closed_form, summand_weight
from .polyalg import Poly
from .quadfield import QuadTower, quadratic_roots
from .rootsys import LieDatum, as_weight, bilinear, casimir_value, is_dominant, to_epsilon, weyl_dim
from .sparse import (
    EchelonBasis,
    SparseMatrix,
    commutator,
    kernel,
    kron_all,
    rank,
    vec_add,
    vec_is_zero,
    vec_kron,
    vec_scale,
)


class NotReachable(ValueError):
    pass


class BoundExceeded(ValueError):
    pass


@dataclass
class MatrixRep:
    datum: LieDatum
    E: list
    F: list
    H: list
    weights: list
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def highest_weight(self) -> tuple:
        return self.weights[0]

    def root_vector(self, kind: str, word: tuple) -> SparseMatrix:
        """Nested commutator [X_{w_k}, [..., [X_{w_2}, X_{w_1}]]] for X = E or F."""
        key = (kind, word)
        if key not in self._cache:
            gens = self.E if kind == "E" else self.F
            m = gens[word[0] - 1]
            for j in word[1:]:
                m = commutator(gens[j - 1], m)
            self._cache[key] = m
        return self._cache[key]

    def generator(self, spec: tuple) -> SparseMatrix:
        kind, arg = spec
        if kind == "H":
            return self.H[arg - 1]
        return self.root_vector(kind, arg)

    def chevalley_ok(self) -> bool:
        r = self.datum.rank
        a = self.datum.cartan
        for i in range(r):
            for j in range(r):
                want = self.H[i] if i == j else SparseMatrix(self.dim)
                if commutator(self.E[i], self.F[j]) != want:
                    return False
                if commutator(self.H[i], self.E[j]) != self.E[j].scale(a[i][j]):
                    return False
                if commutator(self.H[i], self.F[j]) != self.F[j].scale(-a[i][j]):
                    return False
                if not commutator(self.H[i], self.H[j]).is_zero():
                    return False
        return True

    def serre_ok(self) -> bool:
        a = self.datum.cartan
        r = self.datum.rank
        for i in range(r):
            for j in range(r):
                if i == j:
                    continue
                for gens in (self.E, self.F):
                    m = gens[j]
                    for _ in range(1 - a[i][j]):
                        m = commutator(gens[i], m)
                    if not m.is_zero():
                        return False
        return True


# -- vector representation ----------------------------------------------------------

def vector_rep(datum: LieDatum) -> MatrixRep:
    r, fam = datum.rank, datum.family
    n = 2 * r + 1 if fam == "B" else 2 * r

    def idx(k: int) -> int:
        """Basis position of e_k, k in {1..r, 0 (B only), -r..-1}."""
        if k > 0:
            return k - 1
        if k == 0:
            return r
        return n + k  # -1 -> n-1, -r -> n-r

    def unit(entries):
        return SparseMatrix.from_entries(n, n, [(idx(a), idx(b), Fraction(c)) for a, b, c in entries])

    E, F = [], []
    for i in range(1, r):
        m = unit([(i, i + 1, 1), (-(i + 1), -i, -1)])
        E.append(m)
        F.append(m.transpose())
    if fam == "B":
        m = unit([(r, 0, 1), (0, -r, -1)])
        E.append(m)
        F.append(m.transpose().scale(2))
    elif fam == "C":
        m = unit([(r, -r, 1)])
        E.append(m)
        F.append(m.transpose())
    else:
        m = unit([(r - 1, -r, 1), (r, -(r - 1), -1)])
        E.append(m)
        F.append(m.transpose())
    H = [commutator(e, f) for e, f in zip(E, F)]
    weights = [tuple(h[k, k] for h in H) for k in range(n)]
    return MatrixRep(datum, E, F, H, [as_weight(w) for w in weights], name=f"V_omega1({datum.name})")


def trivial_rep(datum: LieDatum) -> MatrixRep:
    z = [SparseMatrix(1) for _ in range(datum.rank)]
    return MatrixRep(datum, list(z), list(z), list(z), [datum.zero], name="trivial")


# -- invariant form and Casimir data ----------------------------------------------------

class LieForm:
    """Dual-basis data for the invariant form normalized by (alpha_i, alpha_j) = d_i a_ij."""

    def __init__(self, datum: LieDatum):
        self.datum = datum
        V = vector_rep(datum)
        self.vector = V
        r = datum.rank
        tr = lambda m: sum(m.diagonal(), Fraction(0))  # noqa: E731
        d1 = datum.symmetrizers[0]
        self.kappa = Fraction(2, d1) / tr(V.H[0] @ V.H[0])
        self.h_gram = [[self.kappa * tr(V.H[i] @ V.H[j]) for j in range(r)] for i in range(r)]
        want = [[Fraction(datum.cartan[i][j], datum.symmetrizers[j]) for j in range(r)] for i in range(r)]
        if self.h_gram != want:
            raise AssertionError("trace form does not match the Cartan normalization")
        from .rootsys import _inverse
        self.h_gram_inv = _inverse(self.h_gram)
        self.words = self._root_words(V)
        self.norms = {w: self.kappa * tr(V.root_vector("E", w) @ V.root_vector("F", w)) for w in self.words}

    def _root_words(self, V: MatrixRep) -> list:
        r = self.datum.rank
        seen = {}
        frontier = []
        for i in range(1, r + 1):
            root = tuple(int(j == i) for j in range(1, r + 1))
            seen[root] = (i,)
            frontier.append((root, (i,)))
        while frontier:
            nxt = []
            for root, word in frontier:
                for j in range(1, r + 1):
                    new = tuple(c + (k == j - 1) for k, c in enumerate(root))
                    if new in seen:
                        continue
                    w2 = word + (j,)
                    if not V.root_vector("E", w2).is_zero():
                        seen[new] = w2
                        nxt.append((new, w2))
            frontier = nxt
        return list(seen.values())

    def terms(self) -> list:
        """Omega = sum coef * X (x) Y, as (coef, X spec, Y spec)."""
        r = self.datum.rank
        out = []
        for i in range(r):
            for j in range(r):
                c = self.h_gram_inv[i][j]
                if c:
                    out.append((c, ("H", i + 1), ("H", j + 1)))
        for w in self.words:
            c = 1 / self.norms[w]
            out.append((c, ("E", w), ("F", w)))
            out.append((c, ("F", w), ("E", w)))
        return out


@lru_cache(maxsize=None)
def lie_form(datum: LieDatum) -> LieForm:
    return LieForm(datum)


def casimir_element(rep: MatrixRep) -> SparseMatrix:
    out = SparseMatrix(rep.dim)
    for c, x, y in lie_form(rep.datum).terms():
        out = out + (rep.generator(x) @ rep.generator(y)).scale(c)
    return out


def casimir_tensor(datum: LieDatum, a: MatrixRep, b: MatrixRep) -> SparseMatrix:
    if not (a.datum == b.datum == datum):
        raise ValueError("representations of different Lie algebras")
    out = SparseMatrix(a.dim * b.dim)
    for c, x, y in lie_form(a.datum).terms():
        out = out + kron_all([a.generator(x), b.generator(y)]).scale(c)
    return out


# -- tensor products -------------------------------------------------------------------

class TensorModule:
    def __init__(self, factors: Sequence[MatrixRep]):
        self.factors = list(factors)
        if len({f.datum for f in self.factors}) != 1:
            raise ValueError("factors over different Lie algebras")
        self.datum = self.factors[0].datum
        self.dims = [f.dim for f in self.factors]
        self.dim = 1
        for d in self.dims:
            self.dim *= d
        self._cache: dict = {}

    def embed(self, m: SparseMatrix, k: int) -> SparseMatrix:
        mats = [SparseMatrix.identity(d) for d in self.dims]
        mats[k] = m
        return kron_all(mats)

    def delta(self, spec: tuple) -> SparseMatrix:
        if spec not in self._cache:
            out = SparseMatrix(self.dim)
            for k, f in enumerate(self.factors):
                out = out + self.embed(f.generator(spec), k)
            self._cache[spec] = out
        return self._cache[spec]

    def E(self, i: int) -> SparseMatrix:
        return self.delta(("E", (i,)))

    def F(self, i: int) -> SparseMatrix:
        return self.delta(("F", (i,)))

    def H(self, i: int) -> SparseMatrix:
        return self.delta(("H", i))

    def generators(self) -> list:
        r = self.datum.rank
        return [g(i) for i in range(1, r + 1) for g in (self.E, self.F, self.H)]

    @cached_property
    def weights(self) -> list:
        out = [self.datum.zero]
        for f in self.factors:
            out = [tuple(a + b for a, b in zip(u, v)) for u in out for v in f.weights]
        return out

    def weight_space(self, mu: Sequence) -> list:
        mu = as_weight(mu)
        return [k for k, w in enumerate(self.weights) if w == mu]

    def singular_basis(self, mu: Sequence) -> list:
        cols = self.weight_space(mu)
        if not cols:
            return []
        colset = set(cols)
        rows = []
        for i in range(1, self.datum.rank + 1):
            for row in self.E(i).rows.values():
                rr = {c: x for c, x in row.items() if c in colset}
                if rr:
                    rows.append(rr)
        return kernel(rows, cols)

    def singular_dimension(self) -> int:
        doms = {w for w in self.weights if is_dominant(w)}
        return sum(len(self.singular_basis(mu)) for mu in doms)

    def omega(self, i: int, j: int) -> SparseMatrix:
        key = ("omega", i, j)
        if key not in self._cache:
            out = SparseMatrix(self.dim)
            fi, fj = self.factors[i], self.factors[j]
            for c, x, y in lie_form(self.datum).terms():
                mats = [SparseMatrix.identity(d) for d in self.dims]
                mats[i] = fi.generator(x)
                mats[j] = fj.generator(y)
                out = out + kron_all(mats).scale(c)
            self._cache[key] = out
        return self._cache[key]

    def casimir(self) -> SparseMatrix:
        out = SparseMatrix(self.dim)
        for c, x, y in lie_form(self.datum).terms():
            out = out + (self.delta(x) @ self.delta(y)).scale(c)
        return out


def tensor_module(factors: Sequence[MatrixRep]) -> TensorModule:
    return TensorModule(factors)


def gaudin_hamiltonians(module, z: Sequence) -> list:
    """H_i(z) = sum_{j != i} Omega^(i,j) / (z_i - z_j); ``module`` may be a list of MatrixRep."""
    if not isinstance(module, TensorModule):
        module = TensorModule(module)
    z = [Fraction(v) for v in z]
    n = len(module.factors)
    if len(z) != n or len(set(z)) != n:
        raise ValueError("need one pairwise distinct point per factor")
    out = []
    for i in range(n):
        h = SparseMatrix(module.dim)
        for j in range(n):
            if j != i:
                a, b = min(i, j), max(i, j)
                h = h + module.omega(a, b).scale(1 / (z[i] - z[j]))
        out.append(h)
    return out


def structural_checks(module: TensorModule, z: Sequence) -> dict:
    hs = gaudin_hamiltonians(module, z)
    total = SparseMatrix(module.dim)
    for h in hs:
        total = total + h
    commute = all(commutator(hs[i], hs[j]).is_zero()
                  for i in range(len(hs)) for j in range(i + 1, len(hs)))
    invariant = all(commutator(h, g).is_zero() for h in hs for g in module.generators())
    return {"commute": commute, "sum_zero": total.is_zero(), "g_invariant": invariant}


# -- irreducible modules inside tensor powers of the vector representation -----------------

def reach_degree(datum: LieDatum, lam: Sequence) -> int:
    eps = to_epsilon(datum, lam)
    if any(c.denominator != 1 for c in eps):
        raise NotReachable(f"{tuple(map(str, lam))} needs a spin representation")
    return int(sum(abs(c) for c in eps))


def build_irrep(datum: LieDatum, lam: Sequence, max_dim: int = 5000) -> MatrixRep:
    lam = as_weight(lam)
    if not is_dominant(lam):
        raise ValueError("highest weight must be dominant integral")
    m = reach_degree(datum, lam)
    if m == 0:
        return trivial_rep(datum)
    V = vector_rep(datum)
    if m == 1:
        return V
    if V.dim ** m > max_dim:
        raise BoundExceeded(f"V^{m} has dimension {V.dim ** m} > {max_dim}")
    W = TensorModule([V] * m)
    sing = W.singular_basis(lam)
    if not sing:
        raise NotReachable(f"no singular vector of weight {lam} in V^{m}")
    hv = sing[0]
    r = datum.rank
    bases: dict = {}
    members: list = []   # (weight, vector in W)

    def admit(mu, v) -> None:
        eb = bases.setdefault(mu, EchelonBasis())
        if eb.add(v):
            members.append((mu, v))

    admit(lam, hv)
    k = 0
    while k < len(members):
        mu, v = members[k]
        for i in range(1, r + 1):
            w = W.F(i).apply(v)
            if w:
                admit(tuple(a - b for a, b in zip(mu, datum.simple_root(i))), w)
        k += 1
    # member index inside each weight space -> global index
    local = {}
    for g, (mu, _) in enumerate(members):
        local.setdefault(mu, []).append(g)
    dim = len(members)

    def action(mat: SparseMatrix, shift) -> SparseMatrix:
        out = SparseMatrix(dim)
        for g, (mu, v) in enumerate(members):
            w = mat.apply(v)
            if not w:
                continue
            nu = tuple(a + b for a, b in zip(mu, shift))
            coords = bases[nu].coords(w)
            for loc, c in coords.items():
                out.add_entry(local[nu][loc], g, c)
        return out

    E = [action(W.E(i), datum.simple_root(i)) for i in range(1, r + 1)]
    F = [action(W.F(i), tuple(-c for c in datum.simple_root(i))) for i in range(1, r + 1)]
    H = [SparseMatrix.from_entries(dim, dim, [(g, g, mu[i]) for g, (mu, _) in enumerate(members)])
         for i in range(r)]
    rep = MatrixRep(datum, E, F, H, [mu for mu, _ in members],
                    name=f"V{tuple(int(c) for c in lam)}({datum.name})")
    if dim != weyl_dim(datum, lam):
        raise AssertionError(f"built module of dimension {dim}, expected {weyl_dim(datum, lam)}")
    return rep


def is_reachable(datum: LieDatum, lam: Sequence) -> bool:
    try:
        reach_degree(datum, lam)
        return True
    except NotReachable:
        return False


# -- weight function -----------------------------------------------------------------------

def weight_function(modules: Sequence[MatrixRep], z: Sequence, t: Sequence[Sequence]) -> dict:
    """The canonical weight function at points ``z`` and Bethe variables ``t`` grouped by color.

    Scalars may be Fractions, quadratic-tower elements or mpmath numbers.
    """
    n = len(modules)
    colors = [m + 1 for m, g in enumerate(t) for _ in g]
    tv = [x for g in t for x in g]
    l = len(tv)
    dims = [mod.dim for mod in modules]
    # Roots of orthogonal colors may coincide; the weight function is regular
    # there, so evaluate along t_b + b*eps and keep the eps^0 part.
    coincide = _snap_coincidences(tv)
    if coincide:
        cap = 2 * l + 1
        tv = [_Eps({0: x, 1: b + 1}, cap) for b, x in enumerate(tv)]

    def factor_vectors(s: int):
        mod, zs = modules[s], z[s]
        memo: dict = {}

        def K(a: int, rest: frozenset) -> dict:
            key = (a, rest)
            if key in memo:
                return memo[key]
            if not rest:
                d = tv[a] - zs
                if d == 0:
                    raise ZeroDivisionError(f"t_{a + 1} = z_{s + 1}")
                out = {0: 1 / d}
            else:
                out = {}
                for b in rest:
                    d = tv[a] - tv[b]
                    if d == 0:
                        raise ZeroDivisionError(f"t_{a + 1} = t_{b + 1}")
                    inner = mod.F[colors[b] - 1].apply(K(b, rest - {b}))
                    out = vec_add(out, inner, 1 / d)
            memo[key] = out
            return out

        def g(R: frozenset) -> dict:
            if not R:
                return {0: 1}
            out = {}
            for a in R:
                out = vec_add(out, mod.F[colors[a] - 1].apply(K(a, R - {a})))
            return out

        return g

    gs = [factor_vectors(s) for s in range(n)]
    total: dict = {}
    cache = [dict() for _ in range(n)]
    for assign in iproduct(range(n), repeat=l):
        parts = [frozenset(a for a in range(l) if assign[a] == s) for s in range(n)]
        vec = {0: 1}
        dim_so_far = 1
        for s, R in enumerate(parts):
            if R not in cache[s]:
                cache[s][R] = gs[s](R)
            vs = cache[s][R]
            if not vs:
                vec = {}
                break
            vec = vec_kron(vec, vs, dims[s])
            dim_so_far *= dims[s]
        if vec:
            total = vec_add(total, vec)
    if coincide:
        out = {}
        for k, x in total.items():
            if x.has_pole():
                raise ZeroDivisionError("weight function has a pole at these Bethe roots")
            c = x.c.get(0, 0)
            if c != 0:
                out[k] = c
        total = out
    return total


def _snap_coincidences(tv: list) -> bool:
    """Make numerically equal roots identical; report whether any two coincide."""
    hit = False
    for a in range(len(tv)):
        for b in range(a):
            x, y = tv[a], tv[b]
            if isinstance(x, (mpmath.mpf, mpmath.mpc)) or isinstance(y, (mpmath.mpf, mpmath.mpc)):
                if abs(x - y) <= mpmath.mpf(10) ** (-(mpmath.mp.dps * 3 // 4)) * max(1, abs(y)):
                    tv[a] = y
                    hit = True
            elif x == y:
                hit = True
    return hit


class _Eps:
    """Truncated Laurent series in eps; terms of degree >= cap are dropped."""

    __slots__ = ("c", "cap")

    def __init__(self, coeffs: dict, cap: int):
        self.cap = cap
        self.c = {k: v for k, v in coeffs.items() if k < cap and v != 0}

    def _lift(self, o):
        return o if isinstance(o, _Eps) else _Eps({0: o}, self.cap)

    def __add__(self, o):
        o = self._lift(o)
        out = dict(self.c)
        for k, v in o.c.items():
            out[k] = out.get(k, 0) + v
        return _Eps(out, min(self.cap, o.cap))

    __radd__ = __add__

    def __neg__(self):
        return _Eps({k: -v for k, v in self.c.items()}, self.cap)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        # absolute precision shrinks by the pole order of the other factor
        cap = min(self.cap + o.val(), o.cap + self.val())
        out: dict = {}
        for i, a in self.c.items():
            for j, b in o.c.items():
                if i + j < cap:
                    out[i + j] = out.get(i + j, 0) + a * b
        return _Eps(out, cap)

    __rmul__ = __mul__

    def val(self) -> int:
        return min(self.c) if self.c else self.cap

    def inverse(self):
        if not self.c:
            raise ZeroDivisionError("inverse of a series that vanishes to working precision")
        v = self.val()
        a0 = self.c[v]
        rel = self.cap - v  # relative precision
        u = {k - v: x / a0 for k, x in self.c.items()}  # 1 + ...
        inv = {0: 1}
        for n in range(1, rel):
            s = 0
            for k in range(1, n + 1):
                if k in u and (n - k) in inv:
                    s = s - u[k] * inv[n - k]
            inv[n] = s
        return _Eps({k - v: x / a0 for k, x in inv.items()}, rel - v)

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __rtruediv__(self, o):
        return self._lift(o) * self.inverse()

    def __eq__(self, o):
        if isinstance(o, _Eps):
            return (self - o).c == {}
        if o == 0:
            return not self.c
        return (self - o).c == {}

    __hash__ = None

    def has_pole(self) -> bool:
        return any(k < 0 for k in self.c)


# -- Bethe vectors ----------------------------------------------------------------------------

def _mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


def tuple_roots(y: Sequence[Poly], mode: str = "auto", tower: QuadTower | None = None):
    """Roots of each polynomial; returns (groups, scalar mode actually used)."""
    polys = list(y)
    if any(p.degree > 2 for p in polys):
        mode = "numeric"
    irr = 0
    for p in polys:
        if p.degree == 2:
            c, b, a = p.coeffs
            disc = b * b - 4 * a * c
            n, d = disc.numerator * disc.denominator, disc.denominator ** 2
            from math import isqrt
            if n < 0 or isqrt(n) ** 2 != n:
                irr += 1
    if mode == "auto":
        mode = "exact" if irr <= 2 else "numeric"
    groups = []
    if mode == "exact":
        tower = tower or QuadTower()
        for p in polys:
            if p.degree <= 0:
                groups.append([])
            elif p.degree == 1:
                groups.append([-p.coeffs[0]])
            else:
                roots = quadratic_roots(tower, -p.coeffs[1], p.coeffs[0])
                groups.append([x.rational() if x.is_rational() else x for x in roots])
    else:
        for p in polys:
            if p.degree <= 0:
                groups.append([])
            else:
                groups.append(list(mpmath.polyroots([_mp(c) for c in reversed(p.coeffs)],
                                                    maxsteps=200, extraprec=256)))
    return groups, mode


@dataclass
class BetheReport:
    label: object
    weight: tuple
    nonzero: bool
    singular: bool
    eigen: bool
    eigenvalue: Fraction
    casimir_value: Fraction | None
    mode: str
    vector: dict = field(repr=False, default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.nonzero and self.singular and self.eigen


def _vec_norm(v: dict):
    return max((abs(x) for x in v.values()), default=0)


def verify_bethe_vector(module, z: Sequence, y: CriticalTuple, weights: Sequence | None = None,
                        mode: str = "auto", tol="1e-25", label=None, precision: int = 128) -> BetheReport:
    """Nonzero, singular and eigenvector checks for the Bethe vector of ``y``.

    Rational or at most two irrational quadratic factors are handled exactly in
    ``mode="auto"``; otherwise the roots and the vector are computed with
    ``precision`` bits and the checks hold to relative tolerance ``tol``.
    """
    with mpmath.workprec(precision):
        return _verify(module, z, y, weights, mode, mpmath.mpf(tol), label)


def _verify(module, z, y, weights, mode, tol, label) -> BetheReport:
    if not isinstance(module, TensorModule):
        module = TensorModule(module)
    datum = module.datum
    if weights is None:
        weights = [f.highest_weight for f in module.factors]
    z = [Fraction(v) for v in z]
    groups, used = tuple_roots(y, mode)
    if used == "numeric":
        zz = [_mp(v) for v in z]
    else:
        zz = z
    omega = weight_function(module.factors, zz, groups)
    inst = BAEInstance(datum, tuple(weights), tuple(z), y.lvec)

    def small(v):
        if used == "numeric":
            return _vec_norm(v) <= tol * max(_vec_norm(omega), 1)
        return vec_is_zero(v)

    nonzero = bool(omega) and not (used == "numeric" and _vec_norm(omega) <= tol)
    singular = all(small(module.E(i).apply(omega)) for i in range(1, datum.rank + 1))
    hs = gaudin_hamiltonians(module, z)
    eig = gaudin_eigenvalue(inst, y, 1)
    evs = [gaudin_eigenvalue(inst, y, i + 1) for i in range(len(hs))]
    eigen = all(small(vec_add(h.apply(omega), omega, -(_mp(e) if used == "numeric" else e)))
                for h, e in zip(hs, evs))
    cas = None
    if len(module.factors) == 2 and z == [0, 1]:
        cas = casimir_eigenvalue(datum, weights[0], inst.final_weight, z[0], z[1])
    return BetheReport(label, inst.final_weight, nonzero, singular, eigen, eig, cas, used, omega)


@dataclass
class CompletenessReport:
    datum: LieDatum
    lam: tuple
    reports: list
    sing_dim: int
    rank: int
    eigenvalues: dict
    degenerate_pairs: list
    distinct: bool

    @property
    def ok(self) -> bool:
        return (all(r.ok for r in self.reports) and self.rank == self.sing_dim == len(self.reports)
                and self.distinct)


def completeness_check(datum: LieDatum, lam: Sequence, mode: str = "auto",
                       precision: int = 128) -> CompletenessReport:
    """Bethe vectors for every admissible length at z = (0, 1) versus Sing(V_lam (x) V_{omega_1})."""
    with mpmath.workprec(precision):
        return _completeness(datum, lam, mode, precision)


def _completeness(datum, lam, mode, precision) -> CompletenessReport:
    lam = as_weight(lam)
    Vl = build_irrep(datum, lam)
    V = vector_rep(datum)
    module = TensorModule([Vl, V])
    weights = (lam, datum.fundamental(1))
    reports = []
    for lb in admissible_lengths(datum, lam):
        y = solve_closed_form(datum, lam, lb)
        reports.append(verify_bethe_vector(module, (0, 1), y, weights, mode=mode, label=lb, precision=precision))
    sdim = module.singular_dimension()
    numeric = any(r.mode == "numeric" for r in reports)
    zero = (lambda x: abs(x) < mpmath.mpf("1e-20")) if numeric else None
    vecs = []
    for r in reports:
        v = r.vector
        if numeric:
            v = {k: (x.to_mp() if hasattr(x, "to_mp") else (_mp(x) if isinstance(x, Fraction) else x))
                 for k, x in v.items()}
        vecs.append(v)
    rk = _rank_mixed(vecs, zero)
    eig = {str(r.label): r.eigenvalue for r in reports}
    pairs = []
    labels = [r.label for r in reports]
    for a in range(len(reports)):
        for b in range(a + 1, len(reports)):
            if reports[a].eigenvalue == reports[b].eigenvalue:
                pairs.append((str(labels[a]), str(labels[b])))
    allowed = set()
    if datum.family == "D":
        r_ = datum.rank
        allowed = {(str(r_ - 1), f"{r_ - 1}bar")}
    distinct = all(p in allowed for p in pairs)
    return CompletenessReport(datum, lam, reports, sdim, rk, eig, pairs, distinct)


def _rank_mixed(vecs: list, zero) -> int:
    """Rank of vectors whose entries may live in different quadratic towers.

    Vectors of distinct weight are independent, so the rank is taken weight by
    weight, where every vector is compared only with vectors of the same support.
    """
    if zero is not None:
        return rank(vecs, zero)
    groups: dict = {}
    for v in vecs:
        key = min(v) if v else None
        groups.setdefault(key, []).append(v)
    total = 0
    for key, vs in groups.items():
        if key is None:
            continue
        if len(vs) == 1:
            total += 1
        else:
            total += rank(vs)
    return total
