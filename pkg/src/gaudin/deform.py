"""Bethe vectors for V_lambda (x) V_omega1^{(x)N} at generic points by epsilon-deformation.

Points are z_0 = z and z_k = z + eps^{N+1-k} zt_k.  Roots attached to step k
are written t = z + eps^{N+1-k} tt; in the rescaled variables tt the Bethe
equations tend, as eps -> 0, to the 2-point equations of V_{mu_{k-1}} (x) V_omega1
at (0, zt_k), which are solved in closed form.  Newton continuation in eps
then tracks these seeds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import mpmath
import numpy as np

from .bae import BAEInstance
from .closedform import LengthLabel, admissible_lengths, lvector, solve_closed_form, summand_weight
from .repr import TensorModule, build_irrep, gaudin_hamiltonians, tuple_roots, vector_rep, weight_function
from .rootsys import LieDatum, as_weight, bilinear, casimir_value


class NewtonDivergence(ArithmeticError):
    def __init__(self, msg: str, last=None):
        super().__init__(msg)
        self.last = last


class PathCollision(ArithmeticError):
    pass


@dataclass
class DeformConfig:
    z_tilde: tuple | None = None
    eps_start: Fraction = Fraction(1, 10 ** 4)
    eps_stop: Fraction = Fraction(1, 10)
    eps_steps: int = 7
    base_point: Fraction = Fraction(0)
    tol: str = "1e-30"
    max_iter: int = 60
    precision: int = 128
    collision_tol: str = "1e-12"
    gap_threshold: str = "1e-6"

    def validate(self, N: int) -> tuple:
        zt = tuple(Fraction(v) for v in (self.z_tilde or range(1, N + 1)))
        if len(zt) != N:
            raise ValueError(f"need {N} values of z_tilde, got {len(zt)}")
        if len(set(zt)) != N or any(v == 0 for v in zt):
            raise ValueError("z_tilde must be distinct and nonzero")
        a, b = Fraction(self.eps_start), Fraction(self.eps_stop)
        if not (0 < a <= b < 1):
            raise ValueError("need 0 < eps_start <= eps_stop < 1")
        if self.eps_steps < 1 or self.max_iter < 1 or self.precision < 53:
            raise ValueError("eps_steps, max_iter must be positive and precision >= 53")
        if mpmath.mpf(self.tol) <= 0:
            raise ValueError("tolerance must be positive")
        return zt

    def schedule(self) -> list:
        """Geometric eps values from eps_start up to eps_stop, as exact rationals."""
        a, b = Fraction(self.eps_start), Fraction(self.eps_stop)
        n = self.eps_steps
        if n == 1 or a == b:
            return [a]
        out = []
        for i in range(n):
            v = float(a) * (float(b) / float(a)) ** (i / (n - 1))
            out.append(Fraction(f"{v:.4g}"))
        out[0], out[-1] = a, b
        return out


# -- admissible chains ----------------------------------------------------------------------

@dataclass
class AdmissibleChain:
    datum: LieDatum
    weights: tuple
    labels: tuple

    @property
    def N(self) -> int:
        return len(self.labels)

    @property
    def lvecs(self) -> tuple:
        return tuple(lvector(self.datum, lb) for lb in self.labels)

    def step_tuple(self, k: int):
        """Closed-form critical tuple of step k (1-based) at z = (0, 1)."""
        return solve_closed_form(self.datum, self.weights[k - 1], self.labels[k - 1])

    def step_roots(self, k: int) -> list:
        groups, _ = tuple_roots(self.step_tuple(k), "numeric")
        return [[mpmath.mpc(x) for x in g] for g in groups]

    def to_json(self) -> dict:
        return {"weights": [[str(c) for c in w] for w in self.weights],
                "labels": [str(lb) for lb in self.labels]}


def enumerate_chains(datum: LieDatum, lam: Sequence, N: int) -> list:
    if N < 0:
        raise ValueError("N must be nonnegative")
    chains = [((as_weight(lam),), ())]
    for _ in range(N):
        nxt = []
        for ws, lbs in chains:
            for lb in admissible_lengths(datum, ws[-1]):
                nxt.append((ws + (summand_weight(datum, ws[-1], lb),), lbs + (lb,)))
        chains = nxt
    return [AdmissibleChain(datum, ws, lbs) for ws, lbs in chains]


# -- rescaled Bethe equations ---------------------------------------------------------------

class RescaledSystem:
    """Bethe equations in the variables tt, each multiplied by eps^{N+1-k} of its step."""

    def __init__(self, chain: AdmissibleChain, zt: Sequence):
        self.chain = chain
        d = chain.datum
        self.datum = d
        self.N = chain.N
        self.zt = [mpmath.mpf(v.numerator) / v.denominator for v in map(Fraction, zt)]
        self.vars = []  # (step k, color b)
        for k, lv in enumerate(chain.lvecs, start=1):
            for b, m in enumerate(lv, start=1):
                self.vars.extend([(k, b)] * m)
        gram = d.root_gram
        self.gram = gram
        lam = chain.weights[0]
        w1 = d.fundamental(1)
        self.site_coef = [[bilinear(d, lam, d.simple_root(b)) for b in range(1, d.rank + 1)]]
        self.site_coef += [[bilinear(d, w1, d.simple_root(b)) for b in range(1, d.rank + 1)]] * self.N

    def seed(self) -> list:
        out = []
        for k in range(1, self.N + 1):
            roots = self.chain.step_roots(k)
            for b in range(1, self.datum.rank + 1):
                out.extend(x * self.zt[k - 1] for x in roots[b - 1])
        return out

    def _scale(self, k: int, s: int, eps):
        return eps ** (k - s)

    def residual(self, tt: Sequence, eps) -> list:
        out = []
        for v, (k, b) in enumerate(self.vars):
            x = tt[v]
            acc = -self.site_coef[0][b - 1] / x
            for s in range(1, self.N + 1):
                c = self.site_coef[s][b - 1]
                if c:
                    acc -= c / (x - self._scale(k, s, eps) * self.zt[s - 1])
            for u, (ku, c_) in enumerate(self.vars):
                g = self.gram[b - 1][c_ - 1]
                if u != v and g:
                    acc += g / (x - self._scale(k, ku, eps) * tt[u])
            out.append(acc)
        return out

    def jacobian(self, tt: Sequence, eps) -> mpmath.matrix:
        n = len(self.vars)
        J = mpmath.matrix(n, n)
        for v, (k, b) in enumerate(self.vars):
            x = tt[v]
            diag = self.site_coef[0][b - 1] / x ** 2
            for s in range(1, self.N + 1):
                c = self.site_coef[s][b - 1]
                if c:
                    diag += c / (x - self._scale(k, s, eps) * self.zt[s - 1]) ** 2
            for u, (ku, c_) in enumerate(self.vars):
                g = self.gram[b - 1][c_ - 1]
                if u != v and g:
                    e = self._scale(k, ku, eps)
                    D = (x - e * tt[u]) ** 2
                    diag -= g / D
                    J[v, u] += g * e / D
            J[v, v] += diag
        return J

    def actual_roots(self, tt: Sequence, eps, z=0) -> list:
        """Roots grouped by color, t = z + eps^{N+1-k} tt."""
        groups = [[] for _ in range(self.datum.rank)]
        for v, (k, b) in enumerate(self.vars):
            groups[b - 1].append(z + eps ** (self.N + 1 - k) * tt[v])
        return groups


@dataclass
class TrackResult:
    chain: AdmissibleChain
    eps: list
    tt: list                 # rescaled roots at each eps
    residuals: list          # final residual at each eps
    history: list            # Newton residual history at each eps
    quadratic: bool
    seed: list

    @property
    def final(self) -> list:
        return self.tt[-1]


def _newton(system: RescaledSystem, start: list, eps, tol, max_iter: int) -> tuple:
    x = list(start)
    hist = []
    for _ in range(max_iter):
        F = system.residual(x, eps)
        r = max(abs(f) for f in F) if F else mpmath.mpf(0)
        hist.append(r)
        if r < tol:
            return x, hist
        J = system.jacobian(x, eps)
        try:
            dx = mpmath.lu_solve(J, mpmath.matrix(F))
        except ZeroDivisionError as exc:
            raise NewtonDivergence("singular Jacobian", x) from exc
        x = [xi - dx[i] for i, xi in enumerate(x)]
    F = system.residual(x, eps)
    hist.append(max(abs(f) for f in F) if F else mpmath.mpf(0))
    if hist[-1] < tol:
        return x, hist
    raise NewtonDivergence(f"no convergence at eps={eps}: residual {mpmath.nstr(hist[-1], 5)}", x)


def _quadratic(hist: list, floor) -> bool:
    """Ratio test on the last three Newton steps above the precision floor."""
    pairs = [(a, b) for a, b in zip(hist, hist[1:]) if b > floor and a < 1]
    return all(b <= 10 ** 3 * a * a for a, b in pairs[-3:])


def seed_and_track(chain: AdmissibleChain, cfg: DeformConfig) -> TrackResult:
    zt = cfg.validate(chain.N)
    with mpmath.workprec(cfg.precision):
        system = RescaledSystem(chain, zt)
        tol = mpmath.mpf(cfg.tol)
        col = mpmath.mpf(cfg.collision_tol)
        x = seed = system.seed()
        floor = mpmath.mpf(2) ** (-cfg.precision + 20)
        out_eps, out_tt, out_res, out_hist = [], [], [], []
        quad = True
        for e in cfg.schedule():
            eps = mpmath.mpf(e.numerator) / e.denominator
            x, hist = _newton(system, x, eps, tol, cfg.max_iter)
            quad = quad and _quadratic(hist, floor)
            groups = system.actual_roots(x, eps)
            for g in groups:
                for a, b in itertools.combinations(g, 2):
                    if abs(a - b) <= col * max(1, abs(a)):
                        raise PathCollision(f"two roots of one color merge at eps={e}")
            out_eps.append(e)
            out_tt.append(x)
            out_res.append(hist[-1])
            out_hist.append(hist)
        return TrackResult(chain, out_eps, out_tt, out_res, out_hist, quad, seed)


# -- generic completeness ----------------------------------------------------------------------

def points(zt: Sequence, eps: Fraction, z: Fraction = Fraction(0)) -> list:
    N = len(zt)
    return [Fraction(z)] + [Fraction(z) + Fraction(eps) ** (N + 1 - k) * Fraction(zt[k - 1]) for k in range(1, N + 1)]


def two_point_value(datum: LieDatum, chain: AdmissibleChain, k: int, zt_k) -> Fraction:
    """Eigenvalue of the second-site Hamiltonian of V_{mu_{k-1}} (x) V_omega1 at (0, zt_k) on v_{mu_k}."""
    c = lambda w: casimir_value(datum, w)  # noqa: E731
    mu0, mu1 = chain.weights[k - 1], chain.weights[k]
    return (c(mu1) - c(mu0) - c(datum.fundamental(1))) / (2 * Fraction(zt_k))


@dataclass
class GenericReport:
    datum: LieDatum
    lam: tuple
    N: int
    eps: Fraction
    chain_count: int
    sing_dim: int
    gram_rank: int
    singular_ok: bool
    eigen_ok: bool
    spectra: list
    min_gap: object
    scaled_errors: list      # per chain, per k: relative deviation of eps^{N+1-k} E_k from the 2-point value
    degenerate_pairs: list
    residuals: list = field(default_factory=list)

    def ok(self, rel: float = 0.01, gap=None) -> bool:
        gap = mpmath.mpf("1e-6") if gap is None else mpmath.mpf(gap)
        spectra_ok = self.min_gap > gap or (self.datum.family == "D" and self.chain_count > 1)
        return (self.gram_rank == self.sing_dim == self.chain_count and self.singular_ok and self.eigen_ok
                and spectra_ok and all(e <= rel for row in self.scaled_errors for e in row))


def _normalize(v: dict) -> dict:
    n = mpmath.sqrt(sum(abs(x) ** 2 for x in v.values()))
    return {k: x / n for k, x in v.items()}


def _inner(u: dict, v: dict):
    return sum(mpmath.conj(x) * v[k] for k, x in u.items() if k in v)


def generic_completeness_report(datum: LieDatum, lam: Sequence, N: int, cfg: DeformConfig | None = None,
                                at_eps: Fraction | None = None) -> GenericReport:
    """Track every chain, evaluate Bethe vectors at ``at_eps`` (default: last schedule value)."""
    cfg = cfg or DeformConfig()
    zt = cfg.validate(N)
    lam = as_weight(lam)
    chains = enumerate_chains(datum, lam, N)
    module = TensorModule([build_irrep(datum, lam)] + [vector_rep(datum)] * N)
    sdim = module.singular_dimension()
    tracks = [seed_and_track(ch, cfg) for ch in chains]
    eps = Fraction(at_eps) if at_eps is not None else tracks[0].eps[-1] if tracks else cfg.schedule()[-1]
    z = points(zt, eps, cfg.base_point)
    hs = gaudin_hamiltonians(module, z)
    with mpmath.workprec(cfg.precision):
        tol = mpmath.mpf(cfg.tol) * 10 ** 8
        eps_mp = mpmath.mpf(eps.numerator) / eps.denominator
        zb = mpmath.mpf(cfg.base_point.numerator) / cfg.base_point.denominator
        zz = [mpmath.mpf(v.numerator) / v.denominator for v in z]
        vecs, spectra, errs, residuals = [], [], [], []
        sing_ok = eig_ok = True
        for tr in tracks:
            if eps in tr.eps:
                tt = tr.tt[tr.eps.index(eps)]
            else:
                system = RescaledSystem(tr.chain, zt)
                tt, _ = _newton(system, tr.final, eps_mp, mpmath.mpf(cfg.tol), cfg.max_iter)
            system = RescaledSystem(tr.chain, zt)
            residuals.append(max((abs(f) for f in system.residual(tt, eps_mp)), default=mpmath.mpf(0)))
            groups = system.actual_roots(tt, eps_mp, zb)
            w = _normalize(weight_function(module.factors, zz, groups))
            vecs.append(w)
            defect = max((abs(x) for i in range(1, datum.rank + 1) for x in module.E(i).apply(w).values()),
                         default=0)
            joint, spread = [], 0
            for h in hs:
                hw = h.apply(w)
                E = _inner(w, hw)
                spread = max(spread, max((abs(hw.get(k, 0) - E * w.get(k, 0)) for k in set(hw) | set(w)), default=0))
                joint.append(E)
            # roots carry a relative error near the Newton tolerance; the Hamiltonians scale like eps^-N
            scale = max([mpmath.mpf(1)] + [abs(E) for E in joint])
            sing_ok = sing_ok and defect <= tol * scale
            eig_ok = eig_ok and spread <= tol * scale
            spectra.append(joint)
            row = []
            for k in range(1, N + 1):
                target = two_point_value(datum, tr.chain, k, zt[k - 1])
                scaled = joint[k] * eps_mp ** (N + 1 - k)
                tgt = mpmath.mpf(target.numerator) / target.denominator
                row.append(abs(scaled - tgt) / max(1, abs(tgt)))
            errs.append(row)
        n = len(vecs)
        G = mpmath.matrix(n, n)
        for a in range(n):
            for b in range(n):
                G[a, b] = _inner(vecs[a], vecs[b])
        if n:
            sv = mpmath.svd_c(G, compute_uv=False)
            top = max(abs(s) for s in sv)
            grank = sum(1 for s in sv if abs(s) > top * mpmath.mpf("1e-20"))
        else:
            grank = 0
        gaps, pairs = [], []
        for a, b in itertools.combinations(range(n), 2):
            g = max(abs(x - y) for x, y in zip(spectra[a], spectra[b]))
            gaps.append(g)
            if g <= mpmath.mpf(cfg.gap_threshold):
                pairs.append((a, b))
        min_gap = min(gaps) if gaps else mpmath.inf
    return GenericReport(datum, lam, N, eps, len(chains), sdim, grank, sing_ok, eig_ok,
                         spectra, min_gap, errs, pairs, residuals)


# -- uniqueness by random-start Newton ------------------------------------------------------------
#
# Newton runs on the Bethe equations in polynomial form: for every color b,
# y_b divides x(x-1)[(a_b,a_b)/2 y_b'' P_b + y_b' sum_c (a_b,a_c) y_c' P_bc]
# - ((lam,a_b)(x-1) + (w1,a_b) x) y_b' P_b, with P_b the product of the y_c over
# colors c linked to b.  Unknowns are the non-leading coefficients of the y_b,
# so relabeling of same-color roots is quotiented out.  Limits where a root
# sits at 0 or 1, repeats, or is shared with a linked color are not solutions
# of the Bethe equations (they have poles there) and are counted as degenerate.


@dataclass
class UniquenessReport:
    datum: LieDatum
    lam: tuple
    label: LengthLabel
    starts: int
    converged: int
    matched: int
    degenerate: int
    unmatched: list

    @property
    def ok(self) -> bool:
        # some labels have tiny basins; a start that never lands is not a counterexample
        return not self.unmatched


def _pmul(a, b):
    out = np.zeros((a.shape[0], a.shape[1] + b.shape[1] - 1), dtype=complex)
    for i in range(a.shape[1]):
        out[:, i:i + b.shape[1]] += a[:, i:i + 1] * b
    return out


def _pder(a):
    if a.shape[1] == 1:
        return np.zeros_like(a)
    return a[:, 1:] * np.arange(1, a.shape[1])


def _padd(a, b):
    L = max(a.shape[1], b.shape[1])
    return np.pad(a, ((0, 0), (0, L - a.shape[1]))) + np.pad(b, ((0, 0), (0, L - b.shape[1])))


def _prem_monic(a, m):
    """Remainder of a modulo the monic m (batched, coefficients lowest degree first)."""
    a = a.copy()
    dm = m.shape[1] - 1
    for k in range(a.shape[1] - 1, dm - 1, -1):
        a[:, k - dm:k + 1] -= a[:, k:k + 1] * m
    return a[:, :dm]


class _BAE:
    def __init__(self, datum: LieDatum, lam: Sequence, lvec: Sequence[int]):
        r = datum.rank
        self.lvec = list(lvec)
        self.gram = np.array([[float(x) for x in row] for row in datum.root_gram])
        w1 = datum.fundamental(1)
        self.c0 = [float(bilinear(datum, lam, datum.simple_root(b + 1))) for b in range(r)]
        self.c1 = [float(bilinear(datum, w1, datum.simple_root(b + 1))) for b in range(r)]
        self.cols = [b for b in range(r) if lvec[b] > 0]
        self.colors = [b for b in range(r) for _ in range(lvec[b])]
        self.n = len(self.colors)

    def links(self, b: int) -> list:
        return [c for c in self.cols if c != b and self.gram[b][c] != 0]

    def split(self, C):
        ys, off = {}, 0
        for b in self.cols:
            m = self.lvec[b]
            ys[b] = np.concatenate([C[:, off:off + m], np.ones((C.shape[0], 1))], axis=1)
            off += m
        return ys

    def poly_residual(self, C):
        S = C.shape[0]
        ys = self.split(C)
        one = np.ones((S, 1), dtype=complex)
        xx1 = np.tile(np.array([0, -1, 1], dtype=complex), (S, 1))
        out = []
        for b in self.cols:
            yb, link = ys[b], self.links(b)
            P = one
            for c in link:
                P = _pmul(P, ys[c])
            term = self.gram[b][b] / 2 * _pmul(_pder(_pder(yb)), P)
            for c in link:
                Q = one
                for c2 in link:
                    if c2 != c:
                        Q = _pmul(Q, ys[c2])
                term = _padd(term, self.gram[b][c] * _pmul(_pmul(_pder(yb), _pder(ys[c])), Q))
            lin = np.tile(np.array([self.c0[b], -(self.c0[b] + self.c1[b])], dtype=complex), (S, 1))
            N = _padd(_pmul(xx1, term), _pmul(lin, _pmul(_pder(yb), P)))
            out.append(_prem_monic(N, yb))
        return np.concatenate(out, axis=1)

    def residual(self, T):
        """Bethe equations at roots T (batched)."""
        G = self.gram[np.ix_(self.colors, self.colors)]
        np.fill_diagonal(G, 0.0)
        D = T[:, :, None] - T[:, None, :]
        D = np.where(np.eye(self.n, dtype=bool), 1.0, D)
        c0 = np.array([self.c0[b] for b in self.colors])
        c1 = np.array([self.c1[b] for b in self.colors])
        return -c0 / T - c1 / (T - 1) + np.sum(G / D, axis=2), D, G, c0, c1

    def root_newton(self, T, steps: int = 8):
        for _ in range(steps):
            R, D, G, c0, c1 = self.residual(T)
            Q = G / D ** 2
            J = Q.copy()
            idx = np.arange(self.n)
            J[:, idx, idx] = c0 / T ** 2 + c1 / (T - 1) ** 2 - Q.sum(axis=2)
            for s in range(T.shape[0]):
                try:
                    T[s] = T[s] - np.linalg.solve(J[s], R[s])
                except np.linalg.LinAlgError:
                    T[s] = np.nan
        return T

    def coeffs_of_roots(self, T):
        parts, off = [], 0
        for b in self.cols:
            m = self.lvec[b]
            co = np.array([np.polynomial.polynomial.polyfromroots(row[off:off + m]) for row in T])
            parts.append(co[:, :-1])
            off += m
        return np.concatenate(parts, axis=1)

    def roots_of_coeffs(self, C):
        T = np.full((C.shape[0], self.n), np.nan + 0j)
        off = 0
        for b in self.cols:
            m = self.lvec[b]
            for s in range(C.shape[0]):
                c = C[s, off:off + m]
                if np.all(np.isfinite(c)):
                    T[s, off:off + m] = np.polynomial.polynomial.polyroots(np.concatenate([c, [1]]))
            off += m
        return T


def newton_uniqueness(datum: LieDatum, lam: Sequence, label, starts: int = 200, seed: int = 0,
                      iters: int = 80, tol: float = 1e-8, center: complex = 0.5,
                      spread: float = 1.0) -> UniquenessReport:
    """Random complex starts; every converged Bethe solution must be the closed-form root set."""
    label = LengthLabel.parse(label) if not isinstance(label, LengthLabel) else label
    lam = as_weight(lam)
    lvec = lvector(datum, label)
    if sum(lvec) == 0:
        return UniquenessReport(datum, lam, label, starts, starts, starts, 0, [])
    sys_ = _BAE(datum, lam, lvec)
    n = sys_.n
    rng = np.random.default_rng(seed)
    T0 = center + spread * (rng.normal(size=(starts, n)) + 1j * rng.normal(size=(starts, n)))
    C = sys_.coeffs_of_roots(T0)
    with np.errstate(all="ignore"):
        for _ in range(iters):
            F0 = sys_.poly_residual(C)
            J = np.empty((starts, n, n), dtype=complex)
            for k in range(n):
                h = 1e-7 * (1 + np.abs(C[:, k]))
                Cp = C.copy()
                Cp[:, k] += h
                J[:, :, k] = (sys_.poly_residual(Cp) - F0) / h[:, None]
            step = np.full_like(C, np.nan)
            ok = np.all(np.isfinite(J.reshape(starts, -1)), axis=1) & np.all(np.isfinite(F0), axis=1)
            for s in np.nonzero(ok)[0]:
                try:
                    step[s] = np.linalg.solve(J[s], F0[s])
                except np.linalg.LinAlgError:
                    pass
            C = C - step
        fres = np.max(np.abs(sys_.poly_residual(C)), axis=1)
        conv = np.isfinite(fres) & (fres < 1e-8 * (1 + np.max(np.abs(C), axis=1)))
        T = sys_.roots_of_coeffs(C)
        # separation from the points and between roots that meet in a denominator
        sep = np.full(starts, np.inf)
        for v in range(n):
            sep = np.minimum(sep, np.minimum(np.abs(T[:, v]), np.abs(T[:, v] - 1)))
            for u in range(v):
                if sys_.gram[sys_.colors[u]][sys_.colors[v]] != 0:
                    sep = np.minimum(sep, np.abs(T[:, v] - T[:, u]))
        genuine = conv & (sep > 1e-5)
        idx = np.nonzero(genuine)[0]
        if len(idx):
            T[idx] = sys_.root_newton(T[idx].copy())
        R = sys_.residual(T)[0]
        res = np.max(np.abs(R), axis=1)
    groups, _ = tuple_roots(solve_closed_form(datum, lam, label), "numeric")
    ref = [np.array([complex(x) for x in g]) for g in groups]
    matched, unmatched, solutions = 0, [], 0
    for b in idx:
        if not (np.isfinite(res[b]) and res[b] < 1e-9):
            continue  # polishing fails: a cluster collapsing onto a pole, not a Bethe solution
        solutions += 1
        good = True
        for c in range(datum.rank):
            if not good:
                break
            mine = np.array([T[b, v] for v in range(n) if sys_.colors[v] == c])
            if not len(mine):
                continue
            best = min(np.max(np.abs(mine[list(p)] - ref[c])) for p in itertools.permutations(range(len(mine))))
            good = best <= tol
        if good:
            matched += 1
        else:
            unmatched.append(T[b].tolist())
    return UniquenessReport(datum, lam, label, starts, int(conv.sum()), matched,
                            int(conv.sum()) - solutions, unmatched)
