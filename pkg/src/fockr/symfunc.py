"""Symmetric functions over exact scalars in Macdonald's parameters (sq, st).

Elements are graded coefficient maps ``partition -> scalar`` tagged with a
basis.  Power sums are the working basis: products are concatenations of
partitions and the Macdonald scalar product is diagonal there.  Monomial and
Macdonald P/Q bases are reached through per-weight transition tables.

Macdonald polynomials are produced by Gram-Schmidt on monomials, running
upward through reverse-lex order (a linear extension of dominance order).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import prod

from . import cache
from .params import ToroidalParams, eps, epsbar
from .partitions import (
    Partition, bracket, enumerate_partitions, mfact, setminus, subpartitions, union,
)
from .ratfunc import RatFunc

POWER, MONOMIAL, MACDONALD_P, MACDONALD_Q = "power-sum", "monomial", "macdonald-P", "macdonald-Q"
BASES = (POWER, MONOMIAL, MACDONALD_P, MACDONALD_Q)


@dataclass
class SymFunc:
    coeffs: dict
    basis: str = POWER
    params: ToroidalParams | None = None
    alphabet: str = "x"
    max_degree: int | None = None

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")
        self.coeffs = {k: c for k, c in self.coeffs.items() if not c.is_zero()}
        top = max((sum(k) for k in self.coeffs), default=0)
        if self.max_degree is None:
            self.max_degree = top
        elif top > self.max_degree:
            raise ValueError("coefficient above max_degree")

    def __getitem__(self, lam):
        return self.coeffs.get(lam, self._zero())

    def _zero(self):
        return (self.params.one if self.params else RatFunc.const(1)) * 0

    def to(self, basis: str) -> "SymFunc":
        return convert_basis(self, basis)

    def __add__(self, other: "SymFunc") -> "SymFunc":
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return SymFunc(out, self.basis, self.params or other.params, self.alphabet,
                       max(self.max_degree, other.max_degree))

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SymFunc":
        return SymFunc({k: v * c for k, v in self.coeffs.items()}, self.basis, self.params,
                       self.alphabet, self.max_degree)

    def __mul__(self, other):
        if not isinstance(other, SymFunc):
            return self.scale(other)
        return multiply(self, other)

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        a = self.to(POWER).coeffs
        b = other.to(POWER).coeffs
        return a.keys() == b.keys() and all(a[k] == b[k] for k in a)

    def homogeneous(self, n: int) -> dict:
        return {k: c for k, c in self.coeffs.items() if sum(k) == n}


@dataclass
class BiSymFunc:
    """Two-alphabet function: (lam, mu) -> coefficient of b_x(lam) b_y(mu)."""

    coeffs: dict
    bases: tuple = (POWER, POWER)
    params: ToroidalParams | None = None
    bound: int | None = None

    def __post_init__(self):
        self.coeffs = {k: c for k, c in self.coeffs.items() if not c.is_zero()}
        if self.bound is None:
            self.bound = max((max(sum(a), sum(b)) for a, b in self.coeffs), default=0)

    def bidegree(self, n: int, m: int | None = None) -> "BiSymFunc":
        m = n if m is None else m
        return BiSymFunc({k: c for k, c in self.coeffs.items()
                          if sum(k[0]) == n and sum(k[1]) == m}, self.bases, self.params, self.bound)

    def to(self, bx: str, by: str) -> "BiSymFunc":
        return convert_bi(self, bx, by)


# ---------------------------------------------------------------------------
# parameter-free transition p <-> m


@lru_cache(maxsize=None)
def _p_in_m(n: int) -> dict:
    """p_lam = sum_mu c[lam][mu] m_mu with integer c."""
    parts = enumerate_partitions(n)
    table = {}
    for lam in parts:
        row = {}
        for mu in parts:
            c = _count_assignments(lam, mu)
            if c:
                row[mu] = c
        table[lam] = row
    return table


@lru_cache(maxsize=None)
def _count_assignments(lam: Partition, target: tuple) -> int:
    # number of ways to distribute the parts of lam into bins summing to target
    if not lam:
        return 1 if not any(target) else 0
    first, rest = lam[0], lam[1:]
    total = 0
    for j, cap in enumerate(target):
        if cap >= first:
            new = list(target)
            new[j] -= first
            total += _count_assignments(rest, tuple(new))
    return total


@lru_cache(maxsize=None)
def _m_in_p(n: int) -> dict:
    parts = enumerate_partitions(n)
    fwd = _p_in_m(n)
    mat = [[Fraction(fwd[lam].get(mu, 0)) for mu in parts] for lam in parts]
    inv = _invert(mat)
    # p = A m  =>  m = A^{-1} p ; m_mu = sum_lam inv[mu][lam] p_lam
    return {mu: {lam: inv[i][j] for j, lam in enumerate(parts) if inv[i][j]}
            for i, mu in enumerate(parts)}


def _invert(mat):
    n = len(mat)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# Macdonald tables


def zee(lam: Partition) -> int:
    return mfact(lam) * prod(lam)


def power_norm(lam: Partition, params: ToroidalParams):
    """<p_lam, p_lam> = m(lam)! prod_a a (1 - sq^a)/(1 - st^a)."""
    key = ("pnorm", params.qt_key, lam)
    hit = _memo.get(key)
    if hit is None:
        hit = params.scalar(zee(lam))
        for a in lam:
            hit = hit * (1 - params.sq ** a) / (1 - params.st ** a)
        _memo[key] = hit
    return hit


_memo: dict = {}


@dataclass
class MacdonaldTable:
    """Weight-n transition data between P and power sums."""

    weight: int
    P_in_p: dict                 # P_lam = sum_rho P_in_p[lam][rho] p_rho
    P_in_m: dict                 # P_lam = sum_mu P_in_m[lam][mu] m_mu
    norm: dict                   # <P_lam, P_lam>
    p_in_P: dict = field(default_factory=dict)   # p_rho = sum_lam p_in_P[rho][lam] P_lam


def clear_memo() -> None:
    _memo.clear()


def macdonald_table(n: int, params: ToroidalParams) -> MacdonaldTable:
    key = ("mac", params.qt_key, n)
    tab = _memo.get(key)
    if tab is not None:
        return tab
    disk = params.is_symbolic and params.key[0] == "symbolic"
    P_in_m = None
    if disk:
        data = cache.load("macdonald", n)
        if data is not None:
            P_in_m = {tuple(row["lambda"]): {tuple(c["mu"]): RatFunc.from_json(c["value"])
                                             for c in row["coeffs"]} for row in data}
    if P_in_m is None:
        P_in_m = _gram_schmidt(n, params)
        if disk:
            cache.store("macdonald", n, [
                {"lambda": list(lam),
                 "coeffs": [{"mu": list(mu), "value": c.to_json()} for mu, c in row.items()]}
                for lam, row in P_in_m.items()])
    tab = _complete_table(n, P_in_m, params)
    _memo[key] = tab
    return tab


def _gram_schmidt(n: int, params: ToroidalParams) -> dict:
    parts = enumerate_partitions(n)
    m2p = _m_in_p(n)
    pn = {rho: power_norm(rho, params) for rho in parts}
    done: list = []            # (lam, P_lam in p basis, <P,P>)
    P_in_m = {}
    for lam in reversed(parts):
        m_lam = {rho: params.scalar(c) for rho, c in m2p[lam].items()}
        vec = dict(m_lam)
        mcoef = {lam: params.one}
        for mu, pvec, nrm in done:
            ip = _inner(m_lam, pvec, pn)
            if ip.is_zero():
                continue
            c = ip / nrm
            for rho, x in pvec.items():
                vec[rho] = vec.get(rho, params.one * 0) - c * x
            for nu, x in P_in_m[mu].items():
                mcoef[nu] = mcoef.get(nu, params.one * 0) - c * x
        vec = {k: x for k, x in vec.items() if not x.is_zero()}
        done.append((lam, vec, _inner(vec, vec, pn)))
        P_in_m[lam] = {k: x for k, x in mcoef.items() if not x.is_zero()}
    return {lam: P_in_m[lam] for lam in parts}


def _inner(f: dict, g: dict, pn: dict):
    total = None
    for k, x in f.items():
        y = g.get(k)
        if y is not None:
            term = x * y * pn[k]
            total = term if total is None else total + term
    if total is None:
        return next(iter(pn.values())) * 0
    return total


def _complete_table(n, P_in_m, params) -> MacdonaldTable:
    parts = enumerate_partitions(n)
    m2p = _m_in_p(n)
    pn = {rho: power_norm(rho, params) for rho in parts}
    zero = params.one * 0
    P_in_p = {}
    for lam in parts:
        vec = {}
        for mu, c in P_in_m[lam].items():
            for rho, x in m2p[mu].items():
                vec[rho] = vec.get(rho, zero) + c * x
        P_in_p[lam] = {k: x for k, x in vec.items() if not x.is_zero()}
    norm = {lam: _inner(P_in_p[lam], P_in_p[lam], pn) for lam in parts}
    # <p_rho, Q_lam> gives the P-coefficient of p_rho
    p_in_P = {rho: {} for rho in parts}
    for lam in parts:
        for rho, x in P_in_p[lam].items():
            p_in_P[rho][lam] = x * pn[rho] / norm[lam]
    return MacdonaldTable(n, P_in_p, P_in_m, norm, p_in_P)


def macdonald_P(lam: Partition, params: ToroidalParams, basis: str = MONOMIAL) -> SymFunc:
    return SymFunc({lam: params.one}, MACDONALD_P, params, max_degree=sum(lam)).to(basis)


def macdonald_Q(lam: Partition, params: ToroidalParams, basis: str = POWER) -> SymFunc:
    return SymFunc({lam: params.one}, MACDONALD_Q, params, max_degree=sum(lam)).to(basis)


# ---------------------------------------------------------------------------
# basis conversion


def _to_power(f: SymFunc) -> dict:
    if f.basis == POWER:
        return dict(f.coeffs)
    out: dict = {}
    params = f.params
    for lam, c in f.coeffs.items():
        n = sum(lam)
        if f.basis == MONOMIAL:
            row = {rho: params.scalar(x) if params else RatFunc.const(x)
                   for rho, x in _m_in_p(n)[lam].items()}
            scale = c
        else:
            tab = macdonald_table(n, params)
            row = tab.P_in_p[lam]
            scale = c if f.basis == MACDONALD_P else c / tab.norm[lam]
        for rho, x in row.items():
            out[rho] = out[rho] + scale * x if rho in out else scale * x
    return out


def _from_power(coeffs: dict, basis: str, params) -> dict:
    if basis == POWER:
        return dict(coeffs)
    out: dict = {}
    for rho, c in coeffs.items():
        n = sum(rho)
        if basis == MONOMIAL:
            row = _p_in_m(n)[rho]
        else:
            tab = macdonald_table(n, params)
            row = tab.p_in_P[rho]
            if basis == MACDONALD_Q:
                row = {lam: x * tab.norm[lam] for lam, x in row.items()}
        for lam, x in row.items():
            out[lam] = out[lam] + c * x if lam in out else c * x
    return out


def convert_basis(f: SymFunc, target: str) -> SymFunc:
    if f.basis == target:
        return f
    pc = _to_power(f)
    return SymFunc(_from_power(pc, target, f.params), target, f.params, f.alphabet, f.max_degree)


def convert_bi(F: BiSymFunc, bx: str, by: str) -> BiSymFunc:
    if F.bases == (bx, by):
        return F
    params = F.params
    # x side
    stage: dict = {}
    for (a, b), c in F.coeffs.items():
        row = _to_power(SymFunc({a: c}, F.bases[0], params))
        row = _from_power(row, bx, params)
        for k, x in row.items():
            key = (k, b)
            stage[key] = stage[key] + x if key in stage else x
    out: dict = {}
    for (a, b), c in stage.items():
        row = _to_power(SymFunc({b: c}, F.bases[1], params))
        row = _from_power(row, by, params)
        for k, x in row.items():
            key = (a, k)
            out[key] = out[key] + x if key in out else x
    return BiSymFunc(out, (bx, by), params, F.bound)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    a, b = _to_power(f), _to_power(g)
    out: dict = {}
    for k1, x in a.items():
        for k2, y in b.items():
            k = union(k1, k2)
            out[k] = out[k] + x * y if k in out else x * y
    res = SymFunc(out, POWER, f.params or g.params, f.alphabet, f.max_degree + g.max_degree)
    return res.to(f.basis)


# ---------------------------------------------------------------------------
# scalar product, plethysm, kernels


def scalar_product(f: SymFunc, g: SymFunc):
    if f.alphabet != g.alphabet:
        raise ValueError("scalar product needs a common alphabet")
    params = f.params or g.params
    a, b = _to_power(f), _to_power(g)
    pn = {k: power_norm(k, params) for k in a if k in b}
    return _inner(a, b, pn) if pn else params.one * 0


def plethystic_eval(f: SymFunc, delta) -> object:
    """Ring map p_r -> ((sq^r - 1)/(1 - st^r)) * delta(r)."""
    params = f.params
    images = {}
    total = params.one * 0
    for lam, c in _to_power(f).items():
        term = c
        for r in lam:
            img = images.get(r)
            if img is None:
                d = delta(r) if callable(delta) else delta[r]
                img = (params.sq ** r - 1) / (1 - params.st ** r) * d
                images[r] = img
            term = term * img
        total = total + term
    return total


def delta_prime(params: ToroidalParams):
    """r -> (1 - st^r)(sq^r - st^r) q^-r st^-r."""
    def d(r):
        return (1 - params.st ** r) * (params.sq ** r - params.st ** r) / (params.q ** r * params.st ** r)
    return d


def exp_series(g, maxdeg: int, one) -> dict:
    """Coefficients of exp(sum_r g(r) X_r) = sum_lam prod g / m(lam)! X_lam, |lam| <= maxdeg."""
    gv = {}
    out = {}
    for n in range(maxdeg + 1):
        for lam in enumerate_partitions(n):
            c = one / mfact(lam)
            for r in lam:
                if r not in gv:
                    gv[r] = g(r)
                c = c * gv[r]
            out[lam] = c
    return out


def kernel_series(kind: str, maxdeg: int, params: ToroidalParams):
    sq, st, q = params.sq, params.st, params.q
    if kind == "cauchy":
        g = lambda r: (1 - st ** r) / (r * (1 - sq ** r))
    elif kind == "modified":
        g = lambda r: -(q ** r) * (1 - st ** r) * (sq ** r - st ** r) / (r * (1 - sq ** r))
    elif kind == "psi-kernel":
        g = lambda r: (1 - st ** r) * (1 - sq ** r / st ** r) / (r * q ** r)
        return SymFunc(exp_series(g, maxdeg, params.one), POWER, params, max_degree=maxdeg)
    else:
        raise ValueError(f"unknown kernel {kind!r}")
    key = ("kernel", kind, params.qt_key, maxdeg)
    hit = _memo.get(key)
    if hit is None:
        hit = BiSymFunc({(lam, lam): c for lam, c in exp_series(g, maxdeg, params.one).items()},
                        (POWER, POWER), params, maxdeg)
        _memo[key] = hit
    return hit


def skew_Q_coeffs(lam: Partition, mu: Partition, params: ToroidalParams) -> SymFunc:
    """Q_{lam/mu} = sum_nu <Q_lam, P_mu P_nu> Q_nu, in the Q basis."""
    k = sum(lam) - sum(mu)
    if k < 0:
        return SymFunc({}, MACDONALD_Q, params, max_degree=0)
    Q_lam = macdonald_Q(lam, params, POWER)
    P_mu = macdonald_P(mu, params, POWER)
    out = {}
    for nu in enumerate_partitions(k):
        prodf = multiply(P_mu, macdonald_P(nu, params, POWER))
        out[nu] = scalar_product(Q_lam, prodf)
    return SymFunc(out, MACDONALD_Q, params, max_degree=k)


# ---------------------------------------------------------------------------
# Macdonald operators


def apply_macdonald_operator(f: SymFunc, which: str) -> SymFunc:
    params = f.params
    ev = eps if which == "E" else epsbar if which == "Ebar" else None
    if ev is None:
        raise ValueError(f"unknown operator {which!r}")
    g = f.to(MACDONALD_P)
    h = SymFunc({lam: c * ev(lam, params) for lam, c in g.coeffs.items()}, MACDONALD_P,
                params, f.alphabet, f.max_degree)
    return h.to(f.basis)


@dataclass
class GradedOperator:
    """Degree-preserving linear map stored as per-degree matrices in the power-sum basis."""

    matrices: dict          # n -> {lam: {rho: coeff}}  (image of p_lam)
    params: ToroidalParams
    max_degree: int

    def __call__(self, f: SymFunc) -> SymFunc:
        out: dict = {}
        for lam, c in _to_power(f).items():
            n = sum(lam)
            if n > self.max_degree:
                raise ValueError(f"operator built only up to degree {self.max_degree}")
            for rho, x in self.matrices[n][lam].items():
                out[rho] = out[rho] + c * x if rho in out else c * x
        return SymFunc(out, POWER, self.params, f.alphabet, f.max_degree).to(f.basis)


def vertex_zero_mode(create, annihilate, maxdeg: int, params: ToroidalParams, shift) -> GradedOperator:
    """z^0 mode of exp(sum_r A_r p_r z^r) exp(sum_r B_r d/dp_r z^-r), plus ``shift`` * identity.

    On p_lam the annihilation part gives sum over sub-multisets nu of lam of
    bracket(lam, nu) prod_{r in nu} B_r p_{lam minus nu}; the creation part then
    restores the degree with every kappa of weight |nu|.
    """
    A = exp_series(create, maxdeg, params.one)
    B = {}
    mats = {}
    for n in range(maxdeg + 1):
        mat = {}
        for lam in enumerate_partitions(n):
            row: dict = {}
            for nu in subpartitions(lam):
                bnu = B.get(nu)
                if bnu is None:
                    bnu = params.one
                    for r in nu:
                        bnu = bnu * annihilate(r)
                    B[nu] = bnu
                base = setminus(lam, nu)
                c0 = bnu * bracket(lam, nu)
                for kap in enumerate_partitions(sum(nu)):
                    key = union(base, kap)
                    x = c0 * A[kap]
                    row[key] = row[key] + x if key in row else x
            row[lam] = row[lam] + shift if lam in row else params.one * shift
            mat[lam] = {k: x for k, x in row.items() if not x.is_zero()}
        mats[n] = mat
    return GradedOperator(mats, params, maxdeg)


def pi_c_minus(r: int, params: ToroidalParams):
    """Image of c_{-r}: multiplication by this coefficient times p_r."""
    return (1 - params.q1 ** r) / (r * params.q ** r)


def pi_c_plus(r: int, params: ToroidalParams):
    """Image of c_r: this coefficient times d/dp_r."""
    return params.q ** r * (params.q ** r + params.one / params.q ** r) * (1 - params.q3 ** r)


def build_E_vertex(maxdeg: int, params: ToroidalParams) -> GradedOperator:
    """E = s pi(e0bar) - 1 from the vertex-operator form of e(z) at unit spectral parameter."""
    q = params.q
    create = lambda r: pi_c_minus(r, params)
    annihilate = lambda r: -pi_c_plus(r, params) / (q ** r + params.one / q ** r)
    return vertex_zero_mode(create, annihilate, maxdeg, params, -1)


def build_Ebar_vertex(maxdeg: int, params: ToroidalParams) -> GradedOperator:
    """Ebar = -s q^2 pi(f0bar) - 1 from the vertex-operator form of f(z)."""
    q = params.q
    create = lambda r: -(q ** r) * pi_c_minus(r, params)
    annihilate = lambda r: q ** r * pi_c_plus(r, params) / (q ** r + params.one / q ** r)
    return vertex_zero_mode(create, annihilate, maxdeg, params, -1)


def macdonald_operator_matrix(n: int, which: str, params: ToroidalParams) -> dict:
    """Diagonal construction of E or Ebar on degree n, as a p-basis matrix."""
    key = ("opmat", which, params.qt_key, n)
    hit = _memo.get(key)
    if hit is None:
        ev = eps if which == "E" else epsbar
        tab = macdonald_table(n, params)
        hit = {}
        for rho in enumerate_partitions(n):
            row: dict = {}
            for lam, c in tab.p_in_P[rho].items():
                e = c * ev(lam, params)
                for sig, x in tab.P_in_p[lam].items():
                    row[sig] = row[sig] + e * x if sig in row else e * x
            hit[rho] = {k: x for k, x in row.items() if not x.is_zero()}
        _memo[key] = hit
    return hit
