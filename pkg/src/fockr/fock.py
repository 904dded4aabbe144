"""Fock modules of the Heisenberg algebra and the assembled R-matrix blocks.

Normalised generators (m(mu)! = prod_r m_r(mu)!):

    a_mu   = a_{mu_1} a_{mu_2} ... / m(mu)!
    a*_mu  = a_{-mu_1} a_{-mu_2} ... / m(mu)!

with the action on partition vectors

    a_r |mu>  = (m_r(mu)/r) |mu minus (r)>
    a_-r |mu> = q^r (1 - q1^r)(1 - q3^r) |mu + (r)>

so that [a_r, a_-s] = delta_{rs} q^r (1 - q1^r)(1 - q3^r)/r.  See
``h_action`` for the unsimplified h-mode formulas these are derived from.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .params import ToroidalParams, symbolic_params
from .partitions import (
    Partition, bracket, enumerate_pairs, intersect, is_subpartition,
    mfact, setminus, subpartitions, union,
)
from .ratfunc import scalar_from_json
from .symfunc import _memo
from .toroidal import rbar_coeffs

A_PLUS, A_MINUS = "a_plus_r", "a_minus_r"


@dataclass
class FockVector:
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coeffs = {k: c for k, c in self.coeffs.items() if not c.is_zero()}

    @classmethod
    def basis(cls, mu: Partition, params: ToroidalParams) -> "FockVector":
        return cls({mu: params.one})

    def __add__(self, other: "FockVector") -> "FockVector":
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return FockVector(out)

    def scale(self, c) -> "FockVector":
        return FockVector({k: x * c for k, x in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.coeffs.keys() == other.coeffs.keys() and all(
            self.coeffs[k] == other.coeffs[k] for k in self.coeffs)


@dataclass(frozen=True)
class NormalTerm:
    """coeff * a*_creation a_annihilation."""

    coeff: object
    creation: Partition
    annihilation: Partition


def creation_scalar(r: int, params: ToroidalParams):
    return params.q ** r * (1 - params.q1 ** r) * (1 - params.q3 ** r)


def heisenberg_action(kind: str, r: int, v: FockVector, params: ToroidalParams) -> FockVector:
    if r <= 0:
        raise ValueError("mode index must be positive")
    out: dict = {}
    if kind == A_PLUS:
        for mu, c in v.coeffs.items():
            m = mu.count(r)
            if m:
                k = setminus(mu, (r,))
                x = c * m / r
                out[k] = out[k] + x if k in out else x
    elif kind == A_MINUS:
        f = creation_scalar(r, params)
        for mu, c in v.coeffs.items():
            k = union(mu, (r,))
            out[k] = out[k] + c * f if k in out else c * f
    else:
        raise ValueError(f"unknown generator {kind!r}")
    return FockVector(out)


def h_action(kind: str, r: int, v: FockVector, params: ToroidalParams) -> FockVector:
    """Unnormalised modes: h_r |mu> = m_r(mu) (q^r - q^-r)/(r kappa_r) |mu - r>, h_-r |mu> = |mu + r>."""
    out: dict = {}
    if kind == A_PLUS:
        f = (params.q ** r - params.one / params.q ** r) / (r * params.kappa(r))
        for mu, c in v.coeffs.items():
            m = mu.count(r)
            if m:
                out[setminus(mu, (r,))] = c * f * m
    else:
        out = {union(mu, (r,)): c for mu, c in v.coeffs.items()}
    return FockVector(out)


def a_via_h(kind: str, r: int, v: FockVector, params: ToroidalParams) -> FockVector:
    """a_r = -q^r kappa_r/(1 - q2^r) h_r and a_-r = q^r kappa_r/(1 - q2^r) h_-r, unsimplified."""
    f = params.q ** r * params.kappa(r) / (1 - params.q2 ** r)
    return h_action(kind, r, v, params).scale(-f if kind == A_PLUS else f)


def apply_word(word, v: FockVector, params: ToroidalParams) -> FockVector:
    """Apply a list of (kind, r) from right to left (the last entry acts first)."""
    for kind, r in reversed(word):
        v = heisenberg_action(kind, r, v, params)
    return v


def xi(lam: Partition, params: ToroidalParams):
    x = params.q ** sum(lam) / mfact(lam)
    for r in lam:
        x = x * (1 - params.q1 ** r) * (1 - params.q3 ** r) / r
    return x


def normal_order(nu: Partition, mu: Partition, params: ToroidalParams) -> list[NormalTerm]:
    """a_nu a*_mu = sum_{lam in nu cap mu} xi_lam a*_{mu - lam} a_{nu - lam}."""
    common = intersect(nu, mu)
    return [NormalTerm(xi(lam, params), setminus(mu, lam), setminus(nu, lam))
            for lam in subpartitions(common)]


def apply_normal_term(term: NormalTerm, v: FockVector, params: ToroidalParams) -> FockVector:
    return create(term.creation, annihilate(term.annihilation, v, params), params).scale(term.coeff)


def annihilate(nu: Partition, v: FockVector, params: ToroidalParams) -> FockVector:
    """Normalised a_nu."""
    out: dict = {}
    for mu, c in v.coeffs.items():
        if is_subpartition(nu, mu):
            k = setminus(mu, nu)
            x = c * bracket(mu, nu) / _prod(nu)
            out[k] = out[k] + x if k in out else x
    return FockVector(out)


def create(mu: Partition, v: FockVector, params: ToroidalParams) -> FockVector:
    """Normalised a*_mu."""
    f = params.one / mfact(mu)
    for r in mu:
        f = f * creation_scalar(r, params)
    return FockVector({union(k, mu): c * f for k, c in v.coeffs.items()})


def _prod(xs) -> int:
    p = 1
    for x in xs:
        p *= x
    return p


def norm_N(mu: Partition, params: ToroidalParams):
    """<mu|mu> = prod_{a in mu} (q^a - q^-a) / (a kappa_a)."""
    x = params.one
    for a in mu:
        x = x * (params.q ** a - params.one / params.q ** a) / (a * params.kappa(a))
    return x


# ---------------------------------------------------------------------------
# R-bar and the full block


@dataclass(frozen=True)
class TensorTerm:
    """coeff * (a*_mu a_nu) (x) (a*_rho a_sigma)."""

    coeff: object
    mu: Partition
    nu: Partition
    rho: Partition
    sigma: Partition


def rbar_coefficient(mu, rho, nu, sigma, params: ToroidalParams):
    """(-1)^{l(rho)+l(sigma)} q^{|rho|+|sigma|} R_{mu+rho, nu+sigma}."""
    kap, lam = union(mu, rho), union(nu, sigma)
    if sum(kap) != sum(lam):
        return params.one * 0
    R = rbar_coeffs(sum(kap), params).entries[(kap, lam)]
    return (-1) ** (len(rho) + len(sigma)) * params.q ** (sum(rho) + sum(sigma)) * R


def assemble_rbar_operator(w: int, params: ToroidalParams | None = None) -> list[TensorTerm]:
    """All terms of R-bar with |mu| + |rho| = |nu| + |sigma| <= w."""
    params = params or symbolic_params()
    out = []
    for n in range(w + 1):
        for (mu, rho) in enumerate_pairs(n):
            for (nu, sigma) in enumerate_pairs(n):
                c = rbar_coefficient(mu, rho, nu, sigma, params)
                if not c.is_zero():
                    out.append(TensorTerm(c, mu, nu, rho, sigma))
    return out


def k_coeff(r: int, params: ToroidalParams):
    """r (1 - q2^-r) / ((1 - q1^r)(1 - q3^r))."""
    return r * (1 - params.one / params.q2 ** r) / ((1 - params.q1 ** r) * (1 - params.q3 ** r))


def _apply_rbar(gamma, delta, params) -> dict:
    out: dict = {}
    for nu in subpartitions(gamma):
        g_rest = setminus(gamma, nu)
        fa = params.one * bracket(gamma, nu) / _prod(nu)
        for sigma in subpartitions(delta):
            d_rest = setminus(delta, sigma)
            fb = fa * bracket(delta, sigma) / _prod(sigma)
            n = sum(nu) + sum(sigma)
            for (mu, rho) in enumerate_pairs(n):
                c = rbar_coefficient(mu, rho, nu, sigma, params)
                if c.is_zero():
                    continue
                x = c * fb * _create_scale(mu, params) * _create_scale(rho, params)
                k = (union(g_rest, mu), union(d_rest, rho))
                out[k] = out[k] + x if k in out else x
    return out


def _create_scale(mu, params):
    key = ("crs", params.qt_key, mu)
    hit = _memo.get(key)
    if hit is None:
        hit = params.one / mfact(mu)
        for r in mu:
            hit = hit * creation_scalar(r, params)
        _memo[key] = hit
    return hit


def _apply_K(vec: dict, w: int, params) -> dict:
    """exp(sum_r k_r a_r (x) a_-r) on a two-factor vector."""
    out: dict = {}
    for (a, b), c in vec.items():
        for lam in subpartitions(a):
            # unnormalised products: a_lam = bracket m(lam)!/prod(lam), a_-lam = m(lam)! * create scale
            x = c * _K_scale(lam, params) * bracket(a, lam) * mfact(lam) / _prod(lam)
            x = x * _create_scale(lam, params) * mfact(lam)
            k = (setminus(a, lam), union(b, lam))
            out[k] = out[k] + x if k in out else x
    return out


def _K_scale(lam, params):
    key = ("Ksc", params.qt_key, lam)
    hit = _memo.get(key)
    if hit is None:
        hit = params.one / mfact(lam)
        for r in lam:
            hit = hit * k_coeff(r, params)
        _memo[key] = hit
    return hit


@dataclass
class FockBlock:
    weight: int
    basis: list
    entries: dict            # ((gamma, delta), (alpha, beta)) -> coefficient of |alpha>|beta> in R|gamma>|delta>
    convention: str = "row=in,col=out"

    def matrix(self) -> list:
        zero = None
        rows = []
        for r in self.basis:
            row = []
            for c in self.basis:
                x = self.entries.get((r, c))
                if x is None:
                    zero = zero or next(iter(self.entries.values())) * 0
                    x = zero
                row.append(x)
            rows.append(row)
        return rows

    def to_json(self) -> dict:
        return {"weight": self.weight,
                "convention": self.convention,
                "basis": [[list(a), list(b)] for a, b in self.basis],
                "matrix": [[x.to_json() for x in row] for row in self.matrix()]}

    @classmethod
    def from_json(cls, obj) -> "FockBlock":
        basis = [(tuple(a), tuple(b)) for a, b in obj["basis"]]
        entries = {}
        for i, row in enumerate(obj["matrix"]):
            for j, x in enumerate(row):
                val = scalar_from_json(x)
                if not val.is_zero():
                    entries[(basis[i], basis[j])] = val
        return cls(obj["weight"], basis, entries, obj.get("convention", "row=in,col=out"))


def assemble_full_block(w: int, params: ToroidalParams | None = None) -> FockBlock:
    """Matrix of R(u) = K q^{-d(x)1-1(x)d} R-bar on the total-weight-w sector.

    Row (gamma, delta), column (alpha, beta) holds the coefficient of
    |alpha>|beta> in R(u)|gamma>|delta>, i.e. <alpha,beta|R|gamma,delta>/(N_alpha N_beta).
    The vacuum has degree 0, so the grading factor is q^-w on the whole sector.
    """
    params = params or symbolic_params()
    key = ("block", params.key, w)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    basis = list(enumerate_pairs(w))
    grade = params.one / params.q ** w
    entries = {}
    for col in basis:
        v = _apply_K(_apply_rbar(col[0], col[1], params), w, params)
        for row, x in v.items():
            x = x * grade
            if not x.is_zero():
                entries[(col, row)] = x
    hit = FockBlock(w, basis, entries)
    _memo[key] = hit
    return hit
