"""Skew a-coefficients, the L-recursion and Heisenberg-basis coefficients R_{mu,nu}(u).

R(x, y; u) = sum_{lam, mu} L_{lam,mu}(u) P_lam(x) P_mu(y) is built weight by
weight from L_{0,0} = 1.  The recursion runs over Young-diagram containment
(not multiset containment) because a_{alpha/lam} is supported on skew shapes.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import cache
from .params import ToroidalParams, eps, epsbar, epsilon, symbolic_params
from .partitions import (
    Partition, contains, enumerate_partitions, mfact, proper_subdiagrams,
)
from .ratfunc import scalar_from_json
from .symfunc import (
    BiSymFunc, MACDONALD_P, POWER, delta_prime, kernel_series, macdonald_table,
    plethystic_eval, skew_Q_coeffs, _memo,
)

__all__ = ["ToroidalParams", "epsilon", "eps", "epsbar", "a_skew", "L_skew", "L_table",
           "LTable", "RbarCoeffs", "R_sym_component", "rbar_coeffs", "clear"]


@dataclass
class LTable:
    weight: int
    entries: dict      # (alpha, beta) -> scalar

    def to_json(self) -> dict:
        return {"weight": self.weight, "entries": _entries_json(self.entries, self.weight)}


@dataclass
class RbarCoeffs:
    weight: int
    entries: dict      # (mu, nu) -> scalar

    def to_json(self) -> dict:
        return {"weight": self.weight, "entries": _entries_json(self.entries, self.weight)}


def _entries_json(entries, w):
    parts = enumerate_partitions(w)
    out = []
    for a in parts:
        for b in parts:
            x = entries.get((a, b))
            if x is None:
                continue
            out.append({"alpha": list(a), "beta": list(b), "value": x.to_json()})
    return out


def entries_from_json(obj) -> dict:
    return {(tuple(e["alpha"]), tuple(e["beta"])): scalar_from_json(e["value"])
            for e in obj["entries"]}


# ---------------------------------------------------------------------------
# a-coefficients


def a_skew(lam: Partition, mu: Partition, params: ToroidalParams, route: str = "kernel"):
    if sum(lam) < sum(mu):
        raise ValueError("a_skew needs |lam| >= |mu|")
    key = ("askew", route, params.qt_key, lam, mu)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    if route == "kernel":
        hit = _a_kernel(mu, sum(lam) - sum(mu), params).get(lam, params.one * 0)
    elif route == "skewQ":
        hit = plethystic_eval(skew_Q_coeffs(lam, mu, params).to(POWER), delta_prime(params))
    else:
        raise ValueError(f"unknown route {route!r}")
    _memo[key] = hit
    return hit


def _a_kernel(mu: Partition, k: int, params: ToroidalParams) -> dict:
    """P-coefficients of P_mu times the degree-k part of the psi-kernel."""
    key = ("akernel", params.qt_key, mu, k)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    psi = kernel_series("psi-kernel", k, params).homogeneous(k)
    n = sum(mu) + k
    pmu = macdonald_table(sum(mu), params).P_in_p[mu]
    prodp: dict = {}
    for r1, x in pmu.items():
        for r2, y in psi.items():
            rho = tuple(sorted(r1 + r2, reverse=True))
            prodp[rho] = prodp[rho] + x * y if rho in prodp else x * y
    tab = macdonald_table(n, params)
    out: dict = {}
    for rho, c in prodp.items():
        for lam, x in tab.p_in_P[rho].items():
            out[lam] = out[lam] + c * x if lam in out else c * x
    _memo[key] = out
    return out


# ---------------------------------------------------------------------------
# L-recursion


def _eps_cached(kind, lam, params):
    key = (kind, params.qt_key, lam)
    hit = _memo.get(key)
    if hit is None:
        hit = eps(lam, params) if kind == "eps" else epsbar(lam, params)
        _memo[key] = hit
    return hit


def _left_factor(alpha, lam, params, route="kernel"):
    """(1-st)(1-1/sq) q^{2+|alpha|-|lam|} a_{alpha/lam} / ((1-q^2)(epsbar_alpha - epsbar_lam))."""
    key = ("Lleft", route, params.qt_key, alpha, lam)
    hit = _memo.get(key)
    if hit is None:
        a = a_skew(alpha, lam, params, route)
        if a.is_zero():
            hit = a
        else:
            gap = _eps_cached("epsbar", alpha, params) - _eps_cached("epsbar", lam, params)
            if gap.is_zero():
                raise ZeroDivisionError(f"epsbar gap vanishes for {alpha}/{lam}")
            c = (1 - params.st) * (1 - params.one / params.sq) / (1 - params.q ** 2)
            hit = c * params.q ** (2 + sum(alpha) - sum(lam)) * a / gap
        _memo[key] = hit
    return hit


def L_skew(alpha, lam, beta, mu, params: ToroidalParams, route: str = "kernel"):
    if sum(alpha) != sum(beta) or sum(lam) != sum(mu) or sum(lam) >= sum(alpha):
        raise ValueError("L_skew needs |alpha| = |beta| > |lam| = |mu|")
    zero = params.one * 0
    if not (contains(alpha, lam) and contains(beta, mu)):
        return zero
    denom = _eps_cached("eps", alpha, params) - params.u * _eps_cached("epsbar", beta, params)
    return _left_factor(alpha, lam, params, route) * a_skew(beta, mu, params, route) / denom


def L_table(w: int, params: ToroidalParams | None = None, route: str = "kernel") -> LTable:
    """Weight-w coefficients of R(x, y; u) in the P(x) P(y) basis."""
    params = params or symbolic_params()
    key = ("Ltab", route, params.key, w)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    disk = params.key == symbolic_params().key and route == "kernel"
    if disk:
        data = cache.load("ltable", w)
        if data is not None:
            tab = LTable(w, entries_from_json(data))
            _memo[key] = tab
            return tab
    if w == 0:
        tab = LTable(0, {((), ()): params.one})
    else:
        lower = {k: L_table(k, params, route) for k in range(w)}
        parts = enumerate_partitions(w)
        entries = {}
        for alpha in parts:
            subs_a = proper_subdiagrams(alpha)
            for beta in parts:
                subs_b = proper_subdiagrams(beta)
                total = params.one * 0
                # group by lam: sum_mu a_{beta/mu} L_{lam,mu}, then weight by the left factor
                for lam in subs_a:
                    left = _left_factor(alpha, lam, params, route)
                    if left.is_zero():
                        continue
                    inner = params.one * 0
                    n = sum(lam)
                    for mu in subs_b:
                        if sum(mu) != n:
                            continue
                        L = lower[n].entries.get((lam, mu))
                        if L is None:
                            continue
                        inner = inner + a_skew(beta, mu, params, route) * L
                    if not inner.is_zero():
                        total = total + left * inner
                denom = _eps_cached("eps", alpha, params) - params.u * _eps_cached("epsbar", beta, params)
                entries[(alpha, beta)] = total / denom
        tab = LTable(w, entries)
    if disk:
        cache.store("ltable", w, tab.to_json())
    _memo[key] = tab
    return tab


def L_table_direct(w: int, params: ToroidalParams, route: str = "kernel") -> LTable:
    """Unfactored recursion, summing L_skew * L term by term (reference implementation)."""
    if w == 0:
        return LTable(0, {((), ()): params.one})
    lower = {k: L_table(k, params, route) for k in range(w)}
    parts = enumerate_partitions(w)
    entries = {}
    for alpha in parts:
        for beta in parts:
            total = params.one * 0
            for lam in proper_subdiagrams(alpha):
                for mu in proper_subdiagrams(beta):
                    if sum(lam) != sum(mu):
                        continue
                    L = lower[sum(lam)].entries.get((lam, mu))
                    if L is not None:
                        total = total + L_skew(alpha, lam, beta, mu, params, route) * L
            entries[(alpha, beta)] = total
    return LTable(w, entries)


def R_sym_component(w: int, params: ToroidalParams | None = None) -> dict:
    """Bidegree-(w, w) part of R(x, y; u) in P(x)P(y) and p(x)p(y) bases."""
    params = params or symbolic_params()
    L = L_table(w, params)
    PP = BiSymFunc(dict(L.entries), (MACDONALD_P, MACDONALD_P), params, w)
    return {"P": PP, "p": _pp_component(w, params)}


def _pp_component(w: int, params: ToroidalParams) -> dict:
    key = ("Rpp", params.key, w)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    L = L_table(w, params).entries
    tab = macdonald_table(w, params)
    zero = params.one * 0
    # first contract alpha into the x power sums, then beta into y
    half: dict = {}
    for (a, b), c in L.items():
        for rho, x in tab.P_in_p[a].items():
            k = (rho, b)
            half[k] = half[k] + c * x if k in half else c * x
    out: dict = {}
    for (rho, b), c in half.items():
        for sig, y in tab.P_in_p[b].items():
            k = (rho, sig)
            out[k] = out[k] + c * y if k in out else c * y
    out = {k: x for k, x in out.items() if not x.is_zero()}
    for rho in enumerate_partitions(w):
        for sig in enumerate_partitions(w):
            out.setdefault((rho, sig), zero)
    _memo[key] = out
    return out


def pi_factor(mu: Partition, params: ToroidalParams):
    """prod_{r in mu} q^-r (1 - q1^r)/r divided by m(mu)!, the image scale of c_{-mu}."""
    x = params.one / mfact(mu)
    for r in mu:
        x = x * (1 - params.q1 ** r) / (r * params.q ** r)
    return x


def rbar_coeffs(w: int, params: ToroidalParams | None = None) -> RbarCoeffs:
    """R_{mu,nu}(u) for |mu| = |nu| = w.

    The p_mu(x) p_nu(y) coefficient of R(x,y;u) is
    (-1)^{l(nu)} q^{|mu|+|nu|} R_{mu,nu} * pi_factor(mu) * pi_factor(nu).
    """
    params = params or symbolic_params()
    key = ("Rbar", params.key, w)
    hit = _memo.get(key)
    if hit is not None:
        return hit
    C = _pp_component(w, params)
    entries = {}
    for (mu, nu), c in C.items():
        conv = (-1) ** len(nu) * params.q ** (2 * w) * pi_factor(mu, params) * pi_factor(nu, params)
        if conv.is_zero():
            raise ZeroDivisionError(f"conversion factor vanishes at {(mu, nu)}")
        entries[(mu, nu)] = c / conv
    hit = RbarCoeffs(w, entries)
    _memo[key] = hit
    return hit


def clear() -> None:
    _memo.clear()
