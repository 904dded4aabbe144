"""Independent consistency checks on the computed tables and blocks.

Each check returns a :class:`CheckReport`; a failing report carries the first
counterexample found (lowest weight first) with both sides serialised.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .fock import assemble_full_block
from .params import ToroidalParams, params_from_context, symbolic_params
from .partitions import (
    contains, dominates, enumerate_pairs, enumerate_partitions, partitions_up_to, union,
)
from .ratfunc import PRIME_FIELD, RATIONAL_POINT, SYMBOLIC, EvalContext, RatFunc
from .symfunc import (
    build_E_vertex, build_Ebar_vertex, kernel_series, macdonald_operator_matrix,
    macdonald_table, power_norm,
)
from .toroidal import L_table, _pp_component, a_skew

PASS, FAIL = "pass", "fail"


@dataclass
class CheckReport:
    name: str
    parameters: dict
    verdict: str
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return asdict(self)


def _js(x):
    return x.to_json() if hasattr(x, "to_json") else x


def _report(name, params, bad, details=None):
    return CheckReport(name, params, FAIL if bad else PASS, bad, details or {})


def _ctx_params(ctx: EvalContext | None) -> dict:
    if ctx is None:
        return {"mode": SYMBOLIC}
    return {"mode": ctx.mode, "seed": ctx.seed,
            "assignments": {k: str(v) for k, v in ctx.assignments.items()}}


# ---------------------------------------------------------------------------


def sixvertex_expected() -> dict:
    q, u = RatFunc.var("q"), RatFunc.var("u")
    den = 1 - q ** 2 * u
    a = q * (1 - u) / den
    return {0: [[RatFunc.const(1)]],
            1: [[a, (1 - q ** 2) * u / den], [(1 - q ** 2) / den, a]]}


def verify_sixvertex() -> CheckReport:
    expected = sixvertex_expected()
    for w in (0, 1):
        got = assemble_full_block(w, symbolic_params()).matrix()
        for i, row in enumerate(expected[w]):
            for j, want in enumerate(row):
                if got[i][j] != want:
                    return _report("sixvertex", {"weights": [0, 1]},
                                   {"weight": w, "row": i, "col": j,
                                    "computed": got[i][j].to_json(), "expected": want.to_json()})
    return _report("sixvertex", {"weights": [0, 1]}, None,
                   {"basis_w1": [[[1], []], [[], [1]]], "convention": "row=in,col=out"})


def verify_symmetry(wmax: int, params: ToroidalParams | None = None) -> CheckReport:
    params = params or symbolic_params()
    for w in range(wmax + 1):
        L = L_table(w, params).entries
        for (a, b), x in L.items():
            y = L[(b, a)]
            if x != y:
                return _report("symmetry", {"wmax": wmax},
                               {"weight": w, "alpha": list(a), "beta": list(b),
                                "lhs": _js(x), "rhs": _js(y)})
    return _report("symmetry", {"wmax": wmax}, None)


def verify_askew(wmax: int, params: ToroidalParams | None = None) -> CheckReport:
    params = params or symbolic_params()
    checked = 0
    for lam in partitions_up_to(wmax):
        for mu in partitions_up_to(sum(lam)):
            x = a_skew(lam, mu, params, "kernel")
            y = a_skew(lam, mu, params, "skewQ")
            checked += 1
            bad = None
            if x != y:
                bad = "routes differ"
            elif not contains(lam, mu) and not x.is_zero():
                bad = "nonzero outside skew support"
            elif lam == mu and not x == params.one:
                bad = "a_{lam/lam} != 1"
            if bad:
                return _report("askew", {"wmax": wmax},
                               {"lambda": list(lam), "mu": list(mu), "reason": bad,
                                "kernel": _js(x), "skewQ": _js(y)})
    return _report("askew", {"wmax": wmax}, None, {"pairs": checked})


def verify_macdonald(wmax: int, vertex_max: int | None = None,
                     params: ToroidalParams | None = None) -> CheckReport:
    """Orthogonality and triangularity up to wmax; vertex E and Ebar up to vertex_max."""
    params = params or symbolic_params()
    vertex_max = wmax if vertex_max is None else vertex_max
    name, pars = "macdonald", {"wmax": wmax, "vertex_max": vertex_max}
    for n in range(wmax + 1):
        tab = macdonald_table(n, params)
        parts = enumerate_partitions(n)
        for i, lam in enumerate(parts):
            for mu, c in tab.P_in_m[lam].items():
                if not dominates(lam, mu):
                    return _report(name, pars, {"check": "triangularity", "lambda": list(lam),
                                                "mu": list(mu), "coefficient": _js(c)})
            for mu in parts[i + 1:]:
                ip = _pp_inner(tab.P_in_p[lam], tab.P_in_p[mu], params)
                if not ip.is_zero():
                    return _report(name, pars, {"check": "orthogonality", "lambda": list(lam),
                                                "mu": list(mu), "value": _js(ip)})
    for which, build in (("E", build_E_vertex), ("Ebar", build_Ebar_vertex)):
        op = build(vertex_max, params)
        for n in range(vertex_max + 1):
            diag = macdonald_operator_matrix(n, which, params)
            for rho in enumerate_partitions(n):
                a, b = op.matrices[n][rho], diag[rho]
                for k in set(a) | set(b):
                    x, y = a.get(k, params.one * 0), b.get(k, params.one * 0)
                    if x != y:
                        return _report(name, pars, {"check": f"vertex {which}", "p": list(rho),
                                                    "component": list(k), "vertex": _js(x),
                                                    "diagonal": _js(y)})
    return _report(name, pars, None)


def _pp_inner(f, g, params):
    total = params.one * 0
    for k, x in f.items():
        if k in g:
            total = total + x * g[k] * power_norm(k, params)
    return total


# ---------------------------------------------------------------------------
# graded coproduct identity  E_x (Pi~ R) = u Pi~ (Ebar_y R)


def _bi_mul_diag(kernel: dict, R: dict, n: int) -> dict:
    """Bidegree-(n,n) part of (sum_lam c_lam p_lam(x) p_lam(y)) * R."""
    out: dict = {}
    for (lam, lam2), c in kernel.items():
        k = sum(lam)
        if k > n:
            continue
        for (rho, sig), x in R.get(n - k, {}).items():
            key = (union(lam, rho), union(lam2, sig))
            out[key] = out[key] + c * x if key in out else c * x
    return out


def _apply_side(op, F: dict, side: int) -> dict:
    out: dict = {}
    for key, c in F.items():
        row = op.matrices[sum(key[side])][key[side]]
        for k, x in row.items():
            nk = (k, key[1]) if side == 0 else (key[0], k)
            out[nk] = out[nk] + c * x if nk in out else c * x
    return out


def coproduct_sides(n: int, params: ToroidalParams) -> tuple[dict, dict]:
    R = {k: _pp_component(k, params) for k in range(n + 1)}
    kern = kernel_series("modified", n, params).coeffs
    E = build_E_vertex(n, params)
    Eb = build_Ebar_vertex(n, params)
    lhs = _apply_side(E, _bi_mul_diag(kern, R, n), 0)
    EbR = {k: _apply_side(Eb, R[k], 1) for k in R}
    rhs = {k: params.u * x for k, x in _bi_mul_diag(kern, EbR, n).items()}
    return lhs, rhs


def verify_coproduct(nmax: int, ctx: EvalContext | None = None) -> CheckReport:
    ctx = ctx or EvalContext()
    params = params_from_context(ctx)
    pars = {"nmax": nmax, **_ctx_params(ctx)}
    for n in range(nmax + 1):
        lhs, rhs = coproduct_sides(n, params)
        zero = params.one * 0
        for k in sorted(set(lhs) | set(rhs)):
            x, y = lhs.get(k, zero), rhs.get(k, zero)
            if x != y:
                return _report("coproduct", pars, {"degree": n, "x": list(k[0]), "y": list(k[1]),
                                                   "lhs": _js(x), "rhs": _js(y)})
    return _report("coproduct", pars, None)


# ---------------------------------------------------------------------------
# Yang-Baxter on V (x) V (x) V


def _triples(w):
    return [(a, b, c) for n in range(w + 1) for (a, b) in enumerate_pairs(n)
            for c in enumerate_partitions(w - n)]


def _block_map(params, wmax, transpose: bool):
    """(in pair) -> {out pair: coeff} for every weight up to wmax."""
    out = {}
    for w in range(wmax + 1):
        blk = assemble_full_block(w, params)
        for (i, j), x in blk.entries.items():
            src, dst = (j, i) if transpose else (i, j)
            out.setdefault(src, {})[dst] = x
    return out


def _apply_12(M, vec, slots):
    i, j = slots
    out: dict = {}
    for key, c in vec.items():
        for (a, b), x in M[(key[i], key[j])].items():
            nk = list(key)
            nk[i], nk[j] = a, b
            nk = tuple(nk)
            out[nk] = out[nk] + c * x if nk in out else c * x
    return out


def ybe_params(ctx: EvalContext) -> tuple:
    """Parameters at spectral values a, b and ab."""
    base = params_from_context(ctx)
    if ctx.mode == PRIME_FIELD:
        a = base.u
        b = ctx.value("v")
        tag = str(ctx.assignments.get("v"))
        return base, base.with_u(b, ("v", tag)), base.with_u(a * b, ("uv", tag))
    a, b = RatFunc.var("u"), RatFunc.var("v")
    if ctx.mode == RATIONAL_POINT and "u" in ctx.assignments:
        a = RatFunc.const(ctx.assignments["u"])
        b = RatFunc.const(ctx.assignments["v"])
    pa = base.with_u(a, ("a", str(a)))
    return pa, base.with_u(b, ("b", str(b))), base.with_u(a * b, ("ab", str(a * b)))


def verify_ybe(wmax: int, ctx: EvalContext | None = None) -> CheckReport:
    ctx = ctx or EvalContext()
    pa, pb, pab = ybe_params(ctx)
    pars = {"wmax": wmax, **_ctx_params(ctx)}
    first_bad = None
    for transpose in (False, True):
        Ma, Mb, Mab = (_block_map(p, wmax, transpose) for p in (pa, pb, pab))
        bad = None
        for w in range(wmax + 1):
            for trip in _triples(w):
                v = {trip: pa.one}
                # operators act right to left on the vector
                left = _apply_12(Ma, _apply_12(Mab, _apply_12(Mb, v, (1, 2)), (0, 2)), (0, 1))
                right = _apply_12(Mb, _apply_12(Mab, _apply_12(Ma, v, (0, 1)), (0, 2)), (1, 2))
                zero = pa.one * 0
                for k in sorted(set(left) | set(right)):
                    x, y = left.get(k, zero), right.get(k, zero)
                    if x != y:
                        bad = {"weight": w, "input": [list(p) for p in trip],
                               "output": [list(p) for p in k], "lhs": _js(x), "rhs": _js(y)}
                        break
                if bad:
                    break
            if bad:
                break
        if bad is None:
            orient = "transposed" if transpose else "row=in,col=out"
            return _report("ybe", pars, None, {"orientation": orient})
        first_bad = first_bad or dict(bad, orientation="row=in,col=out")
    return _report("ybe", pars, first_bad)


CHECKS = ("sixvertex", "symmetry", "coproduct", "ybe", "askew", "macdonald")
