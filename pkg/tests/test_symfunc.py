import random

import pytest

from fockr.params import eps, epsbar
from fockr.partitions import dominates, enumerate_partitions, partitions_up_to
from fockr import symfunc as sf
from fockr.symfunc import MACDONALD_P, MACDONALD_Q, MONOMIAL, POWER, SymFunc


def p(lam, P, coeff=1):
    return SymFunc({tuple(lam): P.one * coeff}, POWER, P)


def test_p1_is_m1(P):
    assert p((1,), P).to(MONOMIAL).coeffs == {(1,): P.one}


def test_m11_in_power_sums(P):
    m11 = SymFunc({(1, 1): P.one}, MONOMIAL, P).to(POWER)
    assert m11.coeffs == {(1, 1): P.one / 2, (2,): -P.one / 2}


@pytest.mark.parametrize("basis", [MONOMIAL, MACDONALD_P, MACDONALD_Q])
def test_round_trip(P, basis):
    f = SymFunc({lam: P.q ** i + P.t for i, lam in enumerate(partitions_up_to(4))}, POWER, P)
    g = f.to(basis).to(POWER)
    assert g.coeffs == f.coeffs


def test_scalar_product_examples(P):
    sq, st = P.sq, P.st
    assert sf.scalar_product(p((2,), P), p((1, 1), P)).is_zero()
    assert sf.scalar_product(p((2,), P), p((2,), P)) == 2 * (1 - sq ** 2) / (1 - st ** 2)
    assert sf.scalar_product(p((1, 1), P), p((1, 1), P)) == 2 * (1 - sq) ** 2 / (1 - st) ** 2


def test_macdonald_low_weight(P):
    sq, st = P.sq, P.st
    assert sf.macdonald_P((1,), P).coeffs == {(1,): P.one}
    assert sf.macdonald_P((1, 1), P).coeffs == {(1, 1): P.one}
    P2 = sf.macdonald_P((2,), P).coeffs
    assert P2[(2,)] == 1
    assert P2[(1, 1)] == (1 + sq) * (1 - st) / (1 - sq * st)


@pytest.mark.parametrize("n", range(6))
def test_orthogonality_and_triangularity(P, n):
    tab = sf.macdonald_table(n, P)
    parts = enumerate_partitions(n)
    for i, lam in enumerate(parts):
        assert tab.P_in_m[lam][lam] == 1
        assert all(dominates(lam, mu) for mu in tab.P_in_m[lam])
        for mu in parts[i + 1:]:
            a = SymFunc(tab.P_in_p[lam], POWER, P)
            b = SymFunc(tab.P_in_p[mu], POWER, P)
            assert sf.scalar_product(a, b).is_zero()


def test_q_dual_to_p(P):
    for lam in enumerate_partitions(3):
        for mu in enumerate_partitions(3):
            ip = sf.scalar_product(sf.macdonald_P(lam, P, POWER), sf.macdonald_Q(mu, P, POWER))
            assert ip == (1 if lam == mu else 0)


def test_skew_q_examples(P):
    for lam in partitions_up_to(3):
        assert sf.skew_Q_coeffs(lam, lam, P).coeffs == {(): P.one}
    assert sf.skew_Q_coeffs((1,), (), P).coeffs == {(1,): P.one}
    assert sf.skew_Q_coeffs((2,), (1, 1), P).coeffs == {}
    assert sf.skew_Q_coeffs((3, 1), (2, 2), P).coeffs == {}


def test_plethystic_eval(P):
    d = sf.delta_prime(P)
    w1 = sf.plethystic_eval(p((1,), P), d)
    assert w1 == (P.sq - 1) * (P.sq - P.st) / (P.q * P.st)
    assert sf.plethystic_eval(SymFunc({(): P.one}, POWER, P), d) == 1
    assert sf.plethystic_eval(p((1, 1), P), d) == w1 ** 2


def test_plethystic_eval_is_multiplicative(P):
    rng = random.Random(3)
    parts = partitions_up_to(3)
    d = sf.delta_prime(P)
    for _ in range(50):
        f = SymFunc({rng.choice(parts): P.one * rng.randint(-3, 3) for _ in range(2)}, POWER, P)
        g = SymFunc({rng.choice(parts): P.q ** rng.randint(0, 2) for _ in range(2)}, POWER, P)
        assert sf.plethystic_eval(f * g, d) == sf.plethystic_eval(f, d) * sf.plethystic_eval(g, d)


def test_kernel_examples(P):
    sq, st, q = P.sq, P.st, P.q
    cauchy = sf.kernel_series("cauchy", 2, P)
    assert cauchy.coeffs[((1,), (1,))] == (1 - st) / (1 - sq)
    modified = sf.kernel_series("modified", 2, P)
    assert modified.coeffs[((), ())] == 1
    psi = sf.kernel_series("psi-kernel", 2, P)
    assert psi.coeffs[(1,)] == (1 - st) * (1 - sq / st) / q


def test_cauchy_reproduces_skew_expansion(P):
    """Pi(x,y) P_mu(x), expanded over P_rho(x), has coefficient Q_{rho/mu}(y)."""
    N = 4
    cauchy = sf.kernel_series("cauchy", N, P).coeffs
    for mu in partitions_up_to(2):
        pmu = sf.macdonald_P(mu, P, POWER).coeffs
        prod = {}
        for (a, b), c in cauchy.items():
            for r, x in pmu.items():
                if sum(a) + sum(r) <= N:
                    k = (tuple(sorted(a + r, reverse=True)), b)
                    prod[k] = prod.get(k, P.one * 0) + c * x
        for rho in partitions_up_to(N):
            if sum(rho) < sum(mu):
                continue
            want = sf.skew_Q_coeffs(rho, mu, P).to(POWER).coeffs
            # coefficient of P_rho(x): contract x with Q_rho
            got = {}
            qrho = sf.macdonald_Q(rho, P, POWER).coeffs
            for (a, b), c in prod.items():
                if a in qrho:
                    got[b] = got.get(b, P.one * 0) + c * qrho[a] * sf.power_norm(a, P)
            got = {k: x for k, x in got.items() if not x.is_zero()}
            assert got == want


def test_diagonal_operators(P):
    one = SymFunc({(): P.one}, POWER, P)
    assert sf.apply_macdonald_operator(one, "E").coeffs == {}
    for lam in partitions_up_to(4)[1:]:
        Pl = sf.macdonald_P(lam, P, MACDONALD_P)
        assert sf.apply_macdonald_operator(Pl, "E").coeffs == {lam: eps(lam, P)}
        assert sf.apply_macdonald_operator(Pl, "Ebar").coeffs == {lam: epsbar(lam, P)}


def test_vertex_E_matches_diagonal(P):
    E = sf.build_E_vertex(4, P)
    assert E(SymFunc({(): P.one}, POWER, P)).coeffs == {}
    for lam in partitions_up_to(4):
        Pl = sf.macdonald_P(lam, P, POWER)
        assert E(Pl) == Pl * eps(lam, P)


def test_vertex_Ebar_matches_diagonal(P):
    Eb = sf.build_Ebar_vertex(4, P)
    for n in range(5):
        assert Eb.matrices[n] == sf.macdonald_operator_matrix(n, "Ebar", P)


def test_macdonald_cache_round_trip(P, tmp_cache):
    sf.clear_memo()
    first = sf.macdonald_table(3, P).P_in_m
    assert (tmp_cache / "macdonald-w3.json").exists()
    sf.clear_memo()
    second = sf.macdonald_table(3, P).P_in_m
    assert first == second


def test_max_degree_guard(P):
    with pytest.raises(ValueError):
        SymFunc({(2,): P.one}, POWER, P, max_degree=1)
    with pytest.raises(ValueError):
        SymFunc({}, "schur", P)
