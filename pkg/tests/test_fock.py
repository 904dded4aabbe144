import pytest

from fockr import fock as fk
from fockr.partitions import partitions_up_to
from fockr.ratfunc import rf_limit_t0

A, B = fk.A_PLUS, fk.A_MINUS


def vec(mu, P):
    return fk.FockVector.basis(mu, P)


def test_annihilation_examples(P):
    assert fk.heisenberg_action(A, 2, vec((1, 1), P), P).coeffs == {}
    assert fk.heisenberg_action(A, 1, vec((1, 1), P), P).coeffs == {(1,): 2 * P.one}
    with pytest.raises(ValueError):
        fk.heisenberg_action(A, 0, vec((), P), P)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_commutator_on_vacuum(P, r):
    for s in (1, 2, 3):
        ab = fk.apply_word([(A, r), (B, s)], vec((), P), P)
        ba = fk.apply_word([(B, s), (A, r)], vec((), P), P)
        comm = ab + ba.scale(-1)
        want = P.q ** r * (1 - P.q1 ** r) * (1 - P.q3 ** r) / r if r == s else P.one * 0
        assert comm.coeffs.get((), P.one * 0) == want


@pytest.mark.parametrize("mu", partitions_up_to(3))
def test_simplified_action_matches_h_modes(P, mu):
    for r in (1, 2, 3):
        for kind in (A, B):
            assert fk.heisenberg_action(kind, r, vec(mu, P), P) == fk.a_via_h(kind, r, vec(mu, P), P)


def test_normal_order_examples(P):
    terms = fk.normal_order((2,), (1,), P)
    assert [(t.creation, t.annihilation) for t in terms] == [((1,), (2,))]
    assert terms[0].coeff == 1
    terms = fk.normal_order((2,), (2,), P)
    assert {(t.creation, t.annihilation): t.coeff for t in terms} == {
        ((2,), (2,)): P.one, ((), ()): P.q ** 2 * (1 - P.q1 ** 2) * (1 - P.q3 ** 2) / 2}
    assert len(fk.normal_order((1, 1), (1, 1), P)) == 3


def test_normal_order_consistent(P):
    parts = partitions_up_to(4)
    for nu in parts:
        for mu in parts:
            direct = fk.annihilate(nu, fk.create(mu, vec((), P), P), P)
            total = fk.FockVector()
            for term in fk.normal_order(nu, mu, P):
                total = total + fk.apply_normal_term(term, vec((), P), P)
            assert direct == total


def test_norms(P):
    assert fk.norm_N((), P) == 1
    assert fk.norm_N((1,), P) == (P.q - 1 / P.q) / P.kappa(1)
    assert fk.norm_N((2, 1), P) == ((P.q ** 2 - P.q ** -2) / (2 * P.kappa(2))
                                     * (P.q - 1 / P.q) / P.kappa(1))


def test_rbar_operator_terms(P):
    assert [(t.mu, t.nu, t.rho, t.sigma) for t in fk.assemble_rbar_operator(0, P)] == [((), (), (), ())]
    terms = fk.assemble_rbar_operator(2, P)
    assert all(sum(t.mu) + sum(t.rho) == sum(t.nu) + sum(t.sigma) for t in terms)
    want = fk.rbar_coeffs(1, P).entries[((1,), (1,))] * P.q ** 2
    assert fk.rbar_coefficient((), (1,), (), (1,), P) == want


def test_six_vertex_block(P):
    q, u = P.q, P.u
    assert fk.assemble_full_block(0, P).matrix() == [[P.one]]
    den = 1 - q ** 2 * u
    assert fk.assemble_full_block(1, P).matrix() == [
        [q * (1 - u) / den, (1 - q ** 2) * u / den],
        [(1 - q ** 2) / den, q * (1 - u) / den]]


@pytest.mark.parametrize("w, n", [(2, 5), (3, 10)])
def test_block_shape_and_conservation(P, w, n):
    blk = fk.assemble_full_block(w, P)
    assert len(blk.basis) == n and len(blk.matrix()) == n
    for (i, j) in blk.entries:
        assert sum(map(sum, i)) == sum(map(sum, j)) == w


def test_regular_at_t_zero(P):
    x = fk.assemble_full_block(2, P).entries[(((1,), (1,)), ((1,), (1,)))]
    assert rf_limit_t0(x) == 1
    assert rf_limit_t0((x - 1) / P.t) is not None


def test_block_json_round_trip(P):
    blk = fk.assemble_full_block(2, P)
    back = fk.FockBlock.from_json(blk.to_json())
    assert back.entries == blk.entries and back.basis == blk.basis
