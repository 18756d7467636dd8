import random

import pytest

from bruhat_kit import combinat, qsym
from bruhat_kit.errors import NotSymmetric

M, F = qsym.M, qsym.F


def test_m_to_f_three_term_example():
    q = qsym.QuasiSymFn(M, {(1, 1, 1): 1, (2, 1): 1, (1, 2): 1})
    assert qsym.m_to_f(q).terms == {(1, 2): 1, (2, 1): 1, (1, 1, 1): -1}


def test_m_to_f_degree_one():
    assert qsym.m_to_f(qsym.QuasiSymFn(M, {(1,): 1})).terms == {(1,): 1}


def test_f_to_m_examples():
    assert qsym.f_to_m(qsym.QuasiSymFn(F, {(2, 1): 1})).terms == \
        {(2, 1): 1, (1, 1, 1): 1}
    assert qsym.f_to_m(qsym.QuasiSymFn(F, {(3,): 1})).terms == \
        {(3,): 1, (2, 1): 1, (1, 2): 1, (1, 1, 1): 1}


def test_f_to_m_of_8_chain_sum_has_finest_coefficient_8():
    q = qsym.QuasiSymFn(F, {(1, 3): 1, (1, 2, 1): 2, (2, 2): 2,
                            (1, 1, 2): 1, (3, 1): 1, (2, 1, 1): 1})
    assert qsym.f_to_m(q).coeff((1, 1, 1, 1)) == 8


@pytest.mark.parametrize("n", range(0, 7))
def test_round_trip_identity_on_basis_elements(n):
    for alpha in combinat.compositions_of(n):
        m = qsym.QuasiSymFn(M, {alpha: 1})
        assert qsym.f_to_m(qsym.m_to_f(m)).terms == m.terms
        f = qsym.QuasiSymFn(F, {alpha: 1})
        assert qsym.m_to_f(qsym.f_to_m(f)).terms == f.terms


def test_round_trip_on_random_combinations():
    rng = random.Random(3)
    comps = [a for n in range(5) for a in combinat.compositions_of(n)]
    for _ in range(25):
        terms = {rng.choice(comps): rng.randint(-9, 9) for _ in range(6)}
        q = qsym.QuasiSymFn(M, terms)
        assert qsym.f_to_m(qsym.m_to_f(q)) == q
        assert qsym.m_to_f(q) == q  # equality is basis independent


def test_m11_round_trip():
    q = qsym.QuasiSymFn(M, {(1, 1): 1})
    assert qsym.f_to_m(qsym.m_to_f(q)).terms == {(1, 1): 1}


def test_is_symmetric():
    assert qsym.is_symmetric(
        qsym.QuasiSymFn(M, {(1, 1, 1): 1, (2, 1): 1, (1, 2): 1}))
    assert not qsym.is_symmetric(qsym.QuasiSymFn(M, {(2, 1): 1}))
    assert qsym.is_symmetric(qsym.QuasiSymFn(M, {}))
    assert qsym.is_symmetric(qsym.QuasiSymFn(F, {(): 3}))


def test_schur_expand_known_expansions():
    ex44 = qsym.QuasiSymFn(F, {(1, 1, 1, 1): 9, (1, 1, 2): 30, (1, 2, 1): 51,
                               (1, 3): 30, (2, 1, 1): 30, (2, 2): 51,
                               (3, 1): 30, (4,): 9})
    assert qsym.schur_expand(ex44).terms == {
        (4,): 9, (3, 1): 30, (2, 2): 21, (2, 1, 1): 30, (1, 1, 1, 1): 9}

    ex34 = qsym.QuasiSymFn(M, {(1, 1, 1): 1, (2, 1): 1, (1, 2): 1})
    assert qsym.schur_expand(ex34).terms == {(2, 1): 1, (1, 1, 1): -1}

    ex22 = qsym.QuasiSymFn(F, {(1, 3): 1, (1, 2, 1): 2, (2, 2): 2,
                               (1, 1, 2): 1, (3, 1): 1, (2, 1, 1): 1})
    assert qsym.schur_expand(ex22).terms == {(3, 1): 1, (2, 2): 1, (2, 1, 1): 1}


def test_schur_expand_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        qsym.schur_expand(qsym.QuasiSymFn(F, {(1, 2): 1}))


def test_schur_expand_reexpansion_round_trip():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(1, 5)
        terms = {lam: rng.randint(-4, 4) for lam in combinat.partitions_of(n)}
        f = qsym.SymFn("s", terms)
        as_m = qsym.schur_to_m(f)
        assert qsym.is_symmetric(as_m)
        assert qsym.schur_expand(as_m).terms == f.terms


def test_h_expand_to_schur():
    assert qsym.h_expand_to_schur((1,)).terms == {(1,): 1}
    assert qsym.h_expand_to_schur((2, 1)).terms == {(3,): 1, (2, 1): 1}
    assert qsym.h_expand_to_schur((1, 1, 1)).terms == \
        {(3,): 1, (2, 1): 2, (1, 1, 1): 1}


def test_chain_counting_definition():
    # the M coefficient counts the chains whose descents are refined by alpha
    rng = random.Random(9)
    for _ in range(20):
        seqs = [[rng.randint(0, 6) for _ in range(rng.randint(1, 6))]
                for _ in range(rng.randint(1, 8))]
        n = len(seqs[0])
        seqs = [s for s in seqs if len(s) == n]
        descents = [combinat.descent_composition(s) for s in seqs]
        total = qsym.QuasiSymFn(F, {})
        for d in descents:
            total = total + qsym.QuasiSymFn(F, {d: 1})
        as_m = qsym.f_to_m(total)
        for alpha in combinat.compositions_of(n):
            want = sum(1 for d in descents if combinat.refines(alpha, d))
            assert as_m.coeff(alpha) == want


def test_json_form_sorted_decreasing_lex():
    q = qsym.QuasiSymFn(F, {(1, 2, 1): 51, (4,): 9, (2, 2): 51})
    out = q.to_json()
    assert out["basis"] == "F"
    assert [t["index"] for t in out["terms"]] == [[4], [2, 2], [1, 2, 1]]
