import random

import pytest

from bruhat_kit import affineperm, combinat, kschur, qsym
from bruhat_kit.affineperm import AffinePermutation
from bruhat_kit.errors import MOutOfRange


def test_weak_covers_examples():
    ident = AffinePermutation.identity(2)
    assert [(i, v.window) for i, v in kschur.weak_covers(ident)] == [(0, (0, 2, 4))]

    u = AffinePermutation((0, 2, 4))
    covers = dict(kschur.weak_covers(u))
    assert covers[1].window == (2, 0, 4)

    u = AffinePermutation((2, 4, 0))
    covers = dict(kschur.weak_covers(u))
    assert covers[0].window == (-3, 4, 5)


def test_weak_cover_restriction_to_grassmannians():
    # id*s_1 raises length but leaves the grassmannian set, so it is not a cover
    ident = AffinePermutation.identity(2)
    assert all(i == 0 for i, _ in kschur.weak_covers(ident))


def test_is_cyclically_increasing():
    assert kschur.is_cyclically_increasing((1, 2), 2)
    assert kschur.is_cyclically_increasing((2, 0), 2)
    assert not kschur.is_cyclically_increasing((0, 1, 2), 2)  # m must be <= k
    assert not kschur.is_cyclically_increasing((0, 2), 2)
    assert not kschur.is_cyclically_increasing((1, 1), 3)
    assert not kschur.is_cyclically_increasing((), 3)
    assert kschur.is_cyclically_increasing((3,), 3)


def test_cyclic_order_realizes_the_predicate():
    for k in (2, 3, 4):
        import itertools
        for m in range(1, k + 1):
            for hours in itertools.combinations(range(k + 1), m):
                seq = kschur.cyclic_order(hours, k)
                assert kschur.is_cyclically_increasing(seq, k)
                # and it is the only ordering that works
                others = [p for p in itertools.permutations(hours)
                          if kschur.is_cyclically_increasing(p, k)]
                assert others == [seq]


def test_pieri_kschur_single_h():
    # h_m is the k-Schur function of one grassmannian: the Pieri set from
    # the identity is a single point with the stated window
    for k in (2, 3, 4):
        for m in range(1, k + 1):
            ends = kschur.pieri_kschur(AffinePermutation.identity(k), m)
            expect = list(range(2, m + 1)) + [0] + list(range(m + 1, k + 1)) + [k + 2]
            assert [x.window for x in ends] == [tuple(expect)]


def test_pieri_out_of_range():
    with pytest.raises(MOutOfRange):
        kschur.pieri_kschur(AffinePermutation.identity(2), 3)


def test_pieri_endpoints_lengths():
    rng = random.Random(4)
    for _ in range(15):
        k = rng.choice([2, 3, 4])
        u = kschur.random_grassmannian(k, rng.randint(0, 6), rng)
        m = rng.randint(1, k)
        for v in kschur.pieri_kschur(u, m):
            assert affineperm.is_grassmannian(v)
            assert affineperm.length_affine(v) == affineperm.length_affine(u) + m


def test_k_matrix_degree_one():
    km = kschur.k_matrix(2, 1)
    assert km.rows == [(1,)]
    assert km.columns[0].window == (0, 2, 4)
    assert km.entry((1,), km.columns[0]) == 1


def test_k_matrix_unitriangular():
    for k in (2, 3, 4):
        for degree in range(1, 6):
            assert kschur.k_matrix(k, degree).is_unitriangular()


def test_k_matrix_classical_limit():
    for degree in range(1, 6):
        for k in (degree, 5):
            km = kschur.k_matrix(k, degree)
            for lam in km.rows:
                for mu, u_mu in zip(km.rows, km.columns):
                    assert km.entry(lam, u_mu) == combinat.kostka(mu, lam)


def test_kschur_in_h():
    ident = AffinePermutation.identity(3)
    _, v = kschur.weak_covers(ident)[0]
    assert kschur.kschur_in_h(v).terms == {(1,): 1}

    km = kschur.k_matrix(2, 2)
    u2 = km.columns[km.rows.index((2,))]
    assert kschur.kschur_in_h(u2).terms == {(2,): 1}

    # classical limit: s_21 = h_21 - h_3
    km = kschur.k_matrix(5, 3)
    u21 = km.columns[km.rows.index((2, 1))]
    assert kschur.kschur_in_h(u21).terms == {(2, 1): 1, (3,): -1}


def test_kschur_in_h_reproduces_h_products():
    # substituting the h expansions back into the Pieri matrix is the identity
    for k, degree in [(2, 3), (2, 4), (3, 4)]:
        km = kschur.k_matrix(k, degree)
        for lam, u in zip(km.rows, km.columns):
            recomposed: dict = {}
            for mu, c in kschur.kschur_in_h(u).terms.items():
                for nu, u_nu in zip(km.rows, km.columns):
                    recomposed[nu] = recomposed.get(nu, 0) + c * km.entry(mu, u_nu)
            assert {nu for nu, c in recomposed.items() if c} == {lam}
            assert recomposed[lam] == 1


def test_k_function_weak_example():
    u = AffinePermutation((0, 2, 4))
    w = AffinePermutation((-3, 4, 5))
    km = kschur.k_function_weak(u, w)
    assert km.terms == {(1, 1, 1): 1, (2, 1): 1, (1, 2): 1}
    assert qsym.m_to_f(km).terms == {(1, 2): 1, (2, 1): 1, (1, 1, 1): -1}
    assert qsym.schur_expand(km).terms == {(2, 1): 1, (1, 1, 1): -1}
    assert kschur.k_function_weak(u, u).terms == {(): 1}


def test_k_function_weak_symmetric_on_samples():
    rng = random.Random(8)
    for _ in range(10):
        k = rng.choice([2, 3])
        u = kschur.random_grassmannian(k, rng.randint(0, 4), rng)
        w = u
        for _ in range(rng.randint(1, 3)):
            covers = kschur.weak_covers(w)
            w = rng.choice(covers)[1]
        assert qsym.is_symmetric(kschur.k_function_weak(u, w))


def test_grassmannians_of_length_matches_kbounded_count():
    for k in (2, 3, 4):
        for d in range(0, 6):
            us = kschur.grassmannians_of_length(k, d)
            assert len(us) == len(combinat.partitions_of(d, max_part=k))
            assert len({kschur.kbounded_of(u) for u in us}) == len(us)
