"""Group algebra arithmetic and centrally primitive idempotents."""

from __future__ import annotations

import random

import numpy as np
import pytest

from duadic.algebra import (
    AlgebraElement,
    abelian_character_idempotents,
    alg_mul,
    apply_antiauto,
    hat_group,
    hat_subgroup,
    is_central,
    is_even_like,
    is_idempotent,
    split_primitive_central_idempotents,
)
from duadic.codes import code_from_ideal
from duadic.gf import field_from_order
from duadic.groups import (
    builtin_mu_minus1,
    builtin_mu_swap,
    cyclic_group,
    fq_classes,
    group_abelian,
    group_from_cayley,
)

from conftest import naive_mul


def poly_elem(field, group, exponents):
    """Element sum x^e over exponents, in a cyclic group written as powers of x."""
    return AlgebraElement.from_coeff_list(field, group, [(e % group.order, 1) for e in exponents])


def tuple_elem(field, group, tuples):
    return AlgebraElement.from_coeff_list(field, group, [(group.element_id(t), 1) for t in tuples])


@pytest.fixture(scope="module")
def z7():
    return cyclic_group(7)


@pytest.fixture(scope="module")
def z33():
    return group_abelian([3, 3])


class TestAlgMul:
    def test_unit(self, gf4, z7):
        rng = random.Random(3)
        a = AlgebraElement(gf4, z7, [rng.randrange(4) for _ in range(7)])
        one = AlgebraElement.one(gf4, z7)
        assert alg_mul(a, one) == a
        assert alg_mul(one, a) == a

    def test_squaring_char2(self, gf2, z7):
        a = poly_elem(gf2, z7, [0, 1, 2, 4])
        assert alg_mul(a, a) == a

    def test_paper_idempotent_z33(self, gf2, z33):
        e1 = tuple_elem(gf2, z33, [(1, 0), (2, 0), (1, 1), (2, 2)])
        assert alg_mul(e1, e1) == e1

    def test_context_mismatch(self, gf2, gf4, z7):
        a = AlgebraElement.one(gf2, z7)
        b = AlgebraElement.one(gf4, z7)
        with pytest.raises(ValueError, match="context"):
            alg_mul(a, b)

    @pytest.mark.parametrize("q,orders", [(2, [7]), (4, [5]), (9, [3, 3]), (3, [2, 2])])
    def test_against_naive_convolution(self, q, orders):
        field = field_from_order(q)
        group = group_abelian(orders)
        rng = random.Random(q * 17)
        for _ in range(4):
            a = AlgebraElement(field, group, [rng.randrange(q) for _ in range(group.order)])
            b = AlgebraElement(field, group, [rng.randrange(q) for _ in range(group.order)])
            assert alg_mul(a, b) == naive_mul(a, b)

    def test_against_naive_nonabelian(self, frobenius21, gf2):
        rng = random.Random(5)
        a = AlgebraElement(gf2, frobenius21, [rng.randrange(2) for _ in range(21)])
        b = AlgebraElement(gf2, frobenius21, [rng.randrange(2) for _ in range(21)])
        assert alg_mul(a, b) == naive_mul(a, b)

    @pytest.mark.parametrize("group_fixture", ["frobenius21", "heisenberg27"])
    def test_associativity_exhaustive_basis(self, group_fixture, gf2, request):
        g = request.getfixturevalue(group_fixture)
        basis = [AlgebraElement.basis(gf2, g, i) for i in range(g.order)]
        for i in range(g.order):
            for j in range(g.order):
                left_ij = alg_mul(basis[i], basis[j])
                for k in range(g.order):
                    left = alg_mul(left_ij, basis[k])
                    right = alg_mul(basis[i], alg_mul(basis[j], basis[k]))
                    assert left == right

    @pytest.mark.parametrize("q,orders", [(2, [3, 3]), (5, [7]), (4, [9])])
    def test_associativity_random(self, q, orders):
        field = field_from_order(q)
        group = group_abelian(orders)
        rng = random.Random(q + sum(orders))
        for _ in range(5):
            a, b, c = (
                AlgebraElement(field, group, [rng.randrange(q) for _ in range(group.order)])
                for _ in range(3)
            )
            assert alg_mul(alg_mul(a, b), c) == alg_mul(a, alg_mul(b, c))

    def test_pow(self, gf2, z7):
        a = poly_elem(gf2, z7, [1])
        assert (a ** 7) == AlgebraElement.one(gf2, z7)
        assert (a ** 0) == AlgebraElement.one(gf2, z7)


class TestHat:
    def test_identity_subgroup(self, gf4, z7):
        assert hat_subgroup(gf4, z7, [0]) == AlgebraElement.one(gf4, z7)

    def test_ghat_z7(self, gf2, z7):
        ghat = hat_group(gf2, z7)
        assert ghat.vec.tolist() == [1] * 7
        assert is_idempotent(ghat)

    def test_ghat_z33(self, gf2, z33):
        assert hat_group(gf2, z33).vec.tolist() == [1] * 9

    def test_repetition_ideal_dim_one(self, gf2, z7):
        assert code_from_ideal(hat_group(gf2, z7)).k == 1

    def test_proper_subgroup_hat(self, gf2, z33):
        a = z33.element_id((1, 0))
        n_hat = hat_subgroup(gf2, z33, [0, a, z33.power(a, 2)])
        assert is_idempotent(n_hat) and is_central(n_hat)
        assert n_hat.weight() == 3

    def test_rejects_non_subgroup(self, gf2, z7):
        with pytest.raises(ValueError, match="subgroup"):
            hat_subgroup(gf2, z7, [0, 1])

    def test_rejects_non_invertible_size(self):
        f7 = field_from_order(7)
        with pytest.raises(ValueError, match="invertible"):
            hat_subgroup(f7, cyclic_group(7), range(7))


class TestPredicates:
    def test_even_like(self, gf2, z7, z33):
        assert is_even_like(AlgebraElement.zero(gf2, z7))
        assert is_even_like(tuple_elem(gf2, z33, [(1, 0), (2, 0), (1, 1), (2, 2)]))
        assert not is_even_like(poly_elem(gf2, z7, [0, 1, 3]))

    def test_central_abelian(self, gf9, z33):
        rng = random.Random(1)
        a = AlgebraElement(gf9, z33, [rng.randrange(9) for _ in range(9)])
        assert is_central(a)

    def test_central_nonabelian(self, frobenius21, gf2):
        assert is_central(hat_group(gf2, frobenius21))
        # a is conjugated to a^2, so the basis element a is not central
        assert not is_central(AlgebraElement.basis(gf2, frobenius21, 3))


class TestApplyAntiauto:
    def test_mu_minus1_on_qr_idempotent(self, gf2, z7):
        mu = builtin_mu_minus1(z7)
        e = poly_elem(gf2, z7, [0, 1, 2, 4])
        assert apply_antiauto(mu, e) == poly_elem(gf2, z7, [0, 3, 5, 6])

    def test_swap_sends_e1_to_f1(self, gf2, z33):
        mu = builtin_mu_swap(z33, 2)
        e1 = tuple_elem(gf2, z33, [(1, 0), (2, 0), (1, 1), (2, 2)])
        f1 = tuple_elem(gf2, z33, [(0, 1), (0, 2), (1, 2), (2, 1)])
        assert apply_antiauto(mu, e1) == f1

    def test_mu_minus1_fixes_e1(self, gf2, z33):
        mu = builtin_mu_minus1(z33)
        e1 = tuple_elem(gf2, z33, [(1, 0), (2, 0), (1, 1), (2, 2)])
        assert apply_antiauto(mu, e1) == e1

    @pytest.mark.parametrize("q,orders", [(2, [7]), (4, [3, 3]), (9, [5])])
    def test_antimultiplicative_and_isometric(self, q, orders):
        field = field_from_order(q)
        group = group_abelian(orders)
        mu = builtin_mu_minus1(group)
        rng = random.Random(q)
        for _ in range(4):
            a = AlgebraElement(field, group, [rng.randrange(q) for _ in range(group.order)])
            b = AlgebraElement(field, group, [rng.randrange(q) for _ in range(group.order)])
            assert apply_antiauto(mu, alg_mul(a, b)) == alg_mul(
                apply_antiauto(mu, b), apply_antiauto(mu, a)
            )
            assert apply_antiauto(mu, a).weight() == a.weight()

    def test_fixes_ghat(self, frobenius21, gf4):
        mu = builtin_mu_minus1(frobenius21)
        ghat = hat_group(gf4, frobenius21)
        assert apply_antiauto(mu, ghat) == ghat

    def test_nontrivial_frobenius_part(self, gf4, z7):
        from duadic.groups import Antiautomorphism

        mu = Antiautomorphism(z7, z7.inverse.copy(), frobenius_power=1)
        a = AlgebraElement(gf4, z7, [2, 3, 0, 0, 0, 0, 1])
        out = apply_antiauto(mu, a)
        # coefficients are squared and moved to inverse positions
        assert out.vec[0] == gf4.frobenius(2)
        assert out.vec[6] == gf4.frobenius(3)
        assert out.vec[1] == gf4.frobenius(1)


class TestSplitIdempotents:
    def test_z7_exact_set(self, gf2, z7):
        s = split_primitive_central_idempotents(gf2, z7)
        supports = {e.key() for e in s}
        want = {
            tuple(np.bincount([0, 1, 2, 4], minlength=7)),
            tuple(np.bincount([0, 3, 5, 6], minlength=7)),
            (1,) * 7,
        }
        assert supports == want
        s.validate()

    def test_z33_count_and_dims(self, gf2, z33):
        s = split_primitive_central_idempotents(gf2, z33)
        assert len(s) == 5
        dims = sorted(code_from_ideal(e).k for e in s)
        assert dims == [1, 2, 2, 2, 2]
        s.validate()

    def test_trivial_group(self, gf9):
        g = group_from_cayley([[0]])
        s = split_primitive_central_idempotents(gf9, g)
        assert len(s) == 1
        assert s[0] == AlgebraElement.one(gf9, g)

    def test_gcd_violation(self, z33):
        f3 = field_from_order(3)
        with pytest.raises(ValueError, match="gcd"):
            split_primitive_central_idempotents(f3, z33)

    @pytest.mark.parametrize(
        "q,orders",
        [(2, [15]), (3, [11]), (4, [9]), (5, [9]), (9, [7]), (4, [3, 3]), (2, [9, 3])],
    )
    def test_validates_and_counts_classes(self, q, orders):
        field = field_from_order(q)
        group = group_abelian(orders)
        s = split_primitive_central_idempotents(field, group)
        assert len(s) == len(fq_classes(group, q))
        s.validate()

    @pytest.mark.parametrize("q", [2, 4, 5])
    def test_nonabelian_frobenius21(self, frobenius21, q):
        field = field_from_order(q)
        s = split_primitive_central_idempotents(field, frobenius21)
        assert len(s) == len(fq_classes(frobenius21, q))
        s.validate()

    def test_mu_stability(self, gf2, z33):
        s = split_primitive_central_idempotents(gf2, z33)
        for mu in (builtin_mu_minus1(z33), builtin_mu_swap(z33, 2)):
            for e in s:
                assert apply_antiauto(mu, e) in s.members

    def test_component_dimensions_sum_to_n(self, frobenius21):
        field = field_from_order(2)
        s = split_primitive_central_idempotents(field, frobenius21)
        assert sum(code_from_ideal(e).k for e in s) == 21


class TestCharacterOracle:
    def test_z7_orbit_idempotent(self, gf2, z7):
        s = abelian_character_idempotents(gf2, z7)
        qr = poly_elem(gf2, z7, [0, 1, 2, 4])
        assert qr in s.members

    def test_trivial_orbit_gives_ghat(self, gf2, z33):
        s = abelian_character_idempotents(gf2, z33)
        assert s[s.trivial_index] == hat_group(gf2, z33)

    def test_matches_splitting_z33(self, gf2, z33):
        assert abelian_character_idempotents(gf2, z33) == split_primitive_central_idempotents(gf2, z33)

    @pytest.mark.parametrize(
        "q,orders",
        [(2, [45]), (3, [49]), (4, [21]), (5, [27]), (7, [25]), (9, [11]), (2, [3, 9]),
         (3, [5, 5]), (2, [63])],
    )
    def test_matches_splitting_grid(self, q, orders):
        field = field_from_order(q)
        group = group_abelian(orders)
        assert abelian_character_idempotents(field, group) == split_primitive_central_idempotents(field, group)

    def test_rejects_nonabelian(self, frobenius21, gf2):
        with pytest.raises(ValueError, match="abelian"):
            abelian_character_idempotents(gf2, frobenius21)

    @pytest.mark.parametrize(
        "q,orders",
        [(2, [91]), (3, [104]), (2, [11, 11]), (4, [115]), (2, [5, 25])],
    )
    def test_matches_splitting_beyond_81(self, q, orders):
        field = field_from_order(q)
        group = group_abelian(orders)
        assert abelian_character_idempotents(field, group) == split_primitive_central_idempotents(field, group)

    @pytest.mark.parametrize("orders", [[9], [3, 3], [9, 3], [5, 25]])
    def test_table_built_group_uses_greedy_basis(self, orders):
        # strip the product structure so the cyclic decomposition is recomputed
        field = field_from_order(2)
        structured = group_abelian(orders)
        stripped = group_from_cayley(structured.table.copy())
        assert stripped.abelian_orders is None
        got = abelian_character_idempotents(field, stripped)
        want = split_primitive_central_idempotents(field, stripped)
        assert got == want


class TestElementSurface:
    def test_coeffs_and_pairs(self, gf2, z33):
        e1 = tuple_elem(gf2, z33, [(1, 0), (2, 0), (1, 1), (2, 2)])
        assert e1.weight() == 4
        assert e1.to_pairs() == [
            ("a^1*b^0", 1),
            ("a^1*b^1", 1),
            ("a^2*b^0", 1),
            ("a^2*b^2", 1),
        ]
        assert "a^1*b^0" in repr(e1)

    def test_coefficient_vector_immutable(self, gf2, z7):
        a = AlgebraElement.one(gf2, z7)
        with pytest.raises(ValueError):
            a.vec[0] = 0

    def test_rejects_bad_vectors(self, gf2, z7):
        with pytest.raises(ValueError, match="length"):
            AlgebraElement(gf2, z7, [0, 1])
        with pytest.raises(ValueError, match="range"):
            AlgebraElement(gf2, z7, [0, 1, 2, 0, 0, 0, 0])
