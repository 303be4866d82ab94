"""CSS construction, distances, and degeneracy evidence."""

from __future__ import annotations

import numpy as np
import pytest

from duadic import _linalg
from duadic.codes import LinearCode, dual
from duadic.duadic import construct_pairs, duadic_codes, product_duadic
from duadic.errors import EnumerationCapError, NoSplittingError
from duadic.gf import field_from_order
from duadic.groups import builtin_mu_minus1, builtin_mu_swap, cyclic_group, group_abelian
from duadic.quantum import (
    DistanceRecord,
    css_build,
    css_distance,
    degeneracy_report,
    quantum_duadic,
)

from conftest import naive_codewords


@pytest.fixture(scope="module")
def f2():
    return field_from_order(2)


@pytest.fixture(scope="module")
def steane(f2):
    return quantum_duadic(f2, cyclic_group(7), builtin_mu_minus1(cyclic_group(7)))


def naive_css_distance(code):
    """Min weight over (D \\ C) union (C-perp \\ D-perp) by full enumeration."""
    field = code.field
    best = None
    for big, small in ((code.code_d, code.code_c), (dual(code.code_c), code.dual_d)):
        for word in naive_codewords(field, big.gen):
            vec = np.array(word, dtype=np.int64)
            if small.contains(vec):
                continue
            w = int(np.count_nonzero(vec))
            best = w if best is None else min(best, w)
    return best


class TestCssBuild:
    def test_c_equals_d_gives_k_zero(self, f2):
        c = LinearCode(f2, np.array([[1, 1, 0], [0, 1, 1]], dtype=np.int64))
        code = css_build(c, c)
        assert code.k == 0

    def test_steane_parameters(self, steane):
        assert (steane.n, steane.k) == (7, 1)
        assert steane.distance == DistanceRecord(3, True, "coset-enumeration")
        assert steane.params() == "[[7,1,3]]_2"

    def test_rejects_non_nested(self, f2):
        c = LinearCode(f2, np.array([[1, 0, 0]], dtype=np.int64))
        d = LinearCode(f2, np.array([[0, 1, 0]], dtype=np.int64))
        with pytest.raises(ValueError, match="contained"):
            css_build(c, d)

    def test_stabilizer_orthogonality(self, steane):
        prod = _linalg.matmul(steane.field, steane.x_stabilizers, steane.z_stabilizers.T)
        assert not np.any(prod)

    def test_k_identity(self, f2):
        for n, q in [(7, 2), (11, 3)]:
            field = field_from_order(q)
            g = cyclic_group(n)
            pair = construct_pairs(builtin_mu_minus1(g), field, g)[0]
            codes = duadic_codes(pair)
            code = css_build(codes.c_e, codes.d_e)
            assert code.k == codes.d_e.k - codes.c_e.k == 1


class TestCssDistance:
    def test_steane_exact(self, steane):
        assert css_distance(steane) == DistanceRecord(3, True, "coset-enumeration")

    def test_matches_naive_both_sides(self, steane):
        assert css_distance(steane).value == naive_css_distance(steane)

    def test_z33_swap_exact_and_square_bound(self, f2):
        g = group_abelian([3, 3])
        code = quantum_duadic(f2, g, builtin_mu_swap(g, 2))
        assert code.params() == "[[9,1,3]]_2"
        assert code.distance.exact
        assert code.distance.value ** 2 >= 9
        assert css_distance(code).value == naive_css_distance(code)

    def test_cap_returns_fallback(self, steane):
        bound = DistanceRecord(3, False, "odd-like-sharpened-bound")
        assert css_distance(steane, cap=4, fallback=bound) == bound

    def test_cap_without_fallback_raises(self, steane):
        with pytest.raises(EnumerationCapError):
            css_distance(steane, cap=4)

    def test_k_zero_rejected(self, f2):
        c = LinearCode(f2, np.array([[1, 1, 0]], dtype=np.int64))
        code = css_build(c, c)
        with pytest.raises(ValueError, match="k = 0"):
            css_distance(code)


class TestQuantumDuadic:
    def test_steane(self, steane):
        assert steane.params() == "[[7,1,3]]_2"
        d = steane.distance.value
        assert d * d - d + 1 >= 7

    def test_golay_23(self, f2):
        g = cyclic_group(23)
        code = quantum_duadic(f2, g, builtin_mu_minus1(g))
        assert code.params() == "[[23,1,7]]_2"
        assert code.distance.exact
        assert 7 * 7 - 7 + 1 >= 23

    def test_no_splitting(self, f2):
        g = cyclic_group(9)
        with pytest.raises(NoSplittingError):
            quantum_duadic(f2, g, builtin_mu_minus1(g))

    def test_nonabelian_frobenius21_over_gf4(self, frobenius21):
        f4 = field_from_order(4)
        code = quantum_duadic(f4, frobenius21, builtin_mu_minus1(frobenius21))
        assert code.params() == "[[21,1,6]]_4"
        d = code.distance.value
        assert code.distance.exact and d * d - d + 1 >= 21

    def test_nonabelian_heisenberg27_bound_above_cap(self, heisenberg27):
        f4 = field_from_order(4)
        code = quantum_duadic(f4, heisenberg27, builtin_mu_minus1(heisenberg27))
        assert code.params() == "[[27,1,>=6]]_4"
        assert not code.distance.exact
        assert code.distance.provenance == "odd-like-sharpened-bound"

    def test_order81_bound_tagged(self, f2):
        g = group_abelian([3, 3])
        pair = construct_pairs(builtin_mu_swap(g, 2), f2, g)[0]
        prod = product_duadic(pair, pair)
        codes = duadic_codes(prod)
        code = css_build(codes.c_e, codes.d_e, witnesses=prod.witnesses, pair=prod)
        code.distance = css_distance(
            code, fallback=DistanceRecord(9, False, "odd-like-square-bound")
        )
        assert code.params() == "[[81,1,>=9]]_2"
        assert not code.distance.exact


class TestDegeneracy:
    def test_steane_not_degenerate(self, steane):
        report = degeneracy_report(steane)
        assert not report.degenerate
        assert all(s.exact and not s.counts for s in report.sides)

    def test_order81_degenerate_with_weight4_words(self, f2):
        g = group_abelian([3, 3])
        pair = construct_pairs(builtin_mu_swap(g, 2), f2, g)[0]
        prod = product_duadic(pair, pair)
        codes = duadic_codes(prod)
        code = css_build(codes.c_e, codes.d_e, witnesses=prod.witnesses, pair=prod)
        code.distance = DistanceRecord(9, False, "odd-like-square-bound")
        report = degeneracy_report(code)
        assert report.degenerate
        by_side = {s.side: s for s in report.sides}
        assert not by_side["C"].exact
        assert by_side["C"].counts and by_side["C"].counts[0][0] == 4
        assert by_side["C"].counts[0][1] >= 81
        assert by_side["D-perp"].counts and by_side["D-perp"].counts[0][0] == 4

    def test_zero_dimensional_side(self, f2):
        full = LinearCode(f2, np.eye(4, dtype=np.int64))
        zero = LinearCode(f2, np.zeros((0, 4), dtype=np.int64))
        code = css_build(zero, full)
        code.distance = DistanceRecord(1, True, "coset-enumeration")
        report = degeneracy_report(code)
        assert all(not s.counts for s in report.sides)

    def test_requires_distance(self, f2):
        g = cyclic_group(7)
        pair = construct_pairs(builtin_mu_minus1(g), f2, g)[0]
        codes = duadic_codes(pair)
        code = css_build(codes.c_e, codes.d_e)
        with pytest.raises(ValueError, match="distance"):
            degeneracy_report(code)
