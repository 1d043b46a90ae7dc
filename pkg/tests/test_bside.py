"""Tests for the derived-category side: quiver Ext spaces, the dual
exterior algebra, resolutions, and the generation certificate."""

import itertools
from fractions import Fraction

import pytest

from wpmirror.bside import (
    DualElement,
    QuiverElement,
    cm_sequence,
    compose_dual,
    compose_quiver,
    dual_ext,
    dual_identity,
    ext_pushforward,
    generation_certificate,
    resolution_summands,
    verify_prop6_via_resolution,
)
from wpmirror.weights import ExteriorBasisElement, Monomial, Weights, graded_dim


def brute_dual_dims(w, k, i):
    """Independent oracle: count index subsets by total weight directly."""
    if k < i:
        return {}
    dims = {}
    for r in range(w.n + 2):
        for J in itertools.combinations(range(w.n + 1), r):
            if sum(w.a[x] for x in J) <= k - i:
                dims[r] = dims.get(r, 0) + 1
    return dims


class TestExtPushforward:
    @pytest.mark.parametrize("a", [(1, 1), (2, 3), (1, 2, 3)])
    def test_dims_follow_graded_pieces(self, a):
        w = Weights(a)
        for j in range(w.l - 1):
            for k in range(w.l - 1):
                hom = ext_pushforward(w, j, k)
                if k < j:
                    assert hom.total_dim == 0  # semi-orthogonality
                else:
                    assert hom.dim(0) == graded_dim(w, k - j)
                    assert hom.dim(1) == graded_dim(w, k - j - 1)

    def test_endomorphisms_scalar(self):
        w = Weights((2, 3))
        for j in range(w.l - 1):
            assert ext_pushforward(w, j, j).dims_by_degree == {0: 1}

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            ext_pushforward(Weights((2, 3)), 0, 4)


class TestComposeQuiver:
    def test_degrees_add_and_monomials_multiply(self):
        w = Weights((2, 3))
        f = QuiverElement(0, 2, 0, Monomial((1, 0)))
        g = QuiverElement(2, 3, 1, Monomial((0, 0)))
        h = compose_quiver(g, f)
        assert h.coh_degree == 1 and h.monomial.exponents == (1, 0)
        assert h.weight() == f.weight() + g.weight()

    def test_two_degree_one_vanish(self):
        f = QuiverElement(0, 1, 1, Monomial((0, 0)))
        g = QuiverElement(1, 2, 1, Monomial((0, 0)))
        assert compose_quiver(g, f) is None

    def test_mismatched_objects(self):
        f = QuiverElement(0, 1, 0, Monomial((0, 0)))
        g = QuiverElement(2, 3, 0, Monomial((0, 0)))
        with pytest.raises(ValueError):
            compose_quiver(g, f)


class TestDualExt:
    @pytest.mark.parametrize("a", [(1, 1), (2, 3), (1, 4), (1, 2, 3), (2, 2, 5)])
    def test_dims_match_brute_force(self, a):
        w = Weights(a)
        for k in range(w.l - 1):
            for i in range(w.l - 1):
                assert dual_ext(w, k, i).dims_by_degree == brute_dual_dims(w, k, i)

    def test_truncation_example(self):
        w = Weights((2, 3))
        # gap 3 admits e0 (weight 2) and e1 (weight 3) but not e01 (weight 5)
        labels = [lab.subset for _, lab in dual_ext(w, 3, 0).basis]
        assert labels == [(), (0,), (1,)]

    def test_directedness(self):
        w = Weights((2, 3))
        assert dual_ext(w, 0, 3).total_dim == 0


class TestComposeDual:
    def test_unit_composition(self):
        w = Weights((2, 3))
        u = DualElement(3, 0, ExteriorBasisElement((0,)))
        v = dual_identity(w, 3)
        out = compose_dual(w, u, v)
        assert out.label.subset == (0,) and out.coefficient == 1

    def test_weight_truncation_kills(self):
        w = Weights((2, 3))
        # e0 * e1 has weight 5 > 4, the largest available gap
        u = DualElement(3, 1, ExteriorBasisElement((0,)))
        v = DualElement(4, 3, ExteriorBasisElement((1,)))
        assert compose_dual(w, u, v) is None

    def test_overlap_kills(self):
        w = Weights((1, 1, 3))
        u = DualElement(2, 1, ExteriorBasisElement((0,)))
        v = DualElement(3, 2, ExteriorBasisElement((0,)))
        assert compose_dual(w, u, v) is None

    def test_anticommutation_sign(self):
        w = Weights((1, 1, 3))
        # e1 after e0 vs e0 after e1 between the same simples
        a = compose_dual(w, DualElement(1, 0, ExteriorBasisElement((1,))),
                         DualElement(2, 1, ExteriorBasisElement((0,))))
        b = compose_dual(w, DualElement(1, 0, ExteriorBasisElement((0,))),
                         DualElement(2, 1, ExteriorBasisElement((1,))))
        assert a.label == b.label
        assert a.coefficient == -b.coefficient

    def test_associativity_sample(self):
        w = Weights((1, 1, 1, 2))
        x = DualElement(4, 3, ExteriorBasisElement((0,)), Fraction(1))
        y = DualElement(3, 2, ExteriorBasisElement((1,)), Fraction(1))
        z = DualElement(2, 0, ExteriorBasisElement((2,)), Fraction(1))

        def comp(u, v):
            return compose_dual(w, u, v)

        lhs = comp(comp(z, y), x)
        rhs = comp(z, comp(y, x))
        assert lhs is not None and rhs is not None
        assert lhs.label == rhs.label and lhs.coefficient == rhs.coefficient


class TestCmSequence:
    def test_greedy_fill(self):
        w = Weights((2, 3))
        assert cm_sequence(w, 0).c == (0, 0)
        assert cm_sequence(w, 1).c == (1, 0)
        assert cm_sequence(w, 2).c == (2, 0)
        assert cm_sequence(w, 3).c == (2, 1)
        assert cm_sequence(w, 5).c == (2, 3)

    def test_bounds(self):
        with pytest.raises(ValueError):
            cm_sequence(Weights((2, 3)), 6)


class TestGenerationCertificate:
    @pytest.mark.parametrize("a", [(1, 1), (2, 3), (1, 2, 3), (1, 1, 2, 3)])
    def test_passes(self, a):
        assert generation_certificate(Weights(a)).passed

    def test_final_step_top_degree(self):
        w = Weights((2, 3))
        report = generation_certificate(w)
        top = [row for row in report.rows
               if row[0] == w.l and len(row[1]) == w.n + 1]
        assert len(top) == 1 and top[0][2] == w.l - 1


class TestResolution:
    def test_default_positions(self):
        w = Weights((2, 3))
        summands = resolution_summands(w, 3)
        positions = {s.homological_position for s in summands}
        assert positions <= set(range(w.n + 1))

    def test_negative_indices_pruned(self):
        w = Weights((2, 3))
        for s in resolution_summands(w, 0, positions=range(6)):
            assert s.projective_index >= 0

    @pytest.mark.parametrize("a", [(2, 3), (1, 4), (1, 2, 3), (2, 2, 5), (1, 1)])
    def test_oracle_agrees_with_dual_ext(self, a):
        w = Weights(a)
        for k in range(w.l - 1):
            for i in range(w.l - 1):
                assert verify_prop6_via_resolution(w, k, i).basis \
                    == dual_ext(w, k, i).basis
