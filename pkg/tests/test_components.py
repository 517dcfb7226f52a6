from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st
from oracles import euler_set_by_search, signatures

from psl2rep.components import (
    BoundarySpec,
    Signature,
    class_dimension,
    closed_component,
    components,
    degenerate_inclusion,
    describe_component,
    dualize,
    euler_set,
    frac_rot_of_spec,
    rep_dimension,
)
from psl2rep.errors import InvalidSignature, NotAdmissible, NotDegenerate
from psl2rep.kinds import ClassKind

B = BoundarySpec
HYP = B.hyperbolic()
POS = B.positive_unipotent()
NEG = B.negative_unipotent()
ID = B.identity()


def ell(r):
    return B.elliptic(F(r))


class TestSpecs:
    def test_frac_rot(self):
        assert frac_rot_of_spec(ell("1/3")) == F(1, 3)
        assert frac_rot_of_spec(HYP) == 0
        assert frac_rot_of_spec(NEG) == 0

    @pytest.mark.parametrize("r", [0, 1, F(3, 2), F(-1, 4)])
    def test_elliptic_range(self, r):
        with pytest.raises(InvalidSignature):
            B.elliptic(r)

    def test_rotation_only_on_elliptics(self):
        with pytest.raises(InvalidSignature):
            BoundarySpec(ClassKind.HYPERBOLIC, F(1, 2))
        with pytest.raises(InvalidSignature):
            BoundarySpec(ClassKind.ELLIPTIC)

    def test_signature_must_be_hyperbolic(self):
        with pytest.raises(InvalidSignature):
            Signature(0, (HYP, HYP))
        with pytest.raises(InvalidSignature):
            Signature(1, ())
        assert Signature(2, ()).punctured_euler_char == -2


class TestEulerSet:
    def test_pants(self):
        assert euler_set(Signature(0, (HYP,) * 3)) == [1]

    def test_quarter_turns(self):
        assert euler_set(Signature(0, (ell("1/4"),) * 4)) == [1]

    def test_half_turns_empty(self):
        assert euler_set(Signature(0, (ell("1/2"),) * 4)) == []

    def test_punctured_torus_third(self):
        assert euler_set(Signature(1, (ell("1/3"),))) == [F(2, 3)]

    def test_negative_unipotent(self):
        assert euler_set(Signature(1, (NEG,))) == []
        assert euler_set(Signature(2, (NEG,))) == [1, 2]

    def test_closed_surface_rejected(self):
        with pytest.raises(InvalidSignature):
            euler_set(Signature(2, ()))

    def test_matches_search_oracle(self):
        for g, specs in signatures(2, 4):
            assert euler_set(Signature(g, specs)) == euler_set_by_search(g, specs)

    def test_integrality_and_bounds(self):
        for g, specs in signatures(2, 4):
            sig = Signature(g, specs)
            for e in euler_set(sig):
                k = e + sig.total_frac_rot + sig.s0 + sig.s_minus
                assert k.denominator == 1 and 0 < k <= -sig.punctured_euler_char
                assert 0 < e <= -sig.punctured_euler_char


class TestDescribe:
    def test_torus_hyperbolic(self):
        c = describe_component(Signature(1, (HYP,)), 1)
        assert (c.m, c.bundle_rank, c.base_sym_degree) == (0, 1, 0)
        assert c.base_removed == {0}
        assert c.smooth and not c.closure_variant

    def test_quarter_turns(self):
        c = describe_component(Signature(0, (ell("1/4"),) * 4), 1)
        assert (c.m, c.bundle_rank, c.base_sym_degree) == (0, 1, 0)

    def test_genus_two_positive_unipotent(self):
        c = describe_component(Signature(2, (POS,)), 3)
        assert (c.m, c.bundle_rank, c.base_sym_degree) == (0, 4, 0)
        assert c.base_removed == {0}
        closure = describe_component(Signature(2, (POS,)), 3, closure=True)
        assert closure.base_removed == frozenset()

    def test_not_admissible(self):
        with pytest.raises(NotAdmissible):
            describe_component(Signature(1, (HYP,)), 2)
        with pytest.raises(NotAdmissible):
            describe_component(Signature(1, (ell("1/3"),)), F(1, 3))

    def test_negative_unipotent_subbundles(self):
        sig = Signature(2, (NEG, HYP))
        c = describe_component(sig, 1)
        assert c.removed_subbundles == 1
        assert c.bundle_rank == 3 * 2 - 3 + 2 - c.m + 1
        closure = describe_component(sig, 1, closure=True)
        assert closure.removed_subbundles == 0
        assert not closure.smooth

    def test_positive_unipotent_closure_smoothness(self):
        sig = Signature(1, (POS, HYP))
        flat = describe_component(sig, 2, closure=True)
        assert flat.base_sym_degree == 0 and flat.smooth
        curved = describe_component(sig, 1, closure=True)
        assert curved.base_sym_degree == 1 and not curved.smooth

    def test_dimension_identity(self):
        for g, specs in signatures(2, 4):
            sig = Signature(g, specs)
            dims = [class_dimension(s) for s in specs]
            for c in components(sig):
                assert 2 * (c.bundle_rank + c.base_sym_degree) == rep_dimension(g, len(specs), 3, dims)
                assert c.base_sym_degree >= 0 and c.bundle_rank >= 0

    def test_compact_flag(self):
        c = describe_component(Signature(0, (ell("1/4"),) * 3), F(1, 4))
        assert c.compact and c.complex_dimension == 0
        assert not describe_component(Signature(1, (HYP,)), 1).compact


class TestDegenerateInclusion:
    def test_positive(self):
        rec = degenerate_inclusion(Signature(1, (POS,)), 0, 1)
        assert (rec.kind, rec.base_shift) == ("preimage", -1)
        # with the puncture made trivial there is no positive Euler number left
        assert not rec.degenerate_nonempty

    def test_negative(self):
        rec = degenerate_inclusion(Signature(2, (NEG,)), 0, 1)
        assert (rec.kind, rec.base_shift) == ("subbundle", 0)
        assert rec.degenerate_nonempty

    def test_shifts_match_descriptors(self):
        for kind in (POS, NEG):
            sig = Signature(2, (kind, HYP))
            rec = degenerate_inclusion(sig, 0, 1)
            big = describe_component(sig, 1)
            small = describe_component(sig.replace(0, ID), 1)
            assert small.base_sym_degree - big.base_sym_degree == rec.base_shift
            assert small.bundle_rank - big.bundle_rank == rec.rank_shift

    def test_not_degenerate(self):
        with pytest.raises(NotDegenerate):
            degenerate_inclusion(Signature(1, (HYP,)), 0, 1)


class TestClosed:
    def test_fricke(self):
        c = closed_component(2, 2)
        assert (c.m, c.bundle_rank, c.base_sym_degree) == (0, 3, 0)
        assert 2 * (c.bundle_rank + c.base_sym_degree) == rep_dimension(2, 0, 3, [])

    def test_genus_two_e_one(self):
        c = closed_component(2, 1)
        assert (c.m, c.bundle_rank, c.base_sym_degree) == (1, 2, 1)

    @pytest.mark.parametrize("e", [0, 3, F(1, 2), -1])
    def test_out_of_range(self, e):
        with pytest.raises(NotAdmissible):
            closed_component(2, e)

    @pytest.mark.parametrize("g", [2, 3, 4])
    def test_agrees_with_identity_puncture(self, g):
        for e in range(1, 2 * g - 1):
            closed = closed_component(g, e)
            punctured = describe_component(Signature(g, (ID,)), e)
            assert closed.bundle_rank == punctured.bundle_rank
            assert closed.base_sym_degree == punctured.base_sym_degree


class TestDimensionsAndDuality:
    def test_rep_dimension(self):
        assert rep_dimension(2, 0, 3, []) == 6
        assert rep_dimension(0, 3, 3, [2, 2, 2]) == 0
        assert rep_dimension(1, 1, 3, [2]) == 2

    def test_rep_dimension_rejects(self):
        with pytest.raises(ValueError):
            rep_dimension(1, 2, 3, [2])
        with pytest.raises(InvalidSignature):
            rep_dimension(0, 2, 3, [2, 2])

    def test_dualize_specs(self):
        sig = dualize(Signature(0, (ell("1/4"), POS, HYP)))
        assert sig.specs == (ell("3/4"), NEG, HYP)

    @given(st.lists(st.sampled_from([HYP, POS, NEG, ID, ell("1/3"), ell("1/2")]), min_size=1, max_size=4), st.integers(0, 2))
    def test_dual_involution(self, specs, g):
        if 2 - 2 * g - len(specs) >= 0:
            return
        sig = Signature(g, tuple(specs))
        assert dualize(dualize(sig)) == sig
        assert all(e <= -sig.punctured_euler_char for e in euler_set(sig))

    def test_self_dual_multiset(self):
        sig = Signature(1, (POS, NEG, ell("1/3"), ell("2/3")))
        assert euler_set(dualize(sig)) == euler_set(sig)
