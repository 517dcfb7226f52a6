from fractions import Fraction as F
from itertools import combinations_with_replacement, product

import pytest

from psl2rep import higgs
from psl2rep.components import BoundarySpec, Signature, describe_component, euler_set
from psl2rep.errors import ExcludedCase, InvalidSignature, NotHyperbolizable
from psl2rep.uniformization import (
    BoundaryLengthSpec,
    compact_geometric,
    gauss_bonnet_e,
    length_to_class,
    mapped_signature,
    uniformization_component,
)

Cone = BoundaryLengthSpec.cone
Cusp = BoundaryLengthSpec.cusp
Bdry = BoundaryLengthSpec.boundary


def random_config(rng):
    while True:
        g = int(rng.integers(0, 4))
        n = int(rng.integers(1, 6))
        specs = []
        for _ in range(n):
            pick = rng.integers(0, 3)
            if pick == 0:
                specs.append(Cone(F(int(rng.integers(1, 25)), int(rng.integers(1, 7)))))
            elif pick == 1:
                specs.append(Cusp())
            else:
                specs.append(Bdry(F(int(rng.integers(1, 20)), 4)))
        if 2 - 2 * g - n < 0 and gauss_bonnet_e(g, specs) > 0:
            return g, specs


class TestGaussBonnet:
    def test_examples(self):
        assert gauss_bonnet_e(0, [Cone(F(1, 2))] * 3) == F(1, 4)
        assert gauss_bonnet_e(2, [Cone(5)]) == F(1, 2)
        assert gauss_bonnet_e(1, [Cusp()]) == 1

    def test_boundary_has_no_cone_term(self):
        assert gauss_bonnet_e(0, [Bdry(1), Bdry(F(3, 2)), Cusp()]) == 1

    def test_non_hyperbolic_surface(self):
        with pytest.raises(InvalidSignature):
            gauss_bonnet_e(0, [Cusp(), Cusp()])

    def test_spec_validation(self):
        with pytest.raises(InvalidSignature):
            Cone(0)
        with pytest.raises(InvalidSignature):
            Bdry(F(-1, 2))
        with pytest.raises(InvalidSignature):
            BoundaryLengthSpec("geodesic")


class TestDictionary:
    def test_examples(self):
        assert length_to_class(Cone(4)) == BoundarySpec.identity()
        assert length_to_class(Cusp()) == BoundarySpec.positive_unipotent()
        assert length_to_class(Cone(1)) == BoundarySpec.elliptic(F(1, 2))
        assert length_to_class(Bdry(3)) == BoundarySpec.hyperbolic()

    def test_large_cone_keeps_fractional_part(self):
        assert length_to_class(Cone(5)) == BoundarySpec.elliptic(F(1, 2))
        assert length_to_class(Cone(F(7, 3))) == BoundarySpec.elliptic(F(1, 6))


class TestComponent:
    def test_genus_two_large_cone(self):
        c = uniformization_component(2, [Cone(5)])
        assert (c.e, c.m, c.s0, c.rank, c.base_degree) == (F(1, 2), 2, 0, 2, 2)

    def test_rigid_pants(self):
        c = uniformization_component(0, [Cone(F(1, 2))] * 3)
        assert (c.e, c.m, c.rank, c.base_degree) == (F(1, 4), 0, 0, 0)

    def test_removed_sets(self):
        c = uniformization_component(1, [Cusp(), Bdry(2), Cone(F(1, 3))])
        assert c.removed_open == {0, 1} and c.removed_closure == {1}

    def test_not_hyperbolizable(self):
        with pytest.raises(NotHyperbolizable):
            uniformization_component(0, [Cone(1), Cone(1), Cone(1)])
        with pytest.raises(NotHyperbolizable):
            uniformization_component(1, [Cone(2)])

    def test_agreement_with_classifier(self, rng):
        for _ in range(50):
            g, specs = random_config(rng)
            c = uniformization_component(g, specs)
            sig = mapped_signature(g, specs)
            assert c.e in euler_set(sig)
            open_ = describe_component(sig, c.e)
            closure = describe_component(sig, c.e, closure=True)
            assert (c.m, c.rank, c.base_degree) == (open_.m, open_.bundle_rank, open_.base_sym_degree)
            assert c.removed_open == open_.base_removed
            assert c.removed_closure == closure.base_removed


def table_one_compact(sig, e):
    """Is some sigma-fixed stratum lifting sig at Euler number e compact?"""
    for choice in product(*(higgs.psl_lifts(s) for s in sig.specs)):
        w = [c.weight for c in choice]
        res = [c.residue for c in choice]
        for st in higgs.enumerate_strata(w, res, 0, sig.genus):
            if st.a == tuple(c.a for c in choice) and st.e == e:
                return higgs.is_compact(st).compact
    raise AssertionError(f"no stratum lifts {sig} at e = {e}")


class TestGeometricCompactness:
    def test_example(self):
        sig = Signature(0, tuple(BoundarySpec.elliptic(F(r)) for r in ("1/4", "1/4", "1/8", "1/8")))
        res = compact_geometric(sig, F(1, 4))
        assert res.compact and res.all_monodromies_geometric

    def test_positive_genus(self):
        sig = Signature(1, (BoundarySpec.elliptic(F(1, 4)),) * 4)
        for e in euler_set(sig):
            assert not compact_geometric(sig, e).compact

    def test_hyperbolic_excluded(self):
        sig = Signature(0, (BoundarySpec.elliptic(F(1, 8)),) * 3 + (BoundarySpec.hyperbolic(),))
        assert not any(compact_geometric(sig, e).compact for e in euler_set(sig))

    def test_small_cases_excluded(self):
        with pytest.raises(ExcludedCase):
            compact_geometric(Signature(0, (BoundarySpec.elliptic(F(1, 4)),) * 3), F(1, 4))
        sig = Signature(0, (BoundarySpec.identity(),) + (BoundarySpec.elliptic(F(1, 4)),) * 3)
        with pytest.raises(ExcludedCase):
            compact_geometric(sig, F(1, 4))

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_agrees_with_higgs(self, n):
        menu = [F(1, 8), F(1, 4), F(1, 3), F(1, 2), F(2, 3)]
        checked = 0
        for rs in combinations_with_replacement(menu, n):
            sig = Signature(0, tuple(BoundarySpec.elliptic(r) for r in rs))
            for e in euler_set(sig):
                assert compact_geometric(sig, e).compact == table_one_compact(sig, e)
                checked += 1
        assert checked
