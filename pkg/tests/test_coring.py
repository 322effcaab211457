"""Corings, comodules, dual rings, colinear homs, grouplikes."""

import pytest

from coringlab.algmod import FBimodule, trivial_algebra
from coringlab.coring import (Comodule, EndAlgebra, Grouplike, co_opposite,
                              colinear_homs, comodule_direct_sum, dual_action,
                              dual_ring, grouplike_comodule, trivial_coring,
                              zero_comodule)
from coringlab.exactla import AxiomError, Matrix, QQ

F = QQ


def test_trivial_coring_axioms():
    c = trivial_coring(trivial_algebra(F), name="C")
    assert c.dim == 1
    c.validate()


def test_dual_ring_of_trivial_coring_is_base(e2):
    # fixture E1-style: base Q gives a one-dimensional dual
    c = trivial_coring(trivial_algebra(F))
    d = dual_ring(c)
    assert d.dim == 1
    # over the group algebra of E2, the trivial coring's dual is the base
    a = e2.algebras["A"]
    d2 = dual_ring(trivial_coring(a))
    assert d2.dim == a.dim


def test_dual_ring_e2_dimension(e2):
    # the coring is free of rank 2 over a 2-dimensional base
    d = dual_ring(e2.corings["C"])
    assert d.dim == 4
    d.algebra.validate()


def test_dual_ring_e4_dimension(e4):
    d = dual_ring(e4.corings["C"])
    assert d.dim == 5
    d.algebra.validate()


def test_right_dual_ring(e2):
    d = dual_ring(e2.corings["C"], side="right")
    d.algebra.validate()
    assert d.dim == 4


def test_dual_action_unital_associative(e2):
    sigma = e2.comodules["Sigma"]
    dual, mod = dual_action(sigma)
    mod.validate()
    # the counit acts as the identity
    assert mod.right_act_vec(dual.algebra.unit) == Matrix.identity(F, sigma.dim)


def test_dual_action_e3_counit_identity(e3):
    sigma = e3.comodules["Sigma"]
    dual, mod = dual_action(sigma)
    assert mod.right_act_vec(dual.algebra.unit) == Matrix.identity(F, sigma.dim)


def test_colinear_maps_are_dual_linear(e2):
    # maps commuting with the coaction also commute with the dual action
    sigma = e2.comodules["Sigma"]
    creg = e2.comodules["Creg"]
    dual, smod = dual_action(sigma)
    _, cmod = dual_action(creg, dual)
    for h in colinear_homs(sigma, creg):
        for i in range(dual.dim):
            assert h.matrix.mul(smod.right_act[i]) == \
                cmod.right_act[i].mul(h.matrix)


def test_end_algebra_dimensions(bundles):
    assert bundles["E2"].cm.end.dim == 1   # coinvariants of the group algebra
    assert bundles["E3"].cm.end.dim == 1   # the subfield
    assert bundles["E4"].cm.end.dim == 2   # invariants of the partial action
    assert bundles["E5"].cm.end.dim == 1


def test_end_coring_regular_comodule(e2):
    creg = e2.comodules["Creg"]
    end = EndAlgebra(creg)
    # End of the regular comodule is the left dual ring
    assert end.dim == 4


def test_grouplike_axioms(e3):
    e3.grouplikes["g"].validate()


def test_grouplike_rejected_with_failing_axiom(e3):
    c = e3.corings["C"]
    bad = Grouplike(c, [F.of_int(2) if i == 0 else F.zero
                        for i in range(c.dim)])
    with pytest.raises(AxiomError):
        bad.validate()


def test_grouplike_comodule_roundtrip(e4):
    g = e4.grouplikes["g"]
    sigma = grouplike_comodule(g, name="S")
    sigma.validate()
    assert sigma.dim == e4.algebras["A"].dim


def test_grouplike_e4_is_sum_of_components(e4):
    # the grouplike of the partial-action coring restricts to the ideal units
    g = e4.grouplikes["g"]
    c = e4.corings["C"]
    assert c.counit.mul_vec(g.element) == list(e4.algebras["A"].unit)


def test_comodule_direct_sum(e2):
    sigma = e2.comodules["Sigma"]
    both = comodule_direct_sum(sigma, sigma, name="SS")
    both.validate()
    assert both.dim == 2 * sigma.dim


def test_zero_comodule(e2):
    z = zero_comodule(e2.corings["C"])
    z.validate()
    assert z.dim == 0
    assert EndAlgebra(z).dim == 0


def test_coinvariants_match_grouplike_commutant(e3):
    # endomorphisms of the grouplike comodule = {a : g·a = a·g}
    c = e3.corings["C"]
    g = e3.grouplikes["g"].element
    a = e3.algebras["A"]
    end = EndAlgebra(e3.comodules["Sigma"])
    commutant = []
    for i in range(a.dim):
        if c.carrier.right_act[i].mul_vec(g) == c.carrier.left_act[i].mul_vec(g):
            commutant.append(i)
    assert end.dim == len(commutant) == 1


def test_co_opposite(e2):
    cop = co_opposite(e2.corings["C"])
    cop.validate()
    assert cop.dim == e2.corings["C"].dim


def test_comodule_validation_catches_broken_coaction(e2):
    sigma = e2.comodules["Sigma"]
    bad = sigma.coaction.copy()
    bad.data[0][0] = F.add(bad.data[0][0], F.one)
    with pytest.raises(AxiomError):
        Comodule(sigma.coring, sigma.carrier, bad, name="bad").validate()
