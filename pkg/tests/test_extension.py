"""Coring extensions: axioms, purity, induced coactions, the extension
context and convolution algebras."""

import pytest

from coringlab.algmod import FBimodule, trivial_algebra
from coringlab.coring import Comodule
from coringlab.exactla import AxiomError, Matrix, QQ, UsageError, rank
from coringlab.extension import (CoringExtension, ExtContext, QTildeModule,
                                 check_colinear_maps_remain_colinear,
                                 compute_Qtilde, convolution_algebra,
                                 convolution_inverse, induced_D_coaction,
                                 induced_right_l_action, purity_check,
                                 remark_k_coincidence)
from coringlab.zoo import (build_fixture, grouplike_basis_coalgebra,
                           group_function_coring, trivial_coring,
                           trivial_extension)

F = QQ


def test_extension_axioms_pass_on_fixtures(workspaces):
    for name in ("E1", "E2", "E3", "E4", "E5", "G1", "L1"):
        workspaces[name].extensions["ext"].validate()


def test_trivial_extension_any_coring(e3):
    ext = trivial_extension(e3.corings["C"])
    ext.validate()
    assert ext.purity_certificate == "pure-by-split"


def test_extension_rejects_broken_coaction(e2):
    ext = e2.extensions["ext"]
    bad = ext.cld.sect().mul(ext.tau).copy()
    bad.data[0][0] = F.add(bad.data[0][0], F.one)
    broken = CoringExtension(ext.inner, ext.outer, ext.right_l_act, bad,
                             name="broken")
    with pytest.raises(AxiomError):
        broken.validate()


def test_purity_split_path(e2, e4):
    for ws in (e2, e4):
        ext = ws.extensions["ext"]
        cert = purity_check(ext, [])
        assert cert == "pure-by-split"


def test_purity_split_rejects_wrong_map(e2):
    ext = e2.extensions["ext"]
    bad_split = Matrix.zero(F, 2, 1)
    broken = CoringExtension(ext.inner, ext.outer, ext.right_l_act,
                             ext.cld.sect().mul(ext.tau), split_map=bad_split,
                             name="broken")
    with pytest.raises(AxiomError):
        purity_check(broken, [])


def test_purity_computed_path(workspaces):
    ws = workspaces["L1"]
    ext = ws.extensions["ext"]
    assert ext.split_map is None
    cert = purity_check(ext, [ws.comodules["Creg"]])
    assert cert == "pure"
    assert "Creg" in ext.purity_detail


def test_induced_coaction_refused_without_certificate(e2):
    ext = CoringExtension(e2.extensions["ext"].inner, e2.extensions["ext"].outer,
                          e2.extensions["ext"].right_l_act,
                          e2.extensions["ext"].tau, name="fresh")
    with pytest.raises(UsageError):
        induced_D_coaction(ext, e2.comodules["Sigma"])


def test_induced_coaction_e2_is_group_grading(e2):
    ext = e2.extensions["ext"]
    purity_check(ext, [])
    sigma = e2.comodules["Sigma"]
    tau = induced_D_coaction(ext, sigma)
    tau.validate()
    # the coaction of the comodule algebra: group elements are homogeneous
    amb = tau.mc.sect().mul(tau.coaction)
    assert amb.col(0) == [F.one, F.zero, F.zero, F.zero]
    assert amb.col(1) == [F.zero, F.zero, F.zero, F.one]


def test_induced_coaction_e4_globalized_swap(e4):
    ext = e4.extensions["ext"]
    purity_check(ext, [])
    sigma = e4.comodules["Sigma"]
    tau = induced_D_coaction(ext, sigma)
    tau.validate()
    amb = tau.mc.sect().mul(tau.coaction)
    # component at the nontrivial group element: the swap extended by the
    # identity on the third coordinate
    swap = [[F.zero, F.one, F.zero], [F.one, F.zero, F.zero],
            [F.zero, F.zero, F.one]]
    for j in range(3):
        col = amb.col(j)
        assert [col[r * 2 + 1] for r in range(3)] == \
            [swap[r][j] for r in range(3)]


def test_colinear_maps_stay_colinear(e2):
    ext = e2.extensions["ext"]
    purity_check(ext, [])
    sigma = e2.comodules["Sigma"]
    creg = e2.comodules["Creg"]
    ds = induced_D_coaction(ext, sigma)
    dc = induced_D_coaction(ext, creg)
    pairs = [(sigma, sigma, ds, ds), (sigma, creg, ds, dc),
             (creg, sigma, dc, ds), (creg, creg, dc, dc)]
    assert check_colinear_maps_remain_colinear(ext, pairs)


def test_qtilde_embeds_into_q(bundles):
    for name in ("E2", "E4", "E5"):
        b = bundles[name]
        qt = b.ec.qt
        assert qt.embedding is not None
        assert rank(qt.embedding) == qt.dim


def test_qtilde_trivial_outer_equals_q(bundles):
    b = bundles["E3"]
    assert b.ec.qt.dim == b.cm.q.dim


def test_ext_context_two_forms_agree(bundles):
    # a broken outer coaction makes the two published forms differ
    b = bundles["E2"]
    for qb in b.ec.qt.basis:
        for pb in b.ec.p_basis:
            b.ec.diamond_black(qb, pb)  # raises on disagreement


def test_ext_context_corner_dims(bundles):
    e2 = bundles["E2"].ec.context
    assert (e2.alg1.dim, e2.alg2.dim, e2.bim12.dim, e2.bim21.dim) == (2, 2, 2, 2)
    e4 = bundles["E4"].ec.context
    assert (e4.alg1.dim, e4.alg2.dim, e4.bim12.dim, e4.bim21.dim) == (4, 3, 3, 3)


def test_remark_k_collapse(bundles):
    for name in ("E1", "E3"):
        b = bundles[name]
        out = remark_k_coincidence(b.ec, b.cm)
        assert out["coincides"]


def test_remark_k_requires_trivial_outer(bundles):
    with pytest.raises(UsageError):
        remark_k_coincidence(bundles["E2"].ec, bundles["E2"].cm)


def test_convolution_algebra_trivial():
    d = trivial_coring(trivial_algebra(F))
    a = trivial_algebra(F)
    alg, basis = convolution_algebra(d, a)
    assert alg.dim == 1


def test_convolution_algebra_group_dual():
    d = group_function_coring(F, [[0, 1], [1, 0]])
    a = trivial_algebra(F)
    alg, _ = convolution_algebra(d, a)
    assert alg.dim == 2
    alg.validate()


def test_convolution_algebra_e2(e2):
    ext = e2.extensions["ext"]
    alg, _ = convolution_algebra(ext.outer, ext.inner.base)
    assert alg.dim == 4


def test_convolution_inverse_unit():
    d = group_function_coring(F, [[0, 1], [1, 0]])
    a = trivial_algebra(F)
    unit = Matrix.from_rows(F, [[F.one, F.zero]])  # eps-shaped map
    inv = convolution_inverse(d, a, unit)
    assert inv == unit


def test_convolution_inverse_antipode(e2):
    # the identity of the group algebra inverts to the antipode
    ext = e2.extensions["ext"]
    a = e2.algebras["A"]
    lam = Matrix.identity(F, 2)
    inv = convolution_inverse(ext.outer, a, lam)
    assert inv == e2.maps["lambda_bar"]


def test_convolution_inverse_zero_map(e2):
    ext = e2.extensions["ext"]
    a = e2.algebras["A"]
    zero = Matrix.zero(F, 2, 2)
    assert convolution_inverse(ext.outer, a, zero) is None


def test_induced_right_action_is_module(e4):
    ext = e4.extensions["ext"]
    acts = induced_right_l_action(ext, e4.comodules["Sigma"])
    assert len(acts) == 1
    assert acts[0] == Matrix.identity(F, 3)
