"""Algebra/bimodule layer: balanced tensors, hom spaces, certificates."""

import pytest

from coringlab.algmod import (BalancedTensor, FBimodule, FiniteAlgebra,
                              fgp_check, generator_check, hom_space,
                              tensor_over, trivial_algebra)
from coringlab.exactla import AxiomError, Matrix, QQ, rank, solve_many
from coringlab.zoo import (group_algebra, product_field_algebra,
                           quotient_polynomial_algebra)

F = QQ


@pytest.fixture(scope="module")
def a_quad():
    return quotient_polynomial_algebra(F, [F.of_int(2), F.zero], name="A")


def test_algebra_validation_catches_bad_unit():
    alg = trivial_algebra(F)
    bad = FiniteAlgebra(F, 1, alg.mul, [F.of_int(2)], name="bad")
    with pytest.raises(AxiomError):
        bad.validate()


def test_algebra_validation_catches_nonassociative():
    # basis (1, x, y): x·x = y, x·y = 1, y·x = y·y = 0, so (xx)x != x(xx)
    z3 = [F.zero] * 3
    e = lambda i: [F.one if j == i else F.zero for j in range(3)]
    mul = [[e(0), e(1), e(2)],
           [e(1), e(2), e(0)],
           [e(2), z3, z3]]
    alg = FiniteAlgebra(F, 3, mul, e(0), name="bad")
    with pytest.raises(AxiomError):
        alg.validate()


def test_regular_bimodule_valid(a_quad):
    FBimodule.regular(a_quad).validate()


def test_tensor_unit_balancing(a_quad):
    reg = FBimodule.regular(a_quad)
    t = tensor_over(reg, a_quad, reg)
    assert t.dim == a_quad.dim


def test_tensor_over_field_no_relations():
    m = FBimodule.trivial(F, 2)
    n = FBimodule.trivial(F, 3)
    k = m.left_alg
    n.left_alg = k
    n.right_alg = k
    t = BalancedTensor([m, n], [k])
    assert t.dim == 6


def test_tensor_over_subfield(a_quad):
    # A (x)_Q A for the quadratic algebra: no collapsing, dimension 4
    k = trivial_algebra(F)
    ab = FBimodule(a_quad, k, 2, [a_quad.lmul(i) for i in range(2)],
                   [Matrix.identity(F, 2)], name="A")
    ba = FBimodule(k, a_quad, 2, [Matrix.identity(F, 2)],
                   [a_quad.rmul(i) for i in range(2)], name="A")
    t = BalancedTensor([ab, ba], [k])
    assert t.dim == 4


def test_tensor_dim_bound(a_quad):
    reg = FBimodule.regular(a_quad)
    t = tensor_over(reg, a_quad, reg)
    assert t.dim <= reg.dim * reg.dim


def test_tensor_associativity_comparison(a_quad):
    reg = FBimodule.regular(a_quad)
    left = BalancedTensor([reg, reg, reg], [a_quad, a_quad])
    assert left.dim == a_quad.dim
    # the canonical comparison with the two-step build is invertible
    pair = BalancedTensor([reg, reg], [a_quad])
    ident = Matrix.identity(F, reg.dim)
    cmp_map = left.proj().mul(pair.sect().kron(ident).mul(
        pair.proj().kron(ident))).mul(left.sect())
    assert rank(cmp_map) == left.dim
    assert solve_many(cmp_map, Matrix.identity(F, left.dim)) is not None


def test_hom_space_endomorphisms(a_quad):
    reg = FBimodule.regular(a_quad)
    homs = hom_space(reg, reg, right_linear=True)
    assert len(homs) == 2  # left multiplications


def test_hom_space_from_field():
    m = FBimodule.trivial(F, 5)
    k = m.left_alg
    one = FBimodule.trivial(F, 1)
    one.left_alg = k
    one.right_alg = k
    m.left_alg = k
    m.right_alg = k
    homs = hom_space(one, m, right_linear=True)
    assert len(homs) == 5


def test_hom_space_schur():
    prod = product_field_algebra(F, 2, name="QxQ")
    k = trivial_algebra(F)
    e1 = FBimodule(k, prod, 1, [Matrix.identity(F, 1)],
                   [Matrix.from_rows(F, [[F.one]]), Matrix.zero(F, 1, 1)],
                   name="S1")
    e2 = FBimodule(k, prod, 1, [Matrix.identity(F, 1)],
                   [Matrix.zero(F, 1, 1), Matrix.from_rows(F, [[F.one]])],
                   name="S2")
    e1.validate()
    e2.validate()
    assert hom_space(e1, e2, right_linear=True) == []


def test_linearity_flags_verified(a_quad):
    reg = FBimodule.regular(a_quad)
    from coringlab.algmod import FLinearMap
    bad = Matrix.from_rows(F, [[F.one, F.zero], [F.zero, F.zero]])
    with pytest.raises(AxiomError):
        FLinearMap(reg, reg, bad, right_linear=True)


def test_fgp_regular(a_quad):
    reg = FBimodule.regular(a_quad)
    witness = fgp_check(reg, "right", a_quad)
    assert witness is not None
    elements, functionals = witness
    # reconstruction: sum x_i Xi_i(v) = v on the basis
    for j in range(reg.dim):
        acc = [F.zero] * reg.dim
        for x, h in zip(elements, functionals):
            val = h.matrix.col(j)
            term = reg.right_act_vec(val).mul_vec(x)
            acc = [F.add(u, v) for u, v in zip(acc, term)]
        target = [F.one if i == j else F.zero for i in range(reg.dim)]
        assert acc == target


def test_fgp_free_over_field():
    m = FBimodule.trivial(F, 2)
    k = m.left_alg
    assert fgp_check(m, "right", k) is not None
    zero = FBimodule.trivial(F, 0)
    assert fgp_check(zero, "right", zero.left_alg) == ([], [])


def test_fgp_idempotent_ideal():
    prod = product_field_algebra(F, 2, name="QxQ")
    k = trivial_algebra(F)
    ideal = FBimodule(k, prod, 1, [Matrix.identity(F, 1)],
                      [Matrix.from_rows(F, [[F.one]]), Matrix.zero(F, 1, 1)],
                      name="e1A")
    ideal.validate()
    assert fgp_check(ideal, "right", prod) is not None


def test_non_projective_module_detected():
    # k[x]/(x^2) acting on k through x -> 0: not projective
    nil = FiniteAlgebra(F, 2, [[[F.one, F.zero], [F.zero, F.one]],
                               [[F.zero, F.one], [F.zero, F.zero]]],
                        [F.one, F.zero], name="k[x]/(x^2)")
    nil.validate()
    k = trivial_algebra(F)
    m = FBimodule(k, nil, 1, [Matrix.identity(F, 1)],
                  [Matrix.identity(F, 1), Matrix.zero(F, 1, 1)], name="k")
    m.validate()
    assert fgp_check(m, "right", nil) is None


def test_generator_regular(a_quad):
    reg = FBimodule.regular(a_quad)
    witness = generator_check(reg, "right", a_quad)
    assert witness is not None
    functionals, elements = witness
    acc = [F.zero] * a_quad.dim
    for h, x in zip(functionals, elements):
        acc = [F.add(u, v) for u, v in zip(acc, h.matrix.mul_vec(x))]
    assert acc == list(a_quad.unit)


def test_generator_zero_module(a_quad):
    zero = FBimodule(trivial_algebra(F), a_quad, 0, [Matrix.zero(F, 0, 0)],
                     [Matrix.zero(F, 0, 0), Matrix.zero(F, 0, 0)], name="0")
    assert generator_check(zero, "right", a_quad) is None


def test_group_algebra_builder():
    c3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    alg = group_algebra(F, c3, name="QC3")
    alg.validate()
    assert alg.dim == 3
