"""Kernel tests: exact solving, kernels, images, quotients, product spans."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from coringlab.exactla import (FieldFp, Matrix, QQ, Subspace, UsageError,
                               image, kernel, product_span, quotient, rank,
                               solve_linear, unit_vec)

F = QQ


def mat(rows):
    return Matrix.from_rows(F, [[F.of_int(v) if isinstance(v, int) else v
                                 for v in row] for row in rows])


def test_solve_identity():
    a = Matrix.identity(F, 3)
    assert solve_linear(a, [F.of_int(1), F.of_int(2), F.of_int(3)]) == \
        [F.of_int(1), F.of_int(2), F.of_int(3)]


def test_solve_inconsistent():
    a = mat([[1, 1], [2, 2]])
    assert solve_linear(a, [F.of_int(1), F.of_int(3)]) is None


def test_solve_scalar_division():
    a = mat([[2]])
    assert solve_linear(a, [F.one]) == [F.of_int(1) / 2]


def test_solve_shape_mismatch():
    with pytest.raises(UsageError):
        solve_linear(mat([[1, 2]]), [F.one, F.one])


def test_kernel_zero_matrix():
    assert kernel(Matrix.zero(F, 3, 3)).dim == 3


def test_kernel_identity():
    assert kernel(Matrix.identity(F, 3)).dim == 0


def test_kernel_hand_row_reduction():
    # row reduction by hand: pivots in columns 0 and 2, free column 1,
    # kernel spanned by (1, -1, 0)
    a = mat([[1, 1, 0], [0, 0, 1]])
    k = kernel(a)
    expected = Subspace.from_span(F, 3, [[F.one, F.of_int(-1), F.zero]])
    assert k == expected
    for v in k.basis:
        assert not any(a.mul_vec(v))


def test_image_full_and_zero():
    assert image(Matrix.identity(F, 2)) == Subspace.full(F, 2)
    assert image(Matrix.zero(F, 2, 2)).dim == 0


def test_image_rank_one():
    a = mat([[1, 2], [2, 4]])
    im = image(a)
    assert im.dim == 1
    assert im == Subspace.from_span(F, 2, [[F.one, F.of_int(2)]])


def test_quotient_trivial_relations():
    q = quotient(3, Subspace.from_span(F, 3, []))
    assert q.dim == 3
    assert q.projection == Matrix.identity(F, 3)


def test_quotient_full_relations():
    q = quotient(2, Subspace.full(F, 2))
    assert q.dim == 0


def test_quotient_canonical_choice():
    rel = Subspace.from_span(F, 2, [[F.one, F.of_int(-1)]])
    q = quotient(2, rel)
    assert q.dim == 1
    assert q.projection.mul(q.section) == Matrix.identity(F, 1)
    assert kernel(q.projection) == rel
    # (a, b) and (a+b, 0)-style representatives agree modulo the relation
    assert q.projection.mul_vec([F.of_int(2), F.of_int(5)]) == \
        q.projection.mul_vec([F.of_int(7), F.zero])


def test_product_span_identity():
    i2 = Matrix.identity(F, 2)
    assert product_span([i2], [i2]) == Subspace.from_span(
        F, 4, [[F.one, F.zero, F.zero, F.one]])


def test_product_span_idempotents():
    e11 = mat([[1, 0], [0, 0]])
    e22 = mat([[0, 0], [0, 1]])
    span = product_span([e11], [e11, e22])
    assert span.dim == 1
    assert span.contains([F.one, F.zero, F.zero, F.zero])


def test_product_span_offdiagonal_contains_identity():
    e12 = mat([[0, 1], [0, 0]])
    e21 = mat([[0, 0], [1, 0]])
    span = product_span([e12, e21], [e12, e21])
    assert span.dim == 2
    assert span.contains([F.one, F.zero, F.zero, F.one])


def test_product_span_dimension_mismatch():
    with pytest.raises(UsageError):
        product_span([Matrix.identity(F, 2)], [Matrix.identity(F, 3)])


# ---------------------------------------------------------------------------
# invariants

small_entries = st.integers(min_value=-4, max_value=4)


def matrices(rows, cols):
    return st.lists(st.lists(small_entries, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(
        lambda data: Matrix.from_rows(F, [[F.of_int(v) for v in row]
                                          for row in data]))


@settings(max_examples=40, deadline=None, derandomize=True)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: matrices(r, c))))
def test_rank_nullity(a):
    assert rank(a) == image(a).dim == a.cols - kernel(a).dim


@settings(max_examples=25, deadline=None, derandomize=True)
@given(st.integers(min_value=1, max_value=4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(
        st.lists(small_entries, min_size=n, max_size=n), min_size=0, max_size=3))))
def test_quotient_roundtrip(data):
    n, rel_rows = data
    rel = Subspace.from_span(F, n, [[F.of_int(v) for v in row]
                                    for row in rel_rows])
    q = quotient(n, rel)
    assert q.projection.mul(q.section) == Matrix.identity(F, q.dim)
    assert kernel(q.projection) == rel
    assert q.dim == n - rel.dim


def test_product_span_basis_independence():
    # changing bases by a fixed seeded invertible transformation leaves the
    # span of pairwise products unchanged
    rng = random.Random(20060401)
    us = [Matrix.from_rows(F, [[F.of_int(rng.randint(-3, 3)) for _ in range(2)]
                               for _ in range(2)]) for _ in range(2)]
    vs = [Matrix.from_rows(F, [[F.of_int(rng.randint(-3, 3)) for _ in range(2)]
                               for _ in range(2)]) for _ in range(2)]
    base = product_span(us, vs)
    us2 = [us[0].add(us[1]), us[1]]
    vs2 = [vs[0], vs[0].add(vs[1].scale(F.of_int(3)))]
    assert product_span(us2, vs2) == base


def test_determinism_bit_identical():
    a = mat([[1, 2, 3], [4, 5, 6], [7, 8, 10]])
    k1 = kernel(a)
    k2 = kernel(mat([[1, 2, 3], [4, 5, 6], [7, 8, 10]]))
    assert k1.basis == k2.basis
    assert solve_linear(a, [F.one, F.one, F.one]) == \
        solve_linear(a, [F.one, F.one, F.one])


# ---------------------------------------------------------------------------
# prime fields


def test_fp_arithmetic():
    f7 = FieldFp(7)
    assert f7.inv(3) == 5
    assert f7.parse("1/2") == f7.mul(1, f7.inv(2)) == 4
    assert f7.parse("3 mod 7") == 3
    assert f7.fmt(10) == "3 mod 7"


def test_fp_rejects_bad_modulus():
    with pytest.raises(UsageError):
        FieldFp(6)
    f7 = FieldFp(7)
    with pytest.raises(UsageError):
        f7.parse("1/7")


def test_fp_linear_algebra():
    f5 = FieldFp(5)
    a = Matrix.from_rows(f5, [[2, 1], [1, 1]])
    x = solve_linear(a, [1, 0])
    assert a.mul_vec(x) == [1, 0]
