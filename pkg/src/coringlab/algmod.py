"""Finite-dimensional algebras, bimodules, hom-spaces and balanced tensors.

One-sided modules are bimodules with the trivial one-dimensional algebra
acting on the inert side, so a single hom-space solver with linearity flags
covers all four hom flavours.
"""

from __future__ import annotations

from .exactla import (AxiomError, Matrix, Subspace, UsageError, flatten_matrix,
                      kernel, quotient, solve_linear, unflatten, unit_vec,
                      vec_scale, zero_vec)


class FiniteAlgebra:
    """Associative unital algebra given by structure constants.

    mul[i][j] is the coordinate vector of e_i * e_j; unit is the coordinate
    vector of 1.  Validation checks associativity and unitality exactly.
    """

    def __init__(self, field, dim, mul, unit, name="A"):
        self.field = field
        self.dim = dim
        self.mul = mul
        self.unit = list(unit)
        self.name = name
        if len(mul) != dim or any(len(row) != dim for row in mul):
            raise UsageError("algebra %s: structure tensor shape mismatch" % name)
        if len(self.unit) != dim:
            raise UsageError("algebra %s: unit vector length mismatch" % name)
        # left/right multiplication matrices, by basis index
        self._lmul = [Matrix.from_cols(field, dim, [mul[i][j] for j in range(dim)])
                      for i in range(dim)]
        self._rmul = [Matrix.from_cols(field, dim, [mul[i][j] for i in range(dim)])
                      for j in range(dim)]

    def lmul(self, i):
        return self._lmul[i]

    def rmul(self, j):
        return self._rmul[j]

    def lmul_vec(self, vec):
        """Matrix of left multiplication by the element with coordinates vec."""
        f = self.field
        out = Matrix.zero(f, self.dim, self.dim)
        for i, c in enumerate(vec):
            if c != f.zero:
                out = out.add(self._lmul[i].scale(c))
        return out

    def rmul_vec(self, vec):
        f = self.field
        out = Matrix.zero(f, self.dim, self.dim)
        for j, c in enumerate(vec):
            if c != f.zero:
                out = out.add(self._rmul[j].scale(c))
        return out

    def multiply(self, x, y):
        return self.lmul_vec(x).mul_vec(y)

    def validate(self):
        f = self.field
        n = self.dim
        lu = self.lmul_vec(self.unit)
        ru = self.rmul_vec(self.unit)
        ident = Matrix.identity(f, n)
        if lu != ident:
            raise AxiomError("algebra %s: unitality fails (1*a != a)" % self.name)
        if ru != ident:
            raise AxiomError("algebra %s: unitality fails (a*1 != a)" % self.name)
        for i in range(n):
            for j in range(n):
                # (e_i e_j) e_k  vs  e_i (e_j e_k), as matrices acting on e_k
                lhs = self.lmul_vec(self.mul[i][j])
                rhs = self._lmul[i].mul(self._lmul[j])
                if lhs != rhs:
                    raise AxiomError("algebra %s: associativity fails at basis pair (%d,%d)"
                                     % (self.name, i, j))
        return True

    def mult_eval(self):
        """Matrix of multiplication A (x) A -> A on the row-major pair basis."""
        f = self.field
        n = self.dim
        out = Matrix.zero(f, n, n * n)
        for i in range(n):
            for j in range(n):
                v = self.mul[i][j]
                for r in range(n):
                    out.data[r][i * n + j] = v[r]
        return out

    def __repr__(self):
        return "FiniteAlgebra(%s, dim %d)" % (self.name, self.dim)


def trivial_algebra(field):
    """The ground field as a one-dimensional algebra."""
    return FiniteAlgebra(field, 1, [[[field.one]]], [field.one], name="k")


def algebra_map_check(src, dst, mat):
    """Check that mat (dst.dim x src.dim) is a unital algebra map src -> dst."""
    if mat.mul_vec(src.unit) != dst.unit:
        return False
    for i in range(src.dim):
        for j in range(src.dim):
            lhs = mat.mul_vec(src.mul[i][j])
            rhs = dst.multiply(mat.col(i), mat.col(j))
            if lhs != rhs:
                return False
    return True


class FBimodule:
    """Finite-dimensional (left_alg, right_alg)-bimodule with action matrices.

    left_act[i] is the matrix of the action of the i-th basis element of
    left_alg; right_act likewise.  One-sided modules use trivial_algebra on
    the inert side.
    """

    def __init__(self, left_alg, right_alg, dim, left_act, right_act, name="M"):
        self.left_alg = left_alg
        self.right_alg = right_alg
        self.dim = dim
        self.left_act = left_act
        self.right_act = right_act
        self.name = name
        self.field = left_alg.field

    @staticmethod
    def trivial(field, dim, name="V"):
        k = trivial_algebra(field)
        ident = Matrix.identity(field, dim)
        return FBimodule(k, k, dim, [ident], [ident.copy()], name=name)

    @staticmethod
    def regular(alg, name=None):
        """The algebra as a bimodule over itself."""
        return FBimodule(alg, alg, alg.dim,
                         [alg.lmul(i) for i in range(alg.dim)],
                         [alg.rmul(j) for j in range(alg.dim)],
                         name=name or alg.name)

    def left_act_vec(self, vec):
        f = self.field
        out = Matrix.zero(f, self.dim, self.dim)
        for i, c in enumerate(vec):
            if c != f.zero:
                out = out.add(self.left_act[i].scale(c))
        return out

    def right_act_vec(self, vec):
        f = self.field
        out = Matrix.zero(f, self.dim, self.dim)
        for i, c in enumerate(vec):
            if c != f.zero:
                out = out.add(self.right_act[i].scale(c))
        return out

    def validate(self):
        f = self.field
        ident = Matrix.identity(f, self.dim)
        la, ra = self.left_alg, self.right_alg
        if len(self.left_act) != la.dim or len(self.right_act) != ra.dim:
            raise UsageError("module %s: action list length mismatch" % self.name)
        if self.left_act_vec(la.unit) != ident:
            raise AxiomError("module %s: left action not unital" % self.name)
        if self.right_act_vec(ra.unit) != ident:
            raise AxiomError("module %s: right action not unital" % self.name)
        for i in range(la.dim):
            for j in range(la.dim):
                if self.left_act[i].mul(self.left_act[j]) != self.left_act_vec(la.mul[i][j]):
                    raise AxiomError("module %s: left action not associative at (%d,%d)"
                                     % (self.name, i, j))
        for i in range(ra.dim):
            for j in range(ra.dim):
                # (m.e_i).e_j = m.(e_i e_j)
                if self.right_act[j].mul(self.right_act[i]) != self.right_act_vec(ra.mul[i][j]):
                    raise AxiomError("module %s: right action not associative at (%d,%d)"
                                     % (self.name, i, j))
        for i in range(la.dim):
            for j in range(ra.dim):
                if self.left_act[i].mul(self.right_act[j]) != self.right_act[j].mul(self.left_act[i]):
                    raise AxiomError("module %s: left and right actions do not commute at (%d,%d)"
                                     % (self.name, i, j))
        return True

    def left_eval(self):
        """Matrix of the action map left_alg (x) M -> M (row-major pairs)."""
        f = self.field
        n, m = self.left_alg.dim, self.dim
        out = Matrix.zero(f, m, n * m)
        for i in range(n):
            act = self.left_act[i]
            for j in range(m):
                for r in range(m):
                    out.data[r][i * m + j] = act.data[r][j]
        return out

    def right_eval(self):
        """Matrix of the action map M (x) right_alg -> M."""
        f = self.field
        n, m = self.right_alg.dim, self.dim
        out = Matrix.zero(f, m, m * n)
        for j in range(m):
            for i in range(n):
                col = self.right_act[i].col(j)
                for r in range(m):
                    out.data[r][j * n + i] = col[r]
        return out

    def __repr__(self):
        return "FBimodule(%s: %s-%s, dim %d)" % (self.name, self.left_alg.name,
                                                 self.right_alg.name, self.dim)


class FLinearMap:
    """Linear map between bimodule carriers with verified linearity flags."""

    def __init__(self, source, target, matrix, left_linear=False, right_linear=False,
                 check=True):
        if matrix.rows != target.dim or matrix.cols != source.dim:
            raise UsageError("map matrix is %dx%d, expected %dx%d"
                             % (matrix.rows, matrix.cols, target.dim, source.dim))
        self.source = source
        self.target = target
        self.matrix = matrix
        self.left_linear = left_linear
        self.right_linear = right_linear
        if check:
            self.verify_flags()

    def verify_flags(self):
        if self.left_linear:
            la, lb = self.source.left_alg, self.target.left_alg
            if la.dim != lb.dim:
                raise UsageError("left algebras differ")
            for i in range(la.dim):
                if self.matrix.mul(self.source.left_act[i]) != self.target.left_act[i].mul(self.matrix):
                    raise AxiomError("map is not left %s-linear at basis %d" % (la.name, i))
        if self.right_linear:
            ra, rb = self.source.right_alg, self.target.right_alg
            if ra.dim != rb.dim:
                raise UsageError("right algebras differ")
            for i in range(ra.dim):
                if self.matrix.mul(self.source.right_act[i]) != self.target.right_act[i].mul(self.matrix):
                    raise AxiomError("map is not right %s-linear at basis %d" % (ra.name, i))
        return True

    def __repr__(self):
        return "FLinearMap(%s -> %s)" % (self.source.name, self.target.name)


# ---------------------------------------------------------------------------
# balanced tensor products


def _chain_index(dims):
    """Row-major multi-index helpers for an iterated tensor product."""
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    return strides


class BalancedTensor:
    """Iterated balanced tensor M1 (x)_{B1} M2 (x)_{B2} ... (x) Mn.

    A quotient of the full k-tensor product by the balancing relations in
    every adjacent slot, built as iterated pairwise quotients (this keeps
    every row reduction small).  The projection/section pair splits the full
    ambient space; the outer bimodule structure descends to the quotient
    (verified).
    """

    def __init__(self, factors, algebras, name=None, check_actions=True):
        if len(algebras) != len(factors) - 1:
            raise UsageError("need one balancing algebra per adjacent pair")
        field = factors[0].field
        for mid, alg in enumerate(algebras):
            if factors[mid].right_alg is not alg and factors[mid].right_alg.name != alg.name:
                raise UsageError("factor %d is not a right %s-module" % (mid, alg.name))
            if factors[mid + 1].left_alg is not alg and factors[mid + 1].left_alg.name != alg.name:
                raise UsageError("factor %d is not a left %s-module" % (mid + 1, alg.name))
        self.factors = factors
        self.algebras = algebras
        self.field = field
        dims = [m.dim for m in factors]
        self.dims = dims
        self.strides = _chain_index(dims)
        ambient = 1
        for d in dims:
            ambient *= d
        if ambient > 4096:
            raise UsageError("tensor ambient dimension %d exceeds the supported "
                             "cap of 4096" % ambient)
        self.ambient_dim = ambient
        self.name = name or "(x)".join(m.name for m in factors)
        self._build()
        self.dim = self._proj.rows
        # outer bimodule structure over (left alg of first, right alg of last)
        self.left_alg = factors[0].left_alg
        self.right_alg = factors[-1].right_alg
        self.left_act = [self.induced([(0, factors[0].left_act[i])])
                         for i in range(self.left_alg.dim)]
        self.right_act = [self.induced([(len(factors) - 1, factors[-1].right_act[i])])
                          for i in range(self.right_alg.dim)]
        self._rel_basis = None
        if check_actions:
            for i in range(self.left_alg.dim):
                if not self._descends(0, self.factors[0].left_act[i]):
                    raise AxiomError("tensor %s: outer left action does not descend" % self.name)
            for i in range(self.right_alg.dim):
                if not self._descends(len(self.factors) - 1, self.factors[-1].right_act[i]):
                    raise AxiomError("tensor %s: outer right action does not descend" % self.name)

    def _build(self):
        """Iterated pairwise quotients; proj/sect act on the full ambient space."""
        f = self.field
        cur = self.factors[0]
        cur_dim = cur.dim
        proj = Matrix.identity(f, cur_dim)
        sect = Matrix.identity(f, cur_dim)
        right_acts = [m.copy() for m in cur.right_act]
        for step, alg in enumerate(self.algebras):
            nxt = self.factors[step + 1]
            amb2 = cur_dim * nxt.dim
            rels = []
            for b in range(alg.dim):
                rb = right_acts[b]
                lb = nxt.left_act[b]
                for i in range(cur_dim):
                    mb = rb.col(i)
                    for j in range(nxt.dim):
                        bn = lb.col(j)
                        vec = zero_vec(f, amb2)
                        for r, c in enumerate(mb):
                            if c != f.zero:
                                vec[r * nxt.dim + j] = f.add(vec[r * nxt.dim + j], c)
                        for r, c in enumerate(bn):
                            if c != f.zero:
                                vec[i * nxt.dim + r] = f.sub(vec[i * nxt.dim + r], c)
                        rels.append(vec)
            q = quotient(amb2, Subspace.from_span(f, amb2, rels))
            ident = Matrix.identity(f, nxt.dim)
            proj = q.projection.mul(proj.kron(ident))
            sect = sect.kron(ident).mul(q.section)
            right_acts = [q.projection.mul(
                Matrix.identity(f, cur_dim).kron(nxt.right_act[i])).mul(q.section)
                for i in range(nxt.right_alg.dim)]
            cur_dim = q.dim
        self._proj = proj
        self._sect = sect

    # -- ambient bookkeeping

    def amb_index(self, multi):
        return sum(i * s for i, s in zip(multi, self.strides))

    def basis_tuples(self):
        def rec(k):
            if k == len(self.dims):
                yield ()
                return
            for i in range(self.dims[k]):
                for rest in rec(k + 1):
                    yield (i,) + rest
        return rec(0)

    @property
    def relations(self):
        """Canonical basis of ker(projection) as a Subspace (computed lazily)."""
        if self._rel_basis is None:
            self._rel_basis = kernel(self._proj)
        return self._rel_basis

    def _apply_slot(self, slot, mat, vec):
        """Apply an endomorphism of one slot to an ambient vector."""
        f = self.field
        d = self.dims[slot]
        stride = self.strides[slot]
        block = d * stride
        out = zero_vec(f, self.ambient_dim)
        for base in range(0, self.ambient_dim, block):
            for i in range(d):
                row = mat.data[i]
                for j in range(d):
                    c = row[j]
                    if not c:
                        continue
                    src = base + j * stride
                    dst = base + i * stride
                    for off in range(stride):
                        v = vec[src + off]
                        if v:
                            out[dst + off] = f.add(out[dst + off], f.mul(c, v))
        return out

    def induced(self, slot_mats):
        """Quotient matrix induced by per-slot endomorphisms."""
        cols = []
        for q in range(self.dim):
            vec = self._sect.col(q)
            for slot, mat in slot_mats:
                vec = self._apply_slot(slot, mat, vec)
            cols.append(self._proj.mul_vec(vec))
        return Matrix.from_cols(self.field, self.dim, cols)

    def _descends(self, slot, mat):
        for rel in self.relations.basis:
            img = self._proj.mul_vec(self._apply_slot(slot, mat, rel))
            if any(img):
                return False
        return True

    def proj(self):
        return self._proj

    def sect(self):
        return self._sect

    def as_bimodule(self, name=None):
        return FBimodule(self.left_alg, self.right_alg, self.dim,
                         self.left_act, self.right_act, name=name or self.name)

    def pure_tensor(self, vecs):
        """Quotient coordinates of v1 (x) ... (x) vn."""
        f = self.field
        amb = zero_vec(f, self.ambient_dim)
        for multi in self.basis_tuples():
            c = f.one
            for v, i in zip(vecs, multi):
                c = f.mul(c, v[i])
                if c == f.zero:
                    break
            if c != f.zero:
                amb[self.amb_index(multi)] = c
        return self._proj.mul_vec(amb)

    def lift_pairs(self, quot_vec):
        """Lift a quotient vector to a list of (multi-index, coefficient)."""
        amb = self._sect.mul_vec(quot_vec)
        f = self.field
        out = []
        for multi in self.basis_tuples():
            c = amb[self.amb_index(multi)]
            if c != f.zero:
                out.append((multi, c))
        return out

    def __repr__(self):
        return "BalancedTensor(%s, dim %d)" % (self.name, self.dim)


def tensor_over(m, b, n, name=None):
    """Balanced tensor M (x)_B N with outer module structures installed."""
    return BalancedTensor([m, n], [b], name=name)


def chain_slot_map(src_chain, dst_chain, pos, n_in, amb_map):
    """Quotient-level map applying amb_map to slots pos..pos+n_in-1 of a chain.

    amb_map acts on the plain tensor of those slots (and may change their
    number); all other slots are untouched.  dst_chain may be None when the
    result is a plain space (no final projection).
    """
    field = src_chain.field
    left = 1
    for d in src_chain.dims[:pos]:
        left *= d
    right = 1
    for d in src_chain.dims[pos + n_in:]:
        right *= d
    m = amb_map
    if left > 1:
        m = Matrix.identity(field, left).kron(m)
    if right > 1:
        m = m.kron(Matrix.identity(field, right))
    out = m.mul(src_chain.sect())
    if dst_chain is not None:
        out = dst_chain.proj().mul(out)
    return out


# ---------------------------------------------------------------------------
# hom spaces


def solve_map_space(src_dim, tgt_dim, constraints, field):
    """Canonical basis of {X : all constraints vanish}.

    Each constraint is a list of (U, V, sign) triples meaning
    sum sign * U·X·V = 0; unknown X is tgt_dim x src_dim, flattened row-major.
    """
    nunk = src_dim * tgt_dim
    rows = []
    for terms in constraints:
        if not terms:
            continue
        p_rows = terms[0][0].rows
        q_cols = terms[0][1].cols
        for p in range(p_rows):
            for q in range(q_cols):
                row = zero_vec(field, nunk)
                nonzero = False
                for (u, v, sign) in terms:
                    for i in range(tgt_dim):
                        uc = u.data[p][i]
                        if uc == field.zero:
                            continue
                        for j in range(src_dim):
                            vc = v.data[j][q]
                            if vc == field.zero:
                                continue
                            c = field.mul(uc, vc)
                            if sign < 0:
                                c = field.neg(c)
                            row[i * src_dim + j] = field.add(row[i * src_dim + j], c)
                            nonzero = True
                if nonzero:
                    rows.append(row)
    if not rows:
        sub = Subspace.full(field, nunk)
    else:
        sub = kernel(Matrix.from_rows(field, rows))
    return [unflatten(field, tgt_dim, src_dim, v) for v in sub.basis]


def hom_space(m, n, left_linear=False, right_linear=False, extra_constraints=(),
              name=None):
    """Canonical basis of linear maps M -> N with the flagged linearities.

    extra_constraints follow the solve_map_space convention and are imposed
    on top of the linearity equations.
    """
    field = m.field
    constraints = []
    if left_linear:
        if m.left_alg.dim != n.left_alg.dim:
            raise UsageError("hom_space: left algebras differ")
        for i in range(m.left_alg.dim):
            constraints.append([(Matrix.identity(field, n.dim), m.left_act[i], +1),
                                (n.left_act[i], Matrix.identity(field, m.dim), -1)])
    if right_linear:
        if m.right_alg.dim != n.right_alg.dim:
            raise UsageError("hom_space: right algebras differ")
        for i in range(m.right_alg.dim):
            constraints.append([(Matrix.identity(field, n.dim), m.right_act[i], +1),
                                (n.right_act[i], Matrix.identity(field, m.dim), -1)])
    constraints.extend(extra_constraints)
    mats = solve_map_space(m.dim, n.dim, constraints, field)
    return [FLinearMap(m, n, mat, left_linear=left_linear, right_linear=right_linear)
            for mat in mats]


def coords_in_basis(basis_mats, mat):
    """Coordinates of mat in the span of basis_mats, or None."""
    if not basis_mats:
        return [] if mat.is_zero() else None
    field = mat.field
    cols = [flatten_matrix(b) for b in basis_mats]
    a = Matrix.from_cols(field, len(cols[0]), cols)
    return solve_linear(a, flatten_matrix(mat))


def endo_algebra(basis_maps, name="End", opposite=False):
    """FiniteAlgebra structure on a composition-closed space of endomorphisms.

    Multiplication is composition t*t' = t∘t' (or t'∘t when opposite=True).
    Raises AxiomError when the span is not closed under composition.
    """
    if not basis_maps:
        field = None
        raise UsageError("endo_algebra of an empty basis needs a field; use zero_algebra")
    field = basis_maps[0].field
    n = len(basis_maps)
    mul = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            comp = basis_maps[j].mul(basis_maps[i]) if opposite else basis_maps[i].mul(basis_maps[j])
            coords = coords_in_basis(basis_maps, comp)
            if coords is None:
                raise AxiomError("%s: not closed under composition at (%d,%d)" % (name, i, j))
            mul[i][j] = coords
    ident = Matrix.identity(field, basis_maps[0].rows)
    unit = coords_in_basis(basis_maps, ident)
    if unit is None:
        raise AxiomError("%s: identity map is not in the span" % name)
    alg = FiniteAlgebra(field, n, mul, unit, name=name)
    alg.validate()
    return alg


def zero_algebra(field, name="0"):
    """The zero ring as a 0-dimensional algebra (only the zero module over it)."""
    return FiniteAlgebra(field, 0, [], [], name=name)


# ---------------------------------------------------------------------------
# projectivity / generator certificates


def fgp_check(m, side, alg):
    """Dual-basis witness that m is f.g. projective over alg on the given side.

    Returns (elements, functionals) with sum x_i xi_i(v) = v for all v (right
    side; mirrored for left), or None when no dual basis exists.  The search
    is a linear membership problem: id_M inside the image of the evaluation
    pairing.
    """
    field = m.field
    if side == "right":
        homs = hom_space(m, FBimodule.regular(alg), right_linear=True)
    elif side == "left":
        homs = hom_space(m, FBimodule.regular(alg), left_linear=True)
    else:
        raise UsageError("side must be 'left' or 'right'")
    if m.dim == 0:
        return ([], [])
    pair_mats = []
    pairs = []
    for h in homs:
        for x in range(m.dim):
            # v -> x · h(v)   (right side),  v -> h(v) · x  (left side)
            cols = []
            for j in range(m.dim):
                a = h.matrix.col(j)
                if side == "right":
                    cols.append(m.right_act_vec(a).col(x))
                else:
                    cols.append(m.left_act_vec(a).col(x))
            pair_mats.append(Matrix.from_cols(field, m.dim, cols))
            pairs.append((h, x))
    coeffs = coords_in_basis(pair_mats, Matrix.identity(field, m.dim))
    if coeffs is None:
        return None
    elements = []
    functionals = []
    for c, (h, x) in zip(coeffs, pairs):
        if c == field.zero:
            continue
        elements.append(vec_scale(field, c, unit_vec(field, m.dim, x)))
        functionals.append(h)
    return (elements, functionals)


def generator_check(m, side, alg):
    """Witness that m generates alg-modules on the given side.

    Finds functionals xi_i and elements x_i with sum xi_i(x_i) = 1, by linear
    membership of the unit in the trace span; None when m is not a generator.
    """
    field = m.field
    homs = hom_space(m, FBimodule.regular(alg),
                     right_linear=(side == "right"), left_linear=(side == "left"))
    span = []
    pairs = []
    for h in homs:
        for x in range(m.dim):
            span.append(h.matrix.col(x))
            pairs.append((h, x))
    if not span:
        return None
    a = Matrix.from_cols(field, alg.dim, span)
    coeffs = solve_linear(a, list(alg.unit))
    if coeffs is None:
        return None
    functionals = []
    elements = []
    for c, (h, x) in zip(coeffs, pairs):
        if c == field.zero:
            continue
        functionals.append(h)
        elements.append(vec_scale(field, c, unit_vec(field, m.dim, x)))
    return (functionals, elements)
