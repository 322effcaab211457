"""Corings, comodules, grouplike elements, dual rings and colinear hom-spaces.

Coproducts and coactions always land in the balanced-tensor quotient, never
in the ambient k-tensor space; every compatibility identity is therefore an
exact matrix equality between composites built from canonical
projection/section pairs.
"""

from __future__ import annotations

from .algmod import (BalancedTensor, FBimodule, FiniteAlgebra,
                     coords_in_basis, endo_algebra, hom_space,
                     trivial_algebra, zero_algebra)
from .exactla import AxiomError, Matrix, UsageError, unit_vec, zero_vec


def sandwich_terms(p, w, inner_dim, sign=1):
    """Terms (U_c, V_c, sign) with sum_c U_c·X·V_c = P·(X kron I_inner)·W."""
    field = p.field
    tgt = p.cols // inner_dim
    src = w.rows // inner_dim
    out = []
    for c in range(inner_dim):
        u = Matrix.from_cols(field, p.rows, [p.col(n * inner_dim + c) for n in range(tgt)])
        v = Matrix.from_rows(field, [w.row(m * inner_dim + c) for m in range(src)]) \
            if src else Matrix.zero(field, 0, w.cols)
        out.append((u, v, sign))
    return out


class Coring:
    """A-coring: an A-A bimodule with coassociative counital coproduct."""

    def __init__(self, base, carrier, coproduct, counit, name="C"):
        self.base = base
        self.carrier = carrier
        self.name = name
        self.field = base.field
        self.cc = BalancedTensor([carrier, carrier], [base], name=name + "(x)" + name)
        self._ccc = None
        if coproduct.rows == self.cc.ambient_dim and coproduct.rows != self.cc.dim:
            coproduct = self.cc.proj().mul(coproduct)
        if coproduct.rows != self.cc.dim or coproduct.cols != carrier.dim:
            raise UsageError("coring %s: coproduct has wrong shape" % name)
        if counit.rows != base.dim or counit.cols != carrier.dim:
            raise UsageError("coring %s: counit has wrong shape" % name)
        self.coproduct = coproduct
        self.counit = counit

    @property
    def dim(self):
        return self.carrier.dim

    @property
    def ccc(self):
        if self._ccc is None:
            self._ccc = BalancedTensor([self.carrier, self.carrier, self.carrier],
                                       [self.base, self.base])
        return self._ccc

    # -- structural maps on the quotient tensors

    def eps_then_act(self):
        """[C (x)_A C] -> C,  c (x) c' -> eps(c)·c'."""
        ec = self.counit.kron(Matrix.identity(self.field, self.dim))
        return self.carrier.left_eval().mul(ec).mul(self.cc.sect())

    def act_then_eps(self):
        """[C (x)_A C] -> C,  c (x) c' -> c·eps(c')."""
        ce = Matrix.identity(self.field, self.dim).kron(self.counit)
        return self.carrier.right_eval().mul(ce).mul(self.cc.sect())

    def delta_on_left(self):
        """[C (x)_A C] -> [C (x)_A C (x)_A C] applying the coproduct on slot 0."""
        ident = Matrix.identity(self.field, self.dim)
        step = self.cc.sect().kron(ident).mul(self.coproduct.kron(ident))
        return self.ccc.proj().mul(step).mul(self.cc.sect())

    def delta_on_right(self):
        """Same, applying the coproduct on slot 1."""
        ident = Matrix.identity(self.field, self.dim)
        step = ident.kron(self.cc.sect()).mul(ident.kron(self.coproduct))
        return self.ccc.proj().mul(step).mul(self.cc.sect())

    def validate(self):
        self.base.validate()
        self.carrier.validate()
        f = self.field
        for i in range(self.base.dim):
            la, ra = self.carrier.left_act[i], self.carrier.right_act[i]
            if self.coproduct.mul(la) != self.cc.left_act[i].mul(self.coproduct):
                raise AxiomError("coring %s: coproduct not left A-linear at basis %d"
                                 % (self.name, i))
            if self.coproduct.mul(ra) != self.cc.right_act[i].mul(self.coproduct):
                raise AxiomError("coring %s: coproduct not right A-linear at basis %d"
                                 % (self.name, i))
            if self.counit.mul(la) != self.base.lmul(i).mul(self.counit):
                raise AxiomError("coring %s: counit not left A-linear at basis %d"
                                 % (self.name, i))
            if self.counit.mul(ra) != self.base.rmul(i).mul(self.counit):
                raise AxiomError("coring %s: counit not right A-linear at basis %d"
                                 % (self.name, i))
        ident = Matrix.identity(f, self.dim)
        if self.eps_then_act().mul(self.coproduct) != ident:
            raise AxiomError("coring %s: counitality (eps(x)C)∘Delta = id fails" % self.name)
        if self.act_then_eps().mul(self.coproduct) != ident:
            raise AxiomError("coring %s: counitality (C(x)eps)∘Delta = id fails" % self.name)
        if self.delta_on_left().mul(self.coproduct) != self.delta_on_right().mul(self.coproduct):
            raise AxiomError("coring %s: coassociativity fails" % self.name)
        return True

    def __repr__(self):
        return "Coring(%s over %s, dim %d)" % (self.name, self.base.name, self.dim)


class Comodule:
    """Right comodule of a coring, optionally with a compatible left action.

    The left slot carries the trivial algebra for plain comodules; filling it
    with an algebra L (and checking the coaction is left L-linear) makes the
    comodule an L-C bicomodule.
    """

    def __init__(self, coring, carrier, coaction, name="M"):
        self.coring = coring
        self.carrier = carrier
        self.name = name
        self.field = coring.field
        self.mc = BalancedTensor([carrier, coring.carrier], [coring.base],
                                 name=name + "(x)C")
        self._mcc = None
        if coaction.rows == self.mc.ambient_dim and coaction.rows != self.mc.dim:
            coaction = self.mc.proj().mul(coaction)
        if coaction.rows != self.mc.dim or coaction.cols != carrier.dim:
            raise UsageError("comodule %s: coaction has wrong shape" % name)
        self.coaction = coaction

    @property
    def dim(self):
        return self.carrier.dim

    @property
    def mcc(self):
        if self._mcc is None:
            self._mcc = BalancedTensor([self.carrier, self.coring.carrier,
                                        self.coring.carrier],
                                       [self.coring.base, self.coring.base])
        return self._mcc

    @property
    def left_alg(self):
        return self.carrier.left_alg

    def counit_collapse(self):
        """[M (x)_A C] -> M,  m (x) c -> m·eps(c)."""
        ident = Matrix.identity(self.field, self.dim)
        me = ident.kron(self.coring.counit)
        return self.carrier.right_eval().mul(me).mul(self.mc.sect())

    def coaction_on_left(self):
        """[M (x)_A C] -> [M (x)_A C (x)_A C] applying the coaction on slot 0."""
        ident = Matrix.identity(self.field, self.coring.dim)
        step = self.mc.sect().kron(ident).mul(self.coaction.kron(ident))
        return self.mcc.proj().mul(step).mul(self.mc.sect())

    def delta_on_right(self):
        """Same, applying the coproduct on slot 1."""
        ident = Matrix.identity(self.field, self.dim)
        c = self.coring
        step = ident.kron(c.cc.sect()).mul(ident.kron(c.coproduct))
        return self.mcc.proj().mul(step).mul(self.mc.sect())

    def validate(self):
        self.carrier.validate()
        if self.carrier.right_alg.dim != self.coring.base.dim:
            raise UsageError("comodule %s: carrier is not a module over the base" % self.name)
        for i in range(self.coring.base.dim):
            if self.coaction.mul(self.carrier.right_act[i]) != self.mc.right_act[i].mul(self.coaction):
                raise AxiomError("comodule %s: coaction not right A-linear at basis %d"
                                 % (self.name, i))
        for i in range(self.carrier.left_alg.dim):
            if self.coaction.mul(self.carrier.left_act[i]) != self.mc.left_act[i].mul(self.coaction):
                raise AxiomError("comodule %s: coaction not left %s-linear at basis %d"
                                 % (self.name, self.carrier.left_alg.name, i))
        if self.counit_collapse().mul(self.coaction) != Matrix.identity(self.field, self.dim):
            raise AxiomError("comodule %s: counitality fails" % self.name)
        if self.coaction_on_left().mul(self.coaction) != self.delta_on_right().mul(self.coaction):
            raise AxiomError("comodule %s: coassociativity fails" % self.name)
        return True

    def __repr__(self):
        return "Comodule(%s over %s, dim %d)" % (self.name, self.coring.name, self.dim)


class Grouplike:
    """Element g with Delta(g) = g (x) g and eps(g) = 1."""

    def __init__(self, coring, element):
        self.coring = coring
        self.element = list(element)

    def validate(self):
        c = self.coring
        if len(self.element) != c.dim:
            raise UsageError("grouplike vector has wrong length")
        lhs = c.coproduct.mul_vec(self.element)
        rhs = c.cc.pure_tensor([self.element, self.element])
        if lhs != rhs:
            raise AxiomError("grouplike: Delta(g) != g (x) g")
        if c.counit.mul_vec(self.element) != list(c.base.unit):
            raise AxiomError("grouplike: eps(g) != 1")
        return True


# ---------------------------------------------------------------------------
# dual rings


class DualRing:
    """The left dual ring of a coring (or the right dual, by side flag).

    Carries the algebra structure, the defining evaluation matrices of the
    canonical basis, the A-A bimodule structure and the unit map from A.
    """

    def __init__(self, coring, side="left"):
        if side not in ("left", "right"):
            raise UsageError("dual ring side must be 'left' or 'right'")
        self.coring = coring
        self.side = side
        field = coring.field
        a = coring.base
        reg = FBimodule.regular(a)
        homs = hom_space(coring.carrier, reg, left_linear=(side == "left"),
                         right_linear=(side == "right"))
        self.eval_mats = [h.matrix for h in homs]  # each a.dim x c.dim
        n = len(self.eval_mats)
        mul = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                prod = self._convolve(self.eval_mats[i], self.eval_mats[j])
                coords = coords_in_basis(self.eval_mats, prod)
                if coords is None:
                    raise AxiomError("dual ring of %s: product escapes the hom space"
                                     % coring.name)
                mul[i][j] = coords
        unit = coords_in_basis(self.eval_mats, coring.counit)
        if unit is None and n > 0:
            raise AxiomError("dual ring of %s: counit is not in the hom space" % coring.name)
        name = ("*" + coring.name) if side == "left" else (coring.name + "*")
        self.algebra = FiniteAlgebra(field, n, mul, unit or [], name=name)
        self.algebra.validate()
        # A-A bimodule structure: (a·f)(c) = f(c·a), (f·a)(c) = f(c)·a  [left dual]
        #                         (a·f)(c) = a·f(c), (f·a)(c) = f(a·c)  [right dual]
        left_act = []
        right_act = []
        for i in range(a.dim):
            if side == "left":
                lmats = [m.mul(coring.carrier.right_act[i]) for m in self.eval_mats]
                rmats = [a.rmul(i).mul(m) for m in self.eval_mats]
            else:
                lmats = [a.lmul(i).mul(m) for m in self.eval_mats]
                rmats = [m.mul(coring.carrier.left_act[i]) for m in self.eval_mats]
            left_act.append(self._coord_matrix(lmats))
            right_act.append(self._coord_matrix(rmats))
        self.module = FBimodule(a, a, n, left_act, right_act, name=name)
        self.module.validate()

    def _convolve(self, f, g):
        c = self.coring
        ident = Matrix.identity(c.field, c.dim)
        if self.side == "left":
            # (fg)(x) = g(x^(1)·f(x^(2)))
            inner = c.carrier.right_eval().mul(ident.kron(f)).mul(c.cc.sect())
            return g.mul(inner).mul(c.coproduct)
        # right dual: (fg)(x) = f(g(x^(1))·x^(2))
        inner = c.carrier.left_eval().mul(g.kron(ident)).mul(c.cc.sect())
        return f.mul(inner).mul(c.coproduct)

    def _coord_matrix(self, mats):
        cols = []
        for m in mats:
            coords = coords_in_basis(self.eval_mats, m)
            if coords is None:
                raise AxiomError("dual ring: bimodule action escapes the hom space")
            cols.append(coords)
        return Matrix.from_cols(self.coring.field, len(self.eval_mats), cols)

    @property
    def dim(self):
        return self.algebra.dim

    def unit_map(self):
        """The A-ring unit A -> dual, a -> (c -> eps(c·a))  [left dual]."""
        a = self.coring.base
        cols = []
        for i in range(a.dim):
            if self.side == "left":
                m = self.coring.counit.mul(self.coring.carrier.right_act[i])
            else:
                m = self.coring.counit.mul(self.coring.carrier.left_act[i])
            coords = coords_in_basis(self.eval_mats, m)
            if coords is None:
                raise AxiomError("dual ring: unit map escapes the hom space")
            cols.append(coords)
        return Matrix.from_cols(self.coring.field, self.dim, cols)

    def element_eval(self, coords):
        """Evaluation matrix (A.dim x C.dim) of the element with given coords."""
        f = self.coring.field
        out = Matrix.zero(f, self.coring.base.dim, self.coring.dim)
        for c, m in zip(coords, self.eval_mats):
            if c != f.zero:
                out = out.add(m.scale(c))
        return out


def dual_ring(coring, side="left"):
    return DualRing(coring, side=side)


def dual_action(comodule, dual=None):
    """Right action of the left dual ring on a comodule: x·f = x^[0] f(x^[1]).

    Returns (dual, module) where module is the carrier rewrapped as a
    (left_alg, *C)-bimodule; every comodule axiom needed for the action to be
    associative and unital is re-verified by the bimodule validator.
    """
    dual = dual or DualRing(comodule.coring, side="left")
    field = comodule.field
    ident = Matrix.identity(field, comodule.dim)
    acts = []
    for f in dual.eval_mats:
        step = comodule.carrier.right_eval().mul(ident.kron(f)).mul(comodule.mc.sect())
        acts.append(step.mul(comodule.coaction))
    mod = FBimodule(comodule.carrier.left_alg, dual.algebra, comodule.dim,
                    list(comodule.carrier.left_act), acts,
                    name=comodule.name + " as *%s-module" % comodule.coring.name)
    mod.validate()
    return dual, mod


# ---------------------------------------------------------------------------
# colinear hom spaces


def colinearity_constraint(m, n):
    """Constraint terms for rho_N ∘ X = (X (x) C) ∘ rho_M."""
    field = m.field
    cdim = m.coring.dim
    terms = [(n.coaction, Matrix.identity(field, m.dim), +1)]
    w = m.mc.sect().mul(m.coaction)  # M -> M (x) C ambient
    terms.extend(sandwich_terms(n.mc.proj(), w, cdim, sign=-1))
    return terms


def colinear_homs(m, n, left_linear=False):
    """Canonical basis of right colinear, right A-linear maps M -> N.

    With left_linear=True the maps are additionally left linear over the
    shared left algebra (the bicomodule hom space).
    """
    if m.coring is not n.coring:
        raise UsageError("colinear_homs: comodules over different corings")
    constraints = [colinearity_constraint(m, n)]
    return hom_space(m.carrier, n.carrier, left_linear=left_linear,
                     right_linear=True, extra_constraints=constraints)


class EndAlgebra:
    """End^C(Sigma) with composition product, plus the L-ring unit when
    Sigma carries a left action."""

    def __init__(self, sigma):
        self.sigma = sigma
        maps = colinear_homs(sigma, sigma)
        self.basis_maps = [h.matrix for h in maps]
        if self.basis_maps:
            self.algebra = endo_algebra(self.basis_maps, name="End^%s(%s)"
                                        % (sigma.coring.name, sigma.name))
        else:
            self.algebra = zero_algebra(sigma.field, name="End^%s(%s)"
                                        % (sigma.coring.name, sigma.name))

    @property
    def dim(self):
        return self.algebra.dim

    def coords(self, mat):
        return coords_in_basis(self.basis_maps, mat)

    def element_matrix(self, coords):
        f = self.sigma.field
        out = Matrix.zero(f, self.sigma.dim, self.sigma.dim)
        for c, m in zip(coords, self.basis_maps):
            if c != f.zero:
                out = out.add(m.scale(c))
        return out

    def unit_map_from(self, lalg):
        """L -> T, l -> (x -> l·x); fails when left multiplications are not colinear."""
        cols = []
        for i in range(lalg.dim):
            coords = self.coords(self.sigma.carrier.left_act[i])
            if coords is None:
                raise AxiomError("left multiplication by %s basis %d is not colinear"
                                 % (lalg.name, i))
            cols.append(coords)
        return Matrix.from_cols(self.sigma.field, self.dim, cols)


# ---------------------------------------------------------------------------
# constructions


def grouplike_comodule(g, name=None):
    """The base algebra as a comodule via a grouplike: rho(a) = g·a."""
    g.validate()
    c = g.coring
    a = c.base
    field = c.field
    left_alg = trivial_algebra(field)
    carrier = FBimodule(left_alg, a, a.dim, [Matrix.identity(field, a.dim)],
                        [a.rmul(j) for j in range(a.dim)],
                        name=name or a.name)
    mc = BalancedTensor([carrier, c.carrier], [a])
    cols = []
    for j in range(a.dim):
        ga = c.carrier.right_act[j].mul_vec(g.element)
        cols.append(mc.pure_tensor([list(a.unit), ga]))
    coaction = Matrix.from_cols(field, mc.dim, cols)
    out = Comodule(c, carrier, coaction, name=name or a.name)
    out.validate()
    return out


def trivial_coring(a, name=None):
    """The base algebra as a coring over itself (Delta = canonical iso, eps = id)."""
    carrier = FBimodule.regular(a, name=name or a.name)
    cc = BalancedTensor([carrier, carrier], [a])
    cols = [cc.pure_tensor([unit_vec(a.field, a.dim, j), list(a.unit)])
            for j in range(a.dim)]
    coproduct = Matrix.from_cols(a.field, cc.dim, cols)
    counit = Matrix.identity(a.field, a.dim)
    c = Coring(a, carrier, coproduct, counit, name=name or a.name)
    c.validate()
    return c


def comodule_direct_sum(m1, m2, name=None):
    """Direct sum of two comodules over the same coring (and left algebra)."""
    if m1.coring is not m2.coring:
        raise UsageError("direct sum of comodules over different corings")
    if m1.carrier.left_alg.dim != m2.carrier.left_alg.dim:
        raise UsageError("direct sum with mismatched left algebras")
    c = m1.coring
    field = m1.field
    d1, d2 = m1.dim, m2.dim
    dim = d1 + d2

    def block(a1, a2):
        out = Matrix.zero(field, dim, dim)
        for i in range(d1):
            for j in range(d1):
                out.data[i][j] = a1.data[i][j]
        for i in range(d2):
            for j in range(d2):
                out.data[d1 + i][d1 + j] = a2.data[i][j]
        return out

    left_act = [block(m1.carrier.left_act[i], m2.carrier.left_act[i])
                for i in range(m1.carrier.left_alg.dim)]
    right_act = [block(m1.carrier.right_act[i], m2.carrier.right_act[i])
                 for i in range(c.base.dim)]
    carrier = FBimodule(m1.carrier.left_alg, c.base, dim, left_act, right_act,
                        name=name or (m1.name + "+" + m2.name))
    mc = BalancedTensor([carrier, c.carrier], [c.base])
    cols = []
    for src, offset in ((m1, 0), (m2, d1)):
        for j in range(src.dim):
            amb = zero_vec(field, mc.ambient_dim)
            for (multi, coeff) in src.mc.lift_pairs(src.coaction.col(j)):
                mi, ci = multi
                amb[(offset + mi) * c.dim + ci] = coeff
            cols.append(mc.proj().mul_vec(amb))
    coaction = Matrix.from_cols(field, mc.dim, cols)
    out = Comodule(c, carrier, coaction, name=name or (m1.name + "+" + m2.name))
    out.validate()
    return out


def zero_comodule(c, name="0"):
    field = c.field
    k = trivial_algebra(field)
    carrier = FBimodule(k, c.base, 0, [Matrix.zero(field, 0, 0)],
                        [Matrix.zero(field, 0, 0) for _ in range(c.base.dim)],
                        name=name)
    mc = BalancedTensor([carrier, c.carrier], [c.base])
    coaction = Matrix.zero(field, mc.dim, 0)
    return Comodule(c, carrier, coaction, name=name)


def opposite_algebra(a):
    mul = [[a.mul[j][i] for j in range(a.dim)] for i in range(a.dim)]
    out = FiniteAlgebra(a.field, a.dim, mul, a.unit, name=a.name + "^op")
    out.validate()
    return out


def co_opposite(c, name=None):
    """The co-opposite coring over A^op: same carrier with sides swapped and
    twisted coproduct.  Left comodules of c are right comodules of this."""
    aop = opposite_algebra(c.base)
    carrier = FBimodule(aop, aop, c.dim, list(c.carrier.right_act),
                        list(c.carrier.left_act), name=(name or c.name + "^cop"))
    cc = BalancedTensor([carrier, carrier], [aop])
    field = c.field
    n = c.dim
    twist = Matrix.zero(field, n * n, n * n)
    for i in range(n):
        for j in range(n):
            twist.data[j * n + i][i * n + j] = field.one
    coproduct = cc.proj().mul(twist).mul(c.cc.sect()).mul(c.coproduct)
    out = Coring(aop, carrier, coproduct, c.counit, name=name or c.name + "^cop")
    out.validate()
    return out
