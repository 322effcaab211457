"""Exact linear algebra kernel: fields, dense matrices, subspaces, quotients.

Everything is computed over an exact field (arbitrary-precision rationals or
a prime field); there are no tolerances anywhere.  All basis choices are made
canonical through reduced row echelon form, so identical inputs produce
bit-identical outputs.
"""

from __future__ import annotations

from fractions import Fraction


class UsageError(Exception):
    """Malformed call: dimension mismatch, bad scalar string, unknown name."""


class AxiomError(Exception):
    """A structural axiom failed; the message names the axiom."""


# ---------------------------------------------------------------------------
# fields


class FieldQ:
    """Arbitrary-precision rationals."""

    name = "Q"

    zero = Fraction(0)
    one = Fraction(1)

    def of_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def parse(self, s):
        s = s.strip()
        if " mod " in s:
            raise UsageError("prime-field scalar %r in a rational file" % s)
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad rational scalar %r" % s) from exc

    def fmt(self, a):
        return str(a)

    def __repr__(self):
        return "FieldQ()"

    def __eq__(self, other):
        return isinstance(other, FieldQ)

    def __hash__(self):
        return hash("FieldQ")


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldFp:
    """Integers modulo a prime p; representatives are kept in [0, p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise UsageError("modulus %r is not prime" % (p,))
        self.p = p
        self.name = "F%d" % p
        self.zero = 0
        self.one = 1 % p

    def of_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def parse(self, s):
        s = s.strip()
        if " mod " in s:
            n, modp = s.split(" mod ")
            if int(modp) != self.p:
                raise UsageError("scalar %r has wrong modulus (field F%d)" % (s, self.p))
            return int(n) % self.p
        try:
            frac = Fraction(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError("bad scalar %r" % s) from exc
        if frac.denominator % self.p == 0:
            raise UsageError("scalar %r has no reduction mod %d" % (s, self.p))
        return (frac.numerator * pow(frac.denominator, self.p - 2, self.p)) % self.p

    def fmt(self, a):
        return "%d mod %d" % (a % self.p, self.p)

    def reduce_rational(self, a):
        """Map a Fraction into F_p; fails when p divides the denominator."""
        if a.denominator % self.p == 0:
            raise UsageError("rational %s has no reduction mod %d" % (a, self.p))
        return (a.numerator * pow(a.denominator, self.p - 2, self.p)) % self.p

    def __repr__(self):
        return "FieldFp(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, FieldFp) and other.p == self.p

    def __hash__(self):
        return hash(("FieldFp", self.p))


QQ = FieldQ()


# ---------------------------------------------------------------------------
# matrices


class Matrix:
    """Dense matrix over an exact field.  Treated as immutable after creation."""

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field, rows, cols, data):
        if len(data) != rows or any(len(r) != cols for r in data):
            raise UsageError("matrix data shape mismatch")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.data = data

    # -- constructors

    @staticmethod
    def zero(field, rows, cols):
        z = field.zero
        return Matrix(field, rows, cols, [[z] * cols for _ in range(rows)])

    @staticmethod
    def identity(field, n):
        z, o = field.zero, field.one
        return Matrix(field, n, n, [[o if i == j else z for j in range(n)] for i in range(n)])

    @staticmethod
    def from_rows(field, rows_list):
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        return Matrix(field, rows, cols, [list(r) for r in rows_list])

    @staticmethod
    def from_cols(field, nrows, cols_list):
        m = Matrix.zero(field, nrows, len(cols_list))
        for j, col in enumerate(cols_list):
            if len(col) != nrows:
                raise UsageError("column length mismatch")
            for i in range(nrows):
                m.data[i][j] = col[i]
        return m

    @staticmethod
    def column(field, vec):
        return Matrix(field, len(vec), 1, [[v] for v in vec])

    # -- basic ops

    def copy(self):
        return Matrix(self.field, self.rows, self.cols, [list(r) for r in self.data])

    def col(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def row(self, i):
        return list(self.data[i])

    def __eq__(self, other):
        return (isinstance(other, Matrix) and other.rows == self.rows
                and other.cols == self.cols and other.data == self.data)

    def __hash__(self):
        raise TypeError("matrices are not hashable")

    def __repr__(self):
        return "Matrix(%dx%d over %s)" % (self.rows, self.cols, self.field.name)

    def is_zero(self):
        return not any(v for row in self.data for v in row)

    def add(self, other):
        self._shape_check(other, same=True)
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      [[f.add(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.data, other.data)])

    def sub(self, other):
        self._shape_check(other, same=True)
        f = self.field
        return Matrix(f, self.rows, self.cols,
                      [[f.sub(a, b) for a, b in zip(ra, rb)]
                       for ra, rb in zip(self.data, other.data)])

    def scale(self, c):
        f = self.field
        return Matrix(f, self.rows, self.cols, [[f.mul(c, v) for v in row] for row in self.data])

    def mul(self, other):
        if self.cols != other.rows:
            raise UsageError("matrix product shape mismatch: %dx%d by %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        f = self.field
        z = f.zero
        out = [[z] * other.cols for _ in range(self.rows)]
        odata = other.data
        for i in range(self.rows):
            srow = self.data[i]
            orow = out[i]
            for k in range(self.cols):
                a = srow[k]
                if not a:
                    continue
                brow = odata[k]
                for j in range(other.cols):
                    b = brow[j]
                    if b:
                        orow[j] = f.add(orow[j], f.mul(a, b))
        return Matrix(f, self.rows, other.cols, out)

    def mul_vec(self, vec):
        if self.cols != len(vec):
            raise UsageError("matrix-vector shape mismatch")
        f = self.field
        z = f.zero
        out = [z] * self.rows
        for i in range(self.rows):
            acc = z
            row = self.data[i]
            for j, v in enumerate(vec):
                if v and row[j]:
                    acc = f.add(acc, f.mul(row[j], v))
            out[i] = acc
        return out

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def kron(self, other):
        """Kronecker product, row-major index convention (i*n + j)."""
        f = self.field
        z = f.zero
        rows = self.rows * other.rows
        cols = self.cols * other.cols
        out = [[z] * cols for _ in range(rows)]
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.data[i][j]
                if not a:
                    continue
                for p in range(other.rows):
                    orow = out[i * other.rows + p]
                    brow = other.data[p]
                    for q in range(other.cols):
                        b = brow[q]
                        if b:
                            orow[j * other.cols + q] = f.add(orow[j * other.cols + q], f.mul(a, b))
        return Matrix(f, rows, cols, out)

    def hstack(self, other):
        if self.rows != other.rows:
            raise UsageError("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      [ra + rb for ra, rb in zip(self.data, other.data)])

    def _shape_check(self, other, same=False):
        if same and (self.rows != other.rows or self.cols != other.cols):
            raise UsageError("matrix shape mismatch: %dx%d vs %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))


def vec_add(field, u, v):
    return [field.add(a, b) for a, b in zip(u, v)]

def vec_sub(field, u, v):
    return [field.sub(a, b) for a, b in zip(u, v)]

def vec_scale(field, c, u):
    return [field.mul(c, a) for a in u]

def zero_vec(field, n):
    return [field.zero] * n

def unit_vec(field, n, i):
    v = [field.zero] * n
    v[i] = field.one
    return v


# ---------------------------------------------------------------------------
# row reduction


def rref(m):
    """Reduced row echelon form.

    Returns (R, pivot_cols).  R has the same shape as m; pivot entries are 1,
    pivot columns are elementary, pivot column indices strictly increase.
    """
    f = m.field
    z = f.zero
    data = [list(r) for r in m.data]
    rows, cols = m.rows, m.cols
    pivots = []
    pr = 0
    for pc in range(cols):
        piv = None
        for r in range(pr, rows):
            if data[r][pc]:
                piv = r
                break
        if piv is None:
            continue
        data[pr], data[piv] = data[piv], data[pr]
        inv = f.inv(data[pr][pc])
        if inv != f.one:
            data[pr] = [f.mul(inv, v) for v in data[pr]]
        prow = data[pr]
        for r in range(rows):
            if r == pr:
                continue
            c = data[r][pc]
            if c:
                rr = data[r]
                for j in range(pc, cols):
                    if prow[j]:
                        rr[j] = f.sub(rr[j], f.mul(c, prow[j]))
        pivots.append(pc)
        pr += 1
        if pr == rows:
            break
    return Matrix(f, rows, cols, data), pivots


def rank(m):
    return len(rref(m)[1])


def solve_linear(a, b):
    """Solve a·x = b exactly.

    `b` is a column matrix (or list).  Returns the canonical solution with
    free variables set to zero, or None when the system is inconsistent.
    """
    if isinstance(b, list):
        b = Matrix.column(a.field, b)
    if a.rows != b.rows:
        raise UsageError("solve_linear: %d equations but rhs of length %d" % (a.rows, b.rows))
    f = a.field
    z = f.zero
    aug = a.hstack(b)
    red, pivots = rref(aug)
    n = a.cols
    for k, pc in enumerate(pivots):
        if pc >= n:
            return None  # pivot in the rhs column: inconsistent
    x = [z] * n
    for k, pc in enumerate(pivots):
        x[pc] = red.data[k][n]
    return x


def solve_many(a, rhs_mat):
    """Solve a·X = rhs_mat column-by-column; None if any column fails."""
    cols = []
    for j in range(rhs_mat.cols):
        x = solve_linear(a, rhs_mat.col(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix.from_cols(a.field, a.cols, cols)


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """Subspace of k^n with a canonical (RREF) basis.

    Two subspaces are equal as sets iff their canonical bases agree entrywise.
    """

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim, basis):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis  # list of vectors (already canonical)

    @staticmethod
    def from_span(field, ambient_dim, vectors):
        if not vectors:
            return Subspace(field, ambient_dim, [])
        red, pivots = rref(Matrix.from_rows(field, vectors))
        basis = [red.row(i) for i in range(len(pivots))]
        return Subspace(field, ambient_dim, basis)

    @staticmethod
    def full(field, n):
        return Subspace(field, n, [unit_vec(field, n, i) for i in range(n)])

    @property
    def dim(self):
        return len(self.basis)

    def basis_matrix_rows(self):
        return Matrix.from_rows(self.field, self.basis) if self.basis else Matrix.zero(self.field, 0, self.ambient_dim)

    def basis_matrix_cols(self):
        """Basis vectors as columns (ambient_dim x dim)."""
        return self.basis_matrix_rows().transpose()

    def contains(self, vec):
        return self.coords(vec) is not None

    def coords(self, vec):
        """Coordinates of vec in the canonical basis, or None if outside."""
        if len(vec) != self.ambient_dim:
            raise UsageError("vector/ambient dimension mismatch")
        if not self.basis:
            return None if any(vec) else []
        return solve_linear(self.basis_matrix_cols(), vec)

    def contains_space(self, other):
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and other.ambient_dim == self.ambient_dim
                and other.basis == self.basis)

    def __repr__(self):
        return "Subspace(dim %d of k^%d)" % (self.dim, self.ambient_dim)


def kernel(a):
    """Canonical basis of {x : a·x = 0} as a Subspace of k^cols."""
    f = a.field
    z = f.zero
    red, pivots = rref(a)
    free = [j for j in range(a.cols) if j not in pivots]
    vecs = []
    for j in free:
        v = [z] * a.cols
        v[j] = f.one
        for k, pc in enumerate(pivots):
            if red.data[k][j]:
                v[pc] = f.neg(red.data[k][j])
        vecs.append(v)
    return Subspace.from_span(f, a.cols, vecs)


def image(a):
    """Canonical column span of a, as a Subspace of k^rows."""
    cols = [a.col(j) for j in range(a.cols)]
    return Subspace.from_span(a.field, a.rows, cols)


class QuotientSpace:
    """k^n / relations with an explicit projection/section pair.

    The section picks the non-pivot coordinates of the relation echelon form
    as quotient representatives; projection∘section is the identity and the
    kernel of the projection is exactly the relation subspace.
    """

    __slots__ = ("field", "ambient_dim", "relations", "dim", "projection", "section")

    def __init__(self, field, ambient_dim, relations, dim, projection, section):
        self.field = field
        self.ambient_dim = ambient_dim
        self.relations = relations
        self.dim = dim
        self.projection = projection  # dim x ambient_dim
        self.section = section        # ambient_dim x dim


def quotient(ambient_dim, relations):
    """Quotient of k^ambient_dim by a relation subspace."""
    if relations.ambient_dim != ambient_dim:
        raise UsageError("relations live in the wrong ambient space")
    f = relations.field
    z = f.zero
    pivots = []
    col = 0
    for v in relations.basis:
        while v[col] == z:
            col += 1
        pivots.append(col)
        col += 1
    nonpivot = [j for j in range(ambient_dim) if j not in pivots]
    dim = len(nonpivot)
    # projection: reduce mod the RREF relation rows, then read non-pivot coords
    proj = Matrix.zero(f, dim, ambient_dim)
    for q, j in enumerate(nonpivot):
        proj.data[q][j] = f.one
    for k, pc in enumerate(pivots):
        rel = relations.basis[k]
        for q, j in enumerate(nonpivot):
            if rel[j] != z:
                proj.data[q][pc] = f.neg(rel[j])
    sect = Matrix.zero(f, ambient_dim, dim)
    for q, j in enumerate(nonpivot):
        sect.data[j][q] = f.one
    return QuotientSpace(f, ambient_dim, relations, dim, proj, sect)


def product_span(us, vs):
    """Linear span of all pairwise products g·f for g in span(vs), f in span(us).

    `us`, `vs` are lists of matrices; every product vs[i]·us[j] must be
    composable.  Returned as a Subspace of the flattened matrix space.
    """
    if not us or not vs:
        shape_rows = vs[0].rows if vs else (us[0].rows if us else 0)
        shape_cols = us[0].cols if us else (vs[0].cols if vs else 0)
        field = (us[0] if us else vs[0]).field if (us or vs) else QQ
        return Subspace.from_span(field, shape_rows * shape_cols, [])
    f = us[0].field
    prods = []
    for g in vs:
        for u in us:
            if g.cols != u.rows:
                raise UsageError("product_span: %dx%d by %dx%d not composable"
                                 % (g.rows, g.cols, u.rows, u.cols))
            p = g.mul(u)
            prods.append([v for row in p.data for v in row])
    n = vs[0].rows * us[0].cols
    return Subspace.from_span(f, n, prods)


def flatten_matrix(m):
    return [v for row in m.data for v in row]


def unflatten(field, rows, cols, vec):
    if len(vec) != rows * cols:
        raise UsageError("unflatten length mismatch")
    return Matrix(field, rows, cols, [list(vec[i * cols:(i + 1) * cols]) for i in range(rows)])
