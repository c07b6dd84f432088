"""Exact dense linear algebra over a cyclotomic field.

Row-vector convention throughout: vectors are tuples of CycloElem and
multiply matrices from the left, v -> v*M.  Pivoting is deterministic
(first nonzero entry, scanning left to right) so echelon bases and
quotient charts are reproducible.
"""

from .errors import NotASubspace, NotInvertible


# ---------------------------------------------------------------------------
# row vectors as tuples


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(u, c):
    return tuple(a * c for a in u)


def vec_neg(u):
    return tuple(-a for a in u)


def vec_is_zero(u):
    return not any(u)


def dot(u, v):
    """Standard coordinate pairing, no conjugation."""
    assert len(u) == len(v)
    total = None
    for a, b in zip(u, v):
        total = a * b if total is None else total + a * b
    return total


def vec_mat(v, m):
    """v*M for a row vector v of length m.rows."""
    assert len(v) == m.rows
    ncols = m.cols
    e = m.entries
    out = []
    for j in range(ncols):
        acc = None
        for i, a in enumerate(v):
            if a:
                term = a * e[i * ncols + j]
                acc = term if acc is None else acc + term
        out.append(acc if acc is not None else m.field.zero())
    return tuple(out)


def vec_conj(v):
    return tuple(a.conjugate() for a in v)


def vec_coerce(v, field):
    return tuple(a.coerce(field) for a in v)


class Matrix:
    """Immutable dense matrix with CycloElem entries, row-major."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, rows, cols, entries):
        assert len(entries) == rows * cols
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def from_rows(cls, field, rows):
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            assert len(row) == c
            flat.extend(row)
        return cls(field, r, c, flat)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls(field, n, n, [o if i == j else z
                                 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, field, rows, cols):
        z = field.zero()
        return cls(field, rows, cols, [z] * (rows * cols))

    @classmethod
    def scalar(cls, field, n, c):
        z = field.zero()
        return cls(field, n, n, [c if i == j else z
                                 for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.field == other.field and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.field, self.rows, self.cols,
                      [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Matrix(self.field, self.rows, self.cols,
                      [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, self.rows, self.cols,
                      [-a for a in self.entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            assert self.cols == other.rows
            n, m, k = self.rows, other.cols, self.cols
            a, b = self.entries, other.entries
            out = []
            for i in range(n):
                arow = a[i * k:(i + 1) * k]
                for j in range(m):
                    acc = None
                    for t in range(k):
                        x = arow[t]
                        if x:
                            term = x * b[t * m + j]
                            acc = term if acc is None else acc + term
                    out.append(acc if acc is not None else self.field.zero())
            return Matrix(self.field, n, m, out)
        # scalar
        return Matrix(self.field, self.rows, self.cols,
                      [a * other for a in self.entries])

    def __rmul__(self, other):
        return Matrix(self.field, self.rows, self.cols,
                      [other * a for a in self.entries])

    def transpose(self):
        return Matrix(self.field, self.cols, self.rows,
                      [self.entries[j * self.cols + i]
                       for i in range(self.cols) for j in range(self.rows)])

    def conj(self):
        return Matrix(self.field, self.rows, self.cols,
                      [a.conjugate() for a in self.entries])

    def conj_transpose(self):
        return self.transpose().conj()

    def coerce(self, field):
        if field == self.field:
            return self
        return Matrix(field, self.rows, self.cols,
                      [a.coerce(field) for a in self.entries])

    def is_zero(self):
        return not any(self.entries)

    def trace(self):
        assert self.rows == self.cols
        t = self.field.zero()
        for i in range(self.rows):
            t = t + self[i, i]
        return t

    def inverse(self):
        """Gauss-Jordan inverse; raises NotInvertible on a singular matrix."""
        assert self.rows == self.cols
        n = self.rows
        aug = [list(self.row(i)) + list(Matrix.identity(self.field, n).row(i))
               for i in range(n)]
        piv = 0
        for col in range(n):
            hit = None
            for i in range(piv, n):
                if aug[i][col]:
                    hit = i
                    break
            if hit is None:
                raise NotInvertible("matrix is singular")
            aug[piv], aug[hit] = aug[hit], aug[piv]
            inv = aug[piv][col].inverse()
            aug[piv] = [x * inv for x in aug[piv]]
            for i in range(n):
                if i != piv and aug[i][col]:
                    c = aug[i][col]
                    aug[i] = [x - c * y for x, y in zip(aug[i], aug[piv])]
            piv += 1
        return Matrix.from_rows(self.field, [tuple(r[n:]) for r in aug])

    def is_invertible(self):
        try:
            self.inverse()
            return True
        except NotInvertible:
            return False

    def __repr__(self):
        return "Matrix(%d x %d over Q(zeta_%d))" % (
            self.rows, self.cols, self.field.n)


def block_diag(field, blocks):
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = Matrix.zero(field, n, m)
    ent = list(out.entries)
    i0 = j0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                ent[(i0 + i) * m + (j0 + j)] = b[i, j]
        i0 += b.rows
        j0 += b.cols
    return Matrix(field, n, m, ent)


# ---------------------------------------------------------------------------
# elimination


def _rref_rows(rows, track=None):
    """In-place RREF of a list of row lists; returns pivot column list.

    If track is given (another list of row lists, same length) the same
    row operations are applied to it.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    piv = 0
    for col in range(ncols):
        hit = None
        for i in range(piv, nrows):
            if rows[i][col]:
                hit = i
                break
        if hit is None:
            continue
        rows[piv], rows[hit] = rows[hit], rows[piv]
        if track is not None:
            track[piv], track[hit] = track[hit], track[piv]
        inv = rows[piv][col].inverse()
        rows[piv] = [x * inv for x in rows[piv]]
        if track is not None:
            track[piv] = [x * inv for x in track[piv]]
        for i in range(nrows):
            if i != piv and rows[i][col]:
                c = rows[i][col]
                rows[i] = [x - c * y for x, y in zip(rows[i], rows[piv])]
                if track is not None:
                    track[i] = [x - c * y
                                for x, y in zip(track[i], track[piv])]
        pivots.append(col)
        piv += 1
        if piv == nrows:
            break
    return pivots


def rref(m):
    """Reduced row echelon form of a Matrix; returns (Matrix, rank)."""
    rows = [list(m.row(i)) for i in range(m.rows)]
    pivots = _rref_rows(rows)
    return Matrix.from_rows(m.field, [tuple(r) for r in rows]) if m.rows else m, \
        len(pivots)


def solve_row(a, b):
    """Some x with x*a = b, or None.

    Deterministic: the system is reduced with fixed pivot order and free
    coordinates of x are set to 0.
    """
    assert len(b) == a.cols
    # x*a = b  <=>  a^T x^T = b^T; eliminate on [a^T | b^T]
    n = a.rows
    aug = []
    for j in range(a.cols):
        aug.append([a[i, j] for i in range(n)] + [b[j]])
    pivots = _rref_rows(aug)
    if n in pivots:
        return None  # pivot in the augmented column: inconsistent
    zero = a.field.zero()
    x = [zero] * n
    for k, col in enumerate(pivots):
        x[col] = aug[k][n]
    return tuple(x)


def kernel_left(a):
    """The subspace {x : x*a = 0}, via transform tracking."""
    rows = [list(a.row(i)) for i in range(a.rows)]
    ident = Matrix.identity(a.field, a.rows)
    track = [list(ident.row(i)) for i in range(a.rows)]
    pivots = _rref_rows(rows, track)
    rank = len(pivots)
    kern = [tuple(track[i]) for i in range(rank, a.rows)]
    return Subspace.from_rows(a.field, a.rows, kern)


class Subspace:
    """A subspace of row vectors, stored as an RREF basis."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim, basis):
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = basis  # tuple of row tuples, RREF, no zero rows

    @classmethod
    def from_rows(cls, field, ambient_dim, rows):
        rows = [list(r) for r in rows]
        if rows:
            pivots = _rref_rows(rows)
            rows = rows[:len(pivots)]
        return cls(field, ambient_dim, tuple(tuple(r) for r in rows))

    @classmethod
    def full(cls, field, n):
        return cls.from_rows(field, n,
                             Matrix.identity(field, n).row_list())

    @classmethod
    def zero_space(cls, field, n):
        return cls(field, n, ())

    @property
    def dim(self):
        return len(self.basis)

    def pivot_columns(self):
        cols = []
        for row in self.basis:
            for j, x in enumerate(row):
                if x:
                    cols.append(j)
                    break
        return cols

    def reduce(self, v):
        """Remainder of v after eliminating against the basis."""
        v = list(v)
        for row in self.basis:
            pj = next(j for j, x in enumerate(row) if x)
            c = v[pj]
            if c:
                for j in range(pj, len(v)):
                    v[j] = v[j] - c * row[j]
        return tuple(v)

    def contains(self, v):
        return vec_is_zero(self.reduce(v))

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.basis)

    def coordinates_of(self, v):
        """Coefficients of v in the RREF basis, or None if v is outside."""
        coords = []
        v = list(v)
        for row in self.basis:
            pj = next(j for j, x in enumerate(row) if x)
            c = v[pj]
            coords.append(c)
            if c:
                for j in range(pj, len(v)):
                    v[j] = v[j] - c * row[j]
        if any(v):
            return None
        return tuple(coords)

    def coerce(self, field):
        if field == self.field:
            return self
        return Subspace(field, self.ambient_dim,
                        tuple(vec_coerce(r, field) for r in self.basis))

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __repr__(self):
        return "Subspace(dim %d of %d over Q(zeta_%d))" % (
            self.dim, self.ambient_dim, self.field.n)


class QuotientChart:
    """A chart for ambient/sub: representatives and a coordinate map."""

    __slots__ = ("ambient", "sub", "reps", "_solver")

    def __init__(self, ambient, sub, reps):
        self.ambient = ambient
        self.sub = sub
        self.reps = reps
        self._solver = None

    @property
    def dim(self):
        return len(self.reps)

    def _stacked(self):
        if self._solver is None:
            rows = list(self.reps) + list(self.sub.basis)
            self._solver = Matrix.from_rows(
                self.ambient.field, rows) if rows else None
        return self._solver

    def coords(self, v):
        """Coordinates of v in the representatives, modulo sub.

        v must lie in the ambient space.
        """
        if not self.ambient.contains(v):
            raise NotASubspace("vector is not in the ambient space")
        if not self.reps:
            return ()
        x = solve_row(self._stacked(), v)
        assert x is not None
        return x[:len(self.reps)]

    def lift(self, coords):
        """The representative vector with the given chart coordinates."""
        assert len(coords) == len(self.reps)
        out = [self.ambient.field.zero()] * self.ambient.ambient_dim
        out = tuple(out)
        for c, r in zip(coords, self.reps):
            out = vec_add(out, vec_scale(r, c))
        return out


def quotient_chart(ambient, sub):
    """Deterministic chart for ambient/sub.

    Representatives are the first ambient basis vectors that stay
    independent modulo sub, in basis order.
    """
    if not ambient.contains_subspace(sub):
        raise NotASubspace("sub is not contained in ambient")
    reps = []
    span = list(sub.basis)
    have = Subspace.from_rows(ambient.field, ambient.ambient_dim, span)
    for row in ambient.basis:
        if not have.contains(row):
            reps.append(row)
            span.append(row)
            have = Subspace.from_rows(ambient.field, ambient.ambient_dim, span)
    assert len(reps) == ambient.dim - sub.dim
    return QuotientChart(ambient, sub, tuple(reps))
