#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Dense exact linear algebra over the rationals. Bases returned by
# `kernelBasis` are the canonical free-variable bases read off the
# reduced row echelon form, so every derived output is deterministic.
#
from fractions import Fraction
from pyhomdef.exactlin.rational import toRational
from pyhomdef import error
from pyhomdef import debug


class Vector(object):
    """Immutable column vector of Fractions."""

    def __init__(self, entries):
        self._entries = tuple(toRational(x) for x in entries)

    @classmethod
    def zero(cls, dim):
        return cls([0] * dim)

    @classmethod
    def basis(cls, dim, i):
        """Standard basis vector `e_i` (0-based)."""
        entries = [0] * dim
        entries[i] = 1
        return cls(entries)

    @property
    def dim(self):
        return len(self._entries)

    @property
    def entries(self):
        return self._entries

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __getitem__(self, i):
        return self._entries[i]

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self._entries == other._entries
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, Vector):
            return self._entries != other._entries
        return NotImplemented

    def __hash__(self):
        return hash(self._entries)

    def __bool__(self):
        return any(self._entries)

    def isZero(self):
        return not self

    def __repr__(self):
        return 'Vector(%s)' % ', '.join(str(x) for x in self._entries)

    def _check(self, other):
        if self.dim != other.dim:
            raise error.PyHomDefDimensionError(
                'vector dimension mismatch: %s vs %s' % (self.dim, other.dim))

    def __add__(self, other):
        self._check(other)
        return Vector([a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other):
        self._check(other)
        return Vector([a - b for a, b in zip(self._entries, other._entries)])

    def __neg__(self):
        return Vector([-a for a in self._entries])

    def __mul__(self, scalar):
        scalar = toRational(scalar)
        return Vector([a * scalar for a in self._entries])

    __rmul__ = __mul__

    def dot(self, other):
        self._check(other)
        return sum((a * b for a, b in zip(self._entries, other._entries)), Fraction(0))

    def concat(self, other):
        return Vector(self._entries + other._entries)


class Matrix(object):
    """Immutable dense matrix of Fractions, stored row-major."""

    def __init__(self, rows, cols, entries):
        entries = tuple(toRational(x) for x in entries)

        if len(entries) != rows * cols:
            raise error.PyHomDefDimensionError(
                'matrix of shape %sx%s needs %s entries, %s given' % (
                    rows, cols, rows * cols, len(entries)))

        self._rows = rows
        self._cols = cols
        self._entries = entries

    @classmethod
    def fromRows(cls, rows):
        rows = [list(row) for row in rows]

        if not rows:
            raise error.PyHomDefDimensionError('matrix needs at least one row')

        cols = len(rows[0])
        for row in rows:
            if len(row) != cols:
                raise error.PyHomDefDimensionError('ragged matrix rows')

        return cls(len(rows), cols, [x for row in rows for x in row])

    @classmethod
    def fromColumns(cls, columns):
        columns = [list(col) for col in columns]

        if not columns:
            raise error.PyHomDefDimensionError('matrix needs at least one column')

        rows = len(columns[0])
        for col in columns:
            if len(col) != rows:
                raise error.PyHomDefDimensionError('ragged matrix columns')

        return cls(rows, len(columns), [columns[j][i] for i in range(rows) for j in range(len(columns))])

    @classmethod
    def identity(cls, n):
        return cls(n, n, [i == j and 1 or 0 for i in range(n) for j in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, [0] * (rows * cols))

    @classmethod
    def stack(cls, *matrices):
        """Stack matrices with equal column counts on top of each other."""
        cols = matrices[0].cols
        entries = []
        rows = 0
        for m in matrices:
            if m.cols != cols:
                raise error.PyHomDefDimensionError(
                    'cannot stack %s-column and %s-column matrices' % (cols, m.cols))
            entries.extend(m.entries)
            rows += m.rows

        return cls(rows, cols, entries)

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def entries(self):
        return self._entries

    @property
    def shape(self):
        return self._rows, self._cols

    def __getitem__(self, index):
        i, j = index
        return self._entries[i * self._cols + j]

    def row(self, i):
        return Vector(self._entries[i * self._cols:(i + 1) * self._cols])

    def column(self, j):
        return Vector(self._entries[j::self._cols])

    def toRows(self):
        return [list(self._entries[i * self._cols:(i + 1) * self._cols]) for i in range(self._rows)]

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.shape == other.shape and self._entries == other._entries
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, Matrix):
            return not self == other
        return NotImplemented

    def __hash__(self):
        return hash((self.shape, self._entries))

    def __bool__(self):
        return any(self._entries)

    def isZero(self):
        return not self

    def __repr__(self):
        return 'Matrix(%s)' % '; '.join(
            ', '.join(str(x) for x in row) for row in self.toRows())

    def _checkShape(self, other):
        if self.shape != other.shape:
            raise error.PyHomDefDimensionError(
                'matrix shape mismatch: %s vs %s' % (self.shape, other.shape))

    def __add__(self, other):
        self._checkShape(other)
        return Matrix(self._rows, self._cols, [a + b for a, b in zip(self._entries, other._entries)])

    def __sub__(self, other):
        self._checkShape(other)
        return Matrix(self._rows, self._cols, [a - b for a, b in zip(self._entries, other._entries)])

    def __neg__(self):
        return Matrix(self._rows, self._cols, [-a for a in self._entries])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self._matrixMultiply(other)

        if isinstance(other, Vector):
            return self._vectorMultiply(other)

        scalar = toRational(other)
        return Matrix(self._rows, self._cols, [a * scalar for a in self._entries])

    def __rmul__(self, other):
        scalar = toRational(other)
        return Matrix(self._rows, self._cols, [a * scalar for a in self._entries])

    def _matrixMultiply(self, other):
        if self._cols != other.rows:
            raise error.PyHomDefDimensionError(
                'cannot multiply %sx%s by %sx%s' % (self._rows, self._cols, other.rows, other.cols))

        n, m, p = self._rows, self._cols, other.cols
        a, b = self._entries, other.entries

        entries = [Fraction(0)] * (n * p)
        for i in range(n):
            for k in range(m):
                x = a[i * m + k]
                if not x:
                    continue
                for j in range(p):
                    y = b[k * p + j]
                    if y:
                        entries[i * p + j] += x * y

        return Matrix(n, p, entries)

    def _vectorMultiply(self, vector):
        if self._cols != vector.dim:
            raise error.PyHomDefDimensionError(
                'cannot multiply %sx%s matrix by %s-vector' % (self._rows, self._cols, vector.dim))

        m = self._cols
        entries = []
        for i in range(self._rows):
            row = self._entries[i * m:(i + 1) * m]
            entries.append(sum((x * y for x, y in zip(row, vector) if x and y), Fraction(0)))

        return Vector(entries)

    def transpose(self):
        return Matrix(self._cols, self._rows,
                      [self._entries[i * self._cols + j] for j in range(self._cols) for i in range(self._rows)])


def _echelon(m):
    # Gauss-Jordan elimination, returns mutable reduced rows and pivot columns
    rows = m.toRows()
    nrows, ncols = m.rows, m.cols

    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break

        p = None
        for i in range(r, nrows):
            if rows[i][c]:
                p = i
                break

        if p is None:
            continue

        rows[r], rows[p] = rows[p], rows[r]

        pivot = rows[r][c]
        if pivot != 1:
            rows[r] = [x / pivot for x in rows[r]]

        for i in range(nrows):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]

        pivots.append(c)
        r += 1

    return rows, pivots


def rref(m):
    """Reduced row echelon form.

    Args:
        m (Matrix): any matrix

    Returns:
        tuple: (`Matrix` in reduced row echelon form, rank)
    """
    rows, pivots = _echelon(m)

    debug.logger & debug.flagExactlin and debug.logger(
        'rref of %sx%s matrix has rank %s' % (m.rows, m.cols, len(pivots)))

    return Matrix.fromRows(rows), len(pivots)


def rank(m):
    return len(_echelon(m)[1])


def kernelBasis(m):
    """Canonical basis of the null space of `m`.

    One vector per free column `f`, taking value 1 at `f`, 0 at the other
    free columns and the back-substituted values at the pivot columns.

    Returns:
        list: `Vector` objects, `m.cols - rank(m)` of them
    """
    rows, pivots = _echelon(m)

    pivotSet = set(pivots)
    free = [c for c in range(m.cols) if c not in pivotSet]

    basis = []
    for f in free:
        entries = [Fraction(0)] * m.cols
        entries[f] = Fraction(1)
        for r, c in enumerate(pivots):
            entries[c] = -rows[r][f]
        basis.append(Vector(entries))

    debug.logger & debug.flagExactlin and debug.logger(
        'kernel of %sx%s matrix has dimension %s' % (m.rows, m.cols, len(basis)))

    return basis


def solveAffine(a, b):
    """Solve `a * x = b` exactly.

    Returns:
        tuple or None: (particular solution `Vector`, kernel basis list) when
        the system is consistent, None otherwise. The particular solution
        has zeros at all free columns.
    """
    if a.rows != b.dim:
        raise error.PyHomDefDimensionError(
            'right-hand side of dimension %s for %s equations' % (b.dim, a.rows))

    rowsA = a.toRows()
    augmented = Matrix(a.rows, a.cols + 1,
                       [x for i in range(a.rows) for x in rowsA[i] + [b[i]]])

    rows, pivots = _echelon(augmented)

    if pivots and pivots[-1] == a.cols:
        debug.logger & debug.flagExactlin and debug.logger(
            'affine system of %sx%s is inconsistent' % (a.rows, a.cols))
        return None

    particular = [Fraction(0)] * a.cols
    for r, c in enumerate(pivots):
        particular[c] = rows[r][a.cols]

    return Vector(particular), kernelBasis(a)
