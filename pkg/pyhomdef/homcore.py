#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Finite-dimensional Hom-algebras given by structure constants.
#
# Conventions:
#
# * basis indices are 0-based
# * `LinearMap.matrix[i, j]` is the coefficient of `e_i` in `alpha(e_j)`,
#   i.e. column `j` holds the image of `e_j`
# * `BilinearMap` stores `c[i][j][k]` with `mu(e_i, e_j) = sum_k c[i][j][k] e_k`
# * `TrilinearMap` stores residuals `T(e_i, e_j, e_k)` as vectors
#
# Structures are stored raw: the defining identities are verified by the
# checkers, never assumed at construction.
#
from fractions import Fraction
from pyhomdef.exactlin.rational import toRational
from pyhomdef.exactlin.matrix import Vector, Matrix, rank, solveAffine
from pyhomdef.checkinfo import CheckInfo, statusPass, statusFail, fromResidual, combine
from pyhomdef import error
from pyhomdef import debug

kindHomAssociative = 'hom-associative'
kindHomLie = 'hom-lie'
kindHomLeibniz = 'hom-leibniz'

KINDS = (kindHomAssociative, kindHomLie, kindHomLeibniz)


def _checkDims(*maps):
    dims = set(m.dim for m in maps)
    if len(dims) != 1:
        raise error.PyHomDefDimensionError(
            'dimension mismatch: %s' % ', '.join(str(m.dim) for m in maps))

    return dims.pop()


class LinearMap(object):
    """Endomorphism of a based space, column `j` is the image of `e_j`."""

    def __init__(self, matrix):
        if matrix.rows != matrix.cols:
            raise error.PyHomDefDimensionError(
                'linear map needs a square matrix, got %sx%s' % matrix.shape)

        self._matrix = matrix

    @classmethod
    def fromRows(cls, rows):
        return cls(Matrix.fromRows(rows))

    @classmethod
    def fromImages(cls, images):
        """Build from the images of the basis vectors."""
        return cls(Matrix.fromColumns(images))

    @classmethod
    def identity(cls, n):
        return cls(Matrix.identity(n))

    @classmethod
    def zero(cls, n):
        return cls(Matrix.zero(n, n))

    @classmethod
    def scalar(cls, n, value):
        return cls(Matrix.identity(n) * value)

    @property
    def dim(self):
        return self._matrix.rows

    @property
    def matrix(self):
        return self._matrix

    def __getitem__(self, index):
        return self._matrix[index]

    def column(self, j):
        return self._matrix.column(j)

    def apply(self, vector):
        return self._matrix * vector

    def compose(self, other):
        """`self o other`"""
        _checkDims(self, other)
        return LinearMap(self._matrix * other.matrix)

    def commutator(self, other):
        """`self o other - other o self`"""
        return self.compose(other) - other.compose(self)

    def kron(self, other):
        n, m = self.dim, other.dim
        entries = []
        for i in range(n):
            for k in range(m):
                for j in range(n):
                    for l in range(m):
                        entries.append(self._matrix[i, j] * other.matrix[k, l])

        return LinearMap(Matrix(n * m, n * m, entries))

    def isIdentity(self):
        return self._matrix == Matrix.identity(self.dim)

    def __add__(self, other):
        _checkDims(self, other)
        return LinearMap(self._matrix + other.matrix)

    def __sub__(self, other):
        _checkDims(self, other)
        return LinearMap(self._matrix - other.matrix)

    def __neg__(self):
        return LinearMap(-self._matrix)

    def __mul__(self, scalar):
        return LinearMap(self._matrix * toRational(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LinearMap):
            return self._matrix == other.matrix
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, LinearMap):
            return self._matrix != other.matrix
        return NotImplemented

    def __hash__(self):
        return hash(self._matrix)

    def __bool__(self):
        return bool(self._matrix)

    def isZero(self):
        return not self

    def __repr__(self):
        return 'LinearMap(%s)' % '; '.join(
            ', '.join(str(x) for x in row) for row in self._matrix.toRows())


class BilinearMap(object):
    """Bilinear map given by its structure constants.

    Args:
        dim (int): dimension `n` of the underlying space
        tensor: `n**3` coefficients in row-major `(i, j, k)` order

    Keyword Args:
        alternating (bool): declare the map alternating; the tensor is
            then required to satisfy `c[i][j] = -c[j][i]`
    """

    def __init__(self, dim, tensor, alternating=False):
        tensor = tuple(toRational(x) for x in tensor)

        if dim <= 0 or len(tensor) != dim ** 3:
            raise error.PyHomDefDimensionError(
                'bilinear map of dimension %s needs %s coefficients, %s given' % (
                    dim, dim ** 3, len(tensor)))

        self._dim = dim
        self._tensor = tensor
        self._alternating = False

        if alternating:
            witness = self._skewWitness()
            if witness is not None:
                raise error.PyHomDefKindError(
                    'bracket is not alternating at %s' % (witness,), triple=witness)
            self._alternating = True

    @classmethod
    def zero(cls, n, alternating=False):
        return cls(n, [0] * n ** 3, alternating=alternating)

    @classmethod
    def fromProducts(cls, n, products, alternating=False):
        """Build from sparse products.

        Args:
            n (int): dimension
            products (dict): `{(i, j): {k: coefficient}}` or `{(i, j): Vector}`

        Keyword Args:
            alternating (bool): for alternating maps only one of `(i, j)`,
                `(j, i)` needs to be given, the other is implied; if both are
                present they must agree
        """
        tensor = [Fraction(0)] * n ** 3

        for (i, j), out in sorted(products.items()):
            if not (0 <= i < n and 0 <= j < n):
                raise error.PyHomDefDimensionError(
                    'product index (%s, %s) out of range for dimension %s' % (i, j, n))

            if isinstance(out, Vector):
                out = dict(enumerate(out))

            for k, c in out.items():
                if not 0 <= k < n:
                    raise error.PyHomDefDimensionError(
                        'output index %s out of range for dimension %s' % (k, n))

                c = toRational(c)

                tensor[(i * n + j) * n + k] += c

                if alternating and i != j and (j, i) not in products:
                    tensor[(j * n + i) * n + k] -= c

        return cls(n, tensor, alternating=alternating)

    @property
    def dim(self):
        return self._dim

    @property
    def tensor(self):
        return self._tensor

    @property
    def alternating(self):
        return self._alternating

    def coefficient(self, i, j, k):
        n = self._dim
        return self._tensor[(i * n + j) * n + k]

    def product(self, i, j):
        """`mu(e_i, e_j)` as a Vector."""
        n = self._dim
        offset = (i * n + j) * n
        return Vector(self._tensor[offset:offset + n])

    def _row(self, i, j):
        n = self._dim
        offset = (i * n + j) * n
        return self._tensor[offset:offset + n]

    def apply(self, u, v):
        """`mu(u, v)` for coordinate vectors `u`, `v`."""
        n = self._dim
        out = [Fraction(0)] * n
        for i, x in enumerate(u):
            if not x:
                continue
            for j, y in enumerate(v):
                if not y:
                    continue
                xy = x * y
                for k, c in enumerate(self._row(i, j)):
                    if c:
                        out[k] += xy * c

        return Vector(out)

    def products(self):
        """Yield `((i, j), Vector)` for every nonzero product, lexicographically."""
        n = self._dim
        for i in range(n):
            for j in range(n):
                if any(self._row(i, j)):
                    yield (i, j), self.product(i, j)

    def _skewWitness(self):
        n = self._dim
        for i in range(n):
            for j in range(i, n):
                a, b = self._row(i, j), self._row(j, i)
                if any(x + y for x, y in zip(a, b)):
                    return i, j

    def skewResidual(self, i, j):
        """`mu(e_i, e_j) + mu(e_j, e_i)`, zero for alternating maps."""
        return self.product(i, j) + self.product(j, i)

    def isAlternating(self):
        return self._alternating or self._skewWitness() is None

    def isSymmetric(self):
        n = self._dim
        for i in range(n):
            for j in range(i + 1, n):
                if self._row(i, j) != self._row(j, i):
                    return False
        return True

    def symmetryWitness(self):
        """First `(i, j)` with `mu(e_i, e_j) != mu(e_j, e_i)` or None."""
        n = self._dim
        for i in range(n):
            for j in range(i + 1, n):
                if self._row(i, j) != self._row(j, i):
                    return i, j

    def asAlternating(self):
        if self._alternating:
            return self
        return BilinearMap(self._dim, self._tensor, alternating=True)

    def transposed(self):
        """`(x, y) -> mu(y, x)`"""
        n = self._dim
        return BilinearMap(
            n, [self._tensor[(j * n + i) * n + k] for i in range(n) for j in range(n) for k in range(n)],
            alternating=self._alternating)

    def antisymmetrized(self):
        """`(x, y) -> mu(x, y) - mu(y, x)`, always alternating."""
        n = self._dim
        t = self._tensor
        return BilinearMap(
            n, [t[(i * n + j) * n + k] - t[(j * n + i) * n + k]
                for i in range(n) for j in range(n) for k in range(n)],
            alternating=True)

    def postcompose(self, f):
        """`f o mu`"""
        _checkDims(self, f)
        n = self._dim
        tensor = []
        for i in range(n):
            for j in range(n):
                tensor.extend(f.apply(self.product(i, j)))

        return BilinearMap(n, tensor, alternating=self._alternating)

    def precompose(self, f, g):
        """`(x, y) -> mu(f(x), g(y))`"""
        _checkDims(self, f, g)
        n = self._dim
        fc = [f.column(i) for i in range(n)]
        gc = [g.column(j) for j in range(n)]
        tensor = []
        for i in range(n):
            for j in range(n):
                tensor.extend(self.apply(fc[i], gc[j]))

        return BilinearMap(n, tensor, alternating=self._alternating and f == g)

    def kron(self, other):
        n, m = self._dim, other.dim
        d = n * m
        tensor = [Fraction(0)] * d ** 3
        for (i, j), u in self.products():
            for (k, l), v in other.products():
                row = ((i * m + k) * d + (j * m + l)) * d
                for p, x in enumerate(u):
                    if not x:
                        continue
                    for q, y in enumerate(v):
                        if y:
                            tensor[row + p * m + q] = x * y

        return BilinearMap(d, tensor)

    def __add__(self, other):
        _checkDims(self, other)
        return BilinearMap(self._dim, [a + b for a, b in zip(self._tensor, other.tensor)],
                           alternating=self._alternating and other.alternating)

    def __sub__(self, other):
        _checkDims(self, other)
        return BilinearMap(self._dim, [a - b for a, b in zip(self._tensor, other.tensor)],
                           alternating=self._alternating and other.alternating)

    def __neg__(self):
        return BilinearMap(self._dim, [-a for a in self._tensor], alternating=self._alternating)

    def __mul__(self, scalar):
        scalar = toRational(scalar)
        return BilinearMap(self._dim, [a * scalar for a in self._tensor], alternating=self._alternating)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, BilinearMap):
            return self._dim == other.dim and self._tensor == other.tensor
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, BilinearMap):
            return not self == other
        return NotImplemented

    def __hash__(self):
        return hash((self._dim, self._tensor))

    def __bool__(self):
        return any(self._tensor)

    def isZero(self):
        return not self

    def __repr__(self):
        return 'BilinearMap(%s, {%s}%s)' % (
            self._dim,
            ', '.join('(%s, %s): %r' % (i, j, v) for (i, j), v in self.products()),
            self._alternating and ', alternating' or '')


class TrilinearMap(object):
    """Vector-valued trilinear map, used for every identity residual."""

    def __init__(self, dim, tensor):
        tensor = tuple(toRational(x) for x in tensor)

        if len(tensor) != dim ** 4:
            raise error.PyHomDefDimensionError(
                'trilinear map of dimension %s needs %s coefficients, %s given' % (
                    dim, dim ** 4, len(tensor)))

        self._dim = dim
        self._tensor = tensor

    @classmethod
    def zero(cls, n):
        return cls(n, [0] * n ** 4)

    @classmethod
    def fromFunction(cls, n, fun):
        """Tabulate `fun(i, j, k) -> Vector` over all basis triples."""
        tensor = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    tensor.extend(fun(i, j, k))

        return cls(n, tensor)

    @property
    def dim(self):
        return self._dim

    @property
    def tensor(self):
        return self._tensor

    def value(self, i, j, k):
        n = self._dim
        offset = ((i * n + j) * n + k) * n
        return Vector(self._tensor[offset:offset + n])

    def firstNonZero(self):
        """Lexicographically first `((i, j, k), Vector)` with a nonzero value."""
        n = self._dim
        for offset in range(0, len(self._tensor), n):
            if any(self._tensor[offset:offset + n]):
                idx = offset // n
                return (idx // (n * n), (idx // n) % n, idx % n), Vector(self._tensor[offset:offset + n])

    def permuted(self, perm):
        """`T'(x0, x1, x2) = T(x[perm[0]], x[perm[1]], x[perm[2]])`"""
        n = self._dim
        t = self._tensor
        tensor = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    x = (i, j, k)
                    offset = ((x[perm[0]] * n + x[perm[1]]) * n + x[perm[2]]) * n
                    tensor.extend(t[offset:offset + n])

        return TrilinearMap(n, tensor)

    def cyclic(self):
        """`T(x, y, z) + T(y, z, x) + T(z, x, y)`"""
        return self + self.permuted((1, 2, 0)) + self.permuted((2, 0, 1))

    def isAlternating(self):
        swapped = self.permuted((0, 2, 1))
        return not (self + swapped) and not (self + self.permuted((1, 0, 2)))

    def toVector(self):
        return Vector(self._tensor)

    def __add__(self, other):
        if self._dim != other.dim:
            raise error.PyHomDefDimensionError(
                'dimension mismatch: %s vs %s' % (self._dim, other.dim))
        return TrilinearMap(self._dim, [a + b for a, b in zip(self._tensor, other.tensor)])

    def __sub__(self, other):
        if self._dim != other.dim:
            raise error.PyHomDefDimensionError(
                'dimension mismatch: %s vs %s' % (self._dim, other.dim))
        return TrilinearMap(self._dim, [a - b for a, b in zip(self._tensor, other.tensor)])

    def __neg__(self):
        return TrilinearMap(self._dim, [-a for a in self._tensor])

    def __mul__(self, scalar):
        scalar = toRational(scalar)
        return TrilinearMap(self._dim, [a * scalar for a in self._tensor])

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TrilinearMap):
            return self._dim == other.dim and self._tensor == other.tensor
        return NotImplemented

    def __ne__(self, other):
        if isinstance(other, TrilinearMap):
            return not self == other
        return NotImplemented

    def __hash__(self):
        return hash((self._dim, self._tensor))

    def __bool__(self):
        return any(self._tensor)

    def isZero(self):
        return not self

    def __repr__(self):
        witness = self.firstNonZero()
        if witness is None:
            return 'TrilinearMap(%s, zero)' % self._dim
        return 'TrilinearMap(%s, first nonzero at %s: %r)' % (self._dim, witness[0], witness[1])


def composeLeft(outer, alpha, inner):
    """`(x, y, z) -> outer(alpha(x), inner(y, z))`"""
    n = _checkDims(outer, alpha, inner)

    if not outer or not alpha or not inner:
        return TrilinearMap.zero(n)

    images = [alpha.column(i) for i in range(n)]
    products = [[inner.product(j, k) for k in range(n)] for j in range(n)]

    return TrilinearMap.fromFunction(
        n, lambda i, j, k: outer.apply(images[i], products[j][k]))


def composeRight(outer, inner, alpha):
    """`(x, y, z) -> outer(inner(x, y), alpha(z))`"""
    n = _checkDims(outer, alpha, inner)

    if not outer or not alpha or not inner:
        return TrilinearMap.zero(n)

    images = [alpha.column(k) for k in range(n)]
    products = [[inner.product(i, j) for j in range(n)] for i in range(n)]

    return TrilinearMap.fromFunction(
        n, lambda i, j, k: outer.apply(products[i][j], images[k]))


def alphaAssociator(mui, muj, alpha):
    """`mu_i o_alpha mu_j (x, y, z) = mu_i(alpha(x), mu_j(y, z)) - mu_i(mu_j(x, y), alpha(z))`"""
    return composeLeft(mui, alpha, muj) - composeRight(mui, muj, alpha)


def twistedJacobiator(outer, alpha, inner):
    """Cyclic sum of `outer(alpha(x), inner(y, z))`."""
    return composeLeft(outer, alpha, inner).cyclic()


class HomAlgebra(object):
    """Triple `(V, product, alpha)` of a given kind.

    Args:
        kind (str): `hom-associative`, `hom-lie` or `hom-leibniz`
        product (BilinearMap): multiplication or bracket
        alpha (LinearMap): twist map

    Keyword Args:
        labels (list): basis labels, default `e1, e2, ...`

    Raises:
        PyHomDefKindError: unknown kind, or a non-alternating `hom-lie` bracket
        PyHomDefDimensionError: product and twist live on different spaces
    """

    def __init__(self, kind, product, alpha, labels=None):
        if kind not in KINDS:
            raise error.PyHomDefKindError('unknown algebra kind %s' % kind)

        n = _checkDims(product, alpha)

        if labels is None:
            labels = ['e%d' % (i + 1) for i in range(n)]

        labels = [str(x) for x in labels]

        if len(labels) != n:
            raise error.PyHomDefDimensionError(
                '%s basis labels given for dimension %s' % (len(labels), n))

        if kind == kindHomLie:
            product = product.asAlternating()

        self.kind = kind
        self.product = product
        self.alpha = alpha
        self.labels = labels

    @property
    def dim(self):
        return self.product.dim

    def withKind(self, kind):
        return HomAlgebra(kind, self.product, self.alpha, labels=self.labels)

    def __eq__(self, other):
        if isinstance(other, HomAlgebra):
            return (self.kind, self.product, self.alpha, self.labels) == (
                other.kind, other.product, other.alpha, other.labels)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.kind, self.product, self.alpha, tuple(self.labels)))

    def __repr__(self):
        return 'HomAlgebra(%s, dim=%s, labels=%s)' % (self.kind, self.dim, self.labels)


class HomPoissonAlgebra(object):
    """Quadruple `(V, mu, bracket, alpha)`.

    Commutativity of `mu` and alternation of `bracket` are axioms
    verified by `hompoisson.checkHomPoisson`, not construction invariants.
    """

    def __init__(self, mu, bracket, alpha, labels=None):
        n = _checkDims(mu, bracket, alpha)

        if labels is None:
            labels = ['e%d' % (i + 1) for i in range(n)]

        self.mu = mu
        self.bracket = bracket
        self.alpha = alpha
        self.labels = [str(x) for x in labels]

    @property
    def dim(self):
        return self.mu.dim

    def __repr__(self):
        return 'HomPoissonAlgebra(dim=%s, labels=%s)' % (self.dim, self.labels)


def _requireKind(a, kind):
    if a.kind != kind:
        raise error.PyHomDefKindError(
            'expected %s algebra, got %s' % (kind, a.kind), kind=a.kind)


def homAssociator(mu, alpha, i, j, k):
    """`mu(alpha(e_i), mu(e_j, e_k)) - mu(mu(e_i, e_j), alpha(e_k))`"""
    _checkDims(mu, alpha)
    return (mu.apply(alpha.column(i), mu.product(j, k)) -
            mu.apply(mu.product(i, j), alpha.column(k)))


def homJacobiator(bracket, alpha, i, j, k):
    """Cyclic sum of `[alpha(x), [y, z]]` at `(e_i, e_j, e_k)`.

    Raises:
        PyHomDefKindError: if the bracket is not alternating
    """
    _checkDims(bracket, alpha)

    if not bracket.isAlternating():
        raise error.PyHomDefKindError('Hom-Jacobiator needs an alternating bracket')

    result = Vector.zero(bracket.dim)
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        result += bracket.apply(alpha.column(x), bracket.product(y, z))

    return result


def skewCheck(name, bracket):
    """Verdict on alternation, witness is the first offending pair `(i, j)`."""
    n = bracket.dim
    for i in range(n):
        for j in range(i, n):
            if i == j:
                residual = bracket.product(i, i)
            else:
                residual = bracket.skewResidual(i, j)
            if residual:
                return CheckInfo(name=name, status=statusFail, triple=(i, j),
                                 residual=tuple(residual))

    return CheckInfo(name=name, status=statusPass)


def checkHomAssociative(a):
    """Hom-associativity of `a` on all `n**3` basis triples.

    Raises:
        PyHomDefKindError: `a` is not declared hom-associative
    """
    _requireKind(a, kindHomAssociative)

    return fromResidual('hom-associativity', alphaAssociator(a.product, a.product, a.alpha))


def checkHomLie(a):
    """Alternation plus the Hom-Jacobi condition."""
    _requireKind(a, kindHomLie)

    skew = skewCheck('skew-symmetry', a.product)

    if skew:
        jacobi = fromResidual('hom-jacobi', twistedJacobiator(a.product, a.alpha, a.product))
    else:
        jacobi = CheckInfo(name='hom-jacobi', status=statusFail,
                           message='bracket is not alternating')

    return combine('hom-lie', (skew, jacobi))


def leibnizator(bracket, alpha):
    """`[[x,y],alpha(z)] - [[x,z],alpha(y)] - [alpha(x),[y,z]]` as a tensor."""
    right = composeRight(bracket, bracket, alpha)
    return right - right.permuted((0, 2, 1)) - composeLeft(bracket, alpha, bracket)


def checkHomLeibniz(a):
    _requireKind(a, kindHomLeibniz)

    return fromResidual('hom-leibniz', leibnizator(a.product, a.alpha))


def checkIdentity(a):
    """Run the checker matching `a.kind`."""
    checker = {
        kindHomAssociative: checkHomAssociative,
        kindHomLie: checkHomLie,
        kindHomLeibniz: checkHomLeibniz
    }[a.kind]

    report = checker(a)

    debug.logger & debug.flagHomcore and debug.logger(
        '%s identity check of %s-dimensional algebra: %s' % (a.kind, a.dim, report.status))

    return report


def tensorProduct(a, b):
    """`(V1 (x) V2, mu1 (x) mu2, alpha1 (x) alpha2)`, basis ordered `(i, k) -> i * dim(b) + k`."""
    _requireKind(a, kindHomAssociative)
    _requireKind(b, kindHomAssociative)

    labels = ['(%s,%s)' % (x, y) for x in a.labels for y in b.labels]

    return HomAlgebra(kindHomAssociative, a.product.kron(b.product),
                      a.alpha.kron(b.alpha), labels=labels)


def isMorphism(phi, a, b):
    """True iff `mu_b o (phi x phi) = phi o mu_a` and `phi o alpha_a = alpha_b o phi`."""
    n = _checkDims(phi, a.product, b.product)

    if phi.compose(a.alpha) != b.alpha.compose(phi):
        return False

    images = [phi.column(i) for i in range(n)]

    for i in range(n):
        for j in range(n):
            if b.product.apply(images[i], images[j]) != phi.apply(a.product.product(i, j)):
                return False

    return True


def isIsomorphism(phi, a, b):
    return rank(phi.matrix) == phi.dim and isMorphism(phi, a, b)


def findUnit(a):
    """Two-sided unit of a hom-associative algebra or None.

    Solves `mu(e_x, u) = mu(u, e_x) = e_x` for all basis vectors at once.
    """
    _requireKind(a, kindHomAssociative)

    n = a.dim
    mu = a.product

    rows = []
    rhs = []
    for x in range(n):
        for l in range(n):
            rows.append([mu.coefficient(x, k, l) for k in range(n)])
            rhs.append(x == l and 1 or 0)
            rows.append([mu.coefficient(k, x, l) for k in range(n)])
            rhs.append(x == l and 1 or 0)

    solution = solveAffine(Matrix.fromRows(rows), Vector(rhs))

    debug.logger & debug.flagHomcore and debug.logger(
        'unit search: %s' % (solution and 'found %r' % (solution[0],) or 'none'))

    if solution is None:
        return None

    return solution[0]


def isUnitalMorphism(phi, a, b):
    unitA = findUnit(a)
    unitB = findUnit(b)

    if unitA is None or unitB is None:
        return False

    return phi.apply(unitA) == unitB and isMorphism(phi, a, b)


def commutatorAlgebra(a):
    """Commutator bracket `mu(x, y) - mu(y, x)` with the same twist."""
    _requireKind(a, kindHomAssociative)

    return HomAlgebra(kindHomLie, a.product.antisymmetrized(), a.alpha, labels=a.labels)
