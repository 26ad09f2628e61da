#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Structure documents are JSON. Two formats exist:
#
#   {"format": "algebra", "kind": ..., "dim": n, "basis": [...],
#    "product": [{"i": 0, "j": 1, "out": {"1": "2"}}, ...],
#    "alpha": [["1", "0"], ["0", "1"]]}
#
#   {"format": "deformation", "flavor": ..., "order": N, "base": {...},
#    "products": [null, [...], ...], "alphas": [null, [[...]], ...]}
#
# Rationals are strings in the `-?digits(/digits)?` language; plain JSON
# integers are accepted too. Products are sparse; for the lie kind a
# pair given as `(i, j)` implies `(j, i)`.
#
import json
import sys
from collections import OrderedDict
from pyhomdef.parser.base import AbstractParser
from pyhomdef.parser.options import parseOption
from pyhomdef.homcore import KINDS, kindHomLie, kindHomAssociative, LinearMap, BilinearMap, HomAlgebra
from pyhomdef.exactlin.matrix import Matrix
from pyhomdef.cochain import flavorLie, FLAVORS
from pyhomdef.deform import DeformationSeries
from pyhomdef import error
from pyhomdef import debug

formatAlgebra = 'algebra'
formatDeformation = 'deformation'


class AlgebraFileParser(AbstractParser):
    """Turn a structure document into a `HomAlgebra` or `DeformationSeries`.

    Malformed JSON raises `PyHomDefSyntaxError`, semantic problems raise
    `PyHomDefParserError`. Both carry the line and column of the offending
    text when it can be located, and a `path` attribute naming the
    document field.
    """

    def __init__(self):
        self._text = ''

    def reset(self):
        self._text = ''

    def parse(self, data, **kwargs):
        self._text = data

        try:
            try:
                doc = json.loads(data, object_pairs_hook=OrderedDict)

            except ValueError:
                exc = sys.exc_info()[1]
                raise error.PyHomDefSyntaxError(
                    'malformed JSON: %s' % getattr(exc, 'msg', exc),
                    lineno=getattr(exc, 'lineno', '?'), colno=getattr(exc, 'colno', '?'))

            if not isinstance(doc, dict):
                raise self._error('document must be a JSON object', '$')

            fmt = doc.get('format')

            debug.logger & debug.flagParser and debug.logger(
                'parsing %s document of %s characters' % (fmt, len(data)))

            if fmt == formatAlgebra:
                return self._algebra(doc, '$')

            if fmt == formatDeformation:
                return self._deformation(doc, '$')

            raise self._error('unknown document format %r' % (fmt,), '$.format', fmt)

        finally:
            self.reset()

    def _locate(self, literal):
        if literal is None:
            return {}

        needle = json.dumps(literal)

        # ambiguous literals stay unlocated
        idx = self._text.find(needle)
        if idx < 0 or self._text.find(needle, idx + 1) >= 0:
            return {}

        return {'lineno': self._text.count('\n', 0, idx) + 1,
                'colno': idx - self._text.rfind('\n', 0, idx)}

    def _error(self, msg, path, literal=None, cls=error.PyHomDefParserError):
        return cls('%s at %s' % (msg, path), path=path, **self._locate(literal))

    def _field(self, doc, name, path, types):
        if name not in doc:
            raise self._error('missing field %s' % name, path)

        value = doc[name]
        if not isinstance(value, types) or isinstance(value, bool):
            raise self._error('bad value type of %s' % name, '%s.%s' % (path, name), value)

        return value

    def _rational(self, value, path):
        if isinstance(value, int) and not isinstance(value, bool):
            return value

        if not isinstance(value, str):
            raise self._error('rational must be a string', path, value)

        try:
            return parseOption('rational', value)

        except error.PyHomDefLexerError:
            exc = sys.exc_info()[1]
            raise self._error('bad rational %r: %s' % (value, exc.msg), path, value,
                              cls=error.PyHomDefSyntaxError)

    def _index(self, value, n, path):
        # output indices are JSON object keys, hence strings
        if isinstance(value, str):
            try:
                value = int(value)

            except ValueError:
                raise self._error('bad index %r' % value, path, value)

        if not isinstance(value, int) or isinstance(value, bool) or not 0 <= value < n:
            raise self._error('index %r out of range for dimension %s' % (value, n), path, value)

        return value

    def _matrix(self, rows, n, path):
        if not isinstance(rows, list) or len(rows) != n:
            raise self._error('matrix must have %s rows' % n, path)

        entries = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != n:
                raise self._error('matrix row must have %s entries' % n, '%s[%s]' % (path, i))
            for j, x in enumerate(row):
                entries.append(self._rational(x, '%s[%s][%s]' % (path, i, j)))

        return LinearMap(Matrix(n, n, entries))

    def _products(self, entries, n, alternating, path, lenient=False):
        if not isinstance(entries, list):
            raise self._error('product must be a list', path)

        products = OrderedDict()

        for idx, entry in enumerate(entries):
            where = '%s[%s]' % (path, idx)

            if not isinstance(entry, dict):
                raise self._error('product entry must be an object', where)

            i = self._index(self._field(entry, 'i', where, (int,)), n, where + '.i')
            j = self._index(self._field(entry, 'j', where, (int,)), n, where + '.j')

            if (i, j) in products:
                raise self._error('duplicate product entry (%s, %s)' % (i, j), where)

            out = self._field(entry, 'out', where, (dict,))

            products[(i, j)] = dict(
                (self._index(k, n, '%s.out' % where),
                 self._rational(v, '%s.out.%s' % (where, k))) for k, v in out.items())

        try:
            return BilinearMap.fromProducts(n, products, alternating=alternating)

        except error.PyHomDefKindError:
            if not lenient:
                raise self._error('lie product entries are not skew-symmetric', path)

        # non-skew higher order brackets are kept as given, verify reports them
        return BilinearMap.fromProducts(n, products)

    def _algebra(self, doc, path):
        kind = self._field(doc, 'kind', path, (str,))
        if kind not in KINDS:
            raise self._error('unknown kind %r' % kind, path + '.kind', kind)

        n = self._field(doc, 'dim', path, (int,))
        if n < 1:
            raise self._error('dimension must be positive', path + '.dim', n)

        labels = doc.get('basis')
        if labels is None:
            labels = ['e%d' % (i + 1) for i in range(n)]

        elif not isinstance(labels, list) or len(labels) != n:
            raise self._error('basis must list %s labels' % n, path + '.basis')

        product = self._products(self._field(doc, 'product', path, (list,)), n,
                                 kind == kindHomLie, path + '.product')

        alpha = self._matrix(self._field(doc, 'alpha', path, (list,)), n, path + '.alpha')

        return HomAlgebra(kind, product, alpha, labels=labels)

    def _deformation(self, doc, path):
        flavor = self._field(doc, 'flavor', path, (str,))
        if flavor not in FLAVORS:
            raise self._error('unknown flavor %r' % flavor, path + '.flavor', flavor)

        order = self._field(doc, 'order', path, (int,))
        if order < 0:
            raise self._error('negative order', path + '.order', order)

        base = self._algebra(self._field(doc, 'base', path, (dict,)), path + '.base')

        if base.kind != (flavor == flavorLie and kindHomLie or kindHomAssociative):
            raise self._error('%s base for %s flavor' % (base.kind, flavor), path + '.base.kind', base.kind)

        n = base.dim
        alternating = flavor == flavorLie

        products = self._field(doc, 'products', path, (list,))
        alphas = self._field(doc, 'alphas', path, (list,))

        for name, value in (('products', products), ('alphas', alphas)):
            if len(value) != order + 1:
                raise self._error('%s must have order + 1 = %s entries' % (name, order + 1),
                                  '%s.%s' % (path, name))

        mus = []
        twists = []

        for i in range(order + 1):
            where = '%s.products[%s]' % (path, i)
            if products[i] is not None:
                mus.append(self._products(products[i], n, alternating, where, lenient=i > 0))
            elif i:
                mus.append(BilinearMap.zero(n, alternating=alternating))
            else:
                mus.append(base.product)

            where = '%s.alphas[%s]' % (path, i)
            if alphas[i] is not None:
                twists.append(self._matrix(alphas[i], n, where))
            elif i:
                twists.append(LinearMap.zero(n))
            else:
                twists.append(base.alpha)

        if mus[0] != base.product or twists[0] != base.alpha:
            raise self._error('order 0 terms disagree with the base', path)

        return DeformationSeries(flavor, mus, twists, labels=base.labels)
