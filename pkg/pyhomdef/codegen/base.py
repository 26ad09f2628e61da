#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from collections import OrderedDict
from fractions import Fraction
from pyhomdef.exactlin.rational import formatRational
from pyhomdef.exactlin.series import TruncSeries
from pyhomdef.homcore import LinearMap, BilinearMap, HomAlgebra, kindHomLie
from pyhomdef.cochain import flavorLie
from pyhomdef.deform import DeformationSeries
from pyhomdef.checkinfo import CheckInfo, statusPass, statusFail, statusError
from pyhomdef import __version__
from pyhomdef import error

TOOL_NAME = 'pyhomdef'


class ReportInfo(object):
    """Everything a command has to say, before rendering."""

    #: command name, e.g. `check` or `deform verify`
    command = ''

    #: sha256 of the input document or None
    inputDigest = None

    #: top-level CheckInfo records
    checks = ()

    #: computed facts that are not pass/fail verdicts
    facts = ()

    def __init__(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])

    def __repr__(self):
        return '%s(command=%r, checks=%s)' % (
            self.__class__.__name__, self.command, len(self.checks))


def productEntries(product, alternating=False):
    """Sparse product entries in canonical order.

    Alternating maps are written for `i < j` only.
    """
    n = product.dim

    entries = []
    for i in range(n):
        for j in range(n):
            if alternating and i >= j:
                continue

            out = OrderedDict((str(k), formatRational(c))
                              for k, c in enumerate(product.product(i, j)) if c)
            if out:
                entries.append(OrderedDict((('i', i), ('j', j), ('out', out))))

    return entries


def matrixRows(f):
    return [[formatRational(x) for x in row] for row in f.matrix.toRows()]


def algebraDocument(a):
    return OrderedDict((
        ('format', 'algebra'),
        ('kind', a.kind),
        ('dim', a.dim),
        ('basis', list(a.labels)),
        ('product', productEntries(a.product, a.kind == kindHomLie)),
        ('alpha', matrixRows(a.alpha))
    ))


def deformationDocument(d):
    products = [None]
    alphas = [None]

    for i in range(1, d.order + 1):
        products.append(productEntries(
            d.products[i], d.flavor == flavorLie and d.products[i].isAlternating()))
        alphas.append(matrixRows(d.twists[i]))

    return OrderedDict((
        ('format', 'deformation'),
        ('flavor', d.flavor),
        ('order', d.order),
        ('base', algebraDocument(d.base())),
        ('products', products),
        ('alphas', alphas)
    ))


def toDocument(value):
    """JSON-ready rendition: rationals become strings, order is kept."""
    if value is None or isinstance(value, (bool, str)):
        return value

    if isinstance(value, int):
        return value

    if isinstance(value, Fraction):
        return formatRational(value)

    if isinstance(value, TruncSeries):
        return [formatRational(x) for x in value]

    if isinstance(value, HomAlgebra):
        return algebraDocument(value)

    if isinstance(value, DeformationSeries):
        return deformationDocument(value)

    if isinstance(value, LinearMap):
        return matrixRows(value)

    if isinstance(value, BilinearMap):
        return productEntries(value, value.alternating)

    if isinstance(value, CheckInfo):
        return checkDocument(value)

    if isinstance(value, dict):
        return OrderedDict((str(k), toDocument(v)) for k, v in value.items())

    if isinstance(value, (list, tuple)):
        return [toDocument(x) for x in value]

    raise error.PyHomDefCodegenError('cannot serialize %r' % (value,))


def checkDocument(check):
    return OrderedDict((
        ('name', check.name),
        ('status', str(check.status)),
        ('order', check.order),
        ('triple', check.triple is not None and list(check.triple) or None),
        ('residual', check.residual is not None and toDocument(tuple(check.residual)) or None),
        ('message', check.message),
        ('details', toDocument(OrderedDict(check.details))),
        ('checks', [checkDocument(x) for x in sorted(check.checks, key=lambda x: x.name)])
    ))


def summarize(checks):
    total = len(checks)
    passed = len([x for x in checks if x.status == statusPass])
    failed = len([x for x in checks if x.status == statusFail])
    errors = len([x for x in checks if x.status == statusError])

    if failed:
        status = statusFail
    elif errors:
        status = statusError
    else:
        status = statusPass

    return OrderedDict((('status', str(status)), ('total', total), ('passed', passed),
                        ('failed', failed), ('errors', errors)))


def reportDocument(report):
    """Deterministic report: checks sorted by name, no timestamps."""
    checks = sorted(report.checks, key=lambda x: x.name)

    return OrderedDict((
        ('tool', TOOL_NAME),
        ('version', __version__),
        ('command', report.command),
        ('input_digest', report.inputDigest),
        ('checks', [checkDocument(x) for x in checks]),
        ('facts', toDocument(OrderedDict(report.facts))),
        ('summary', summarize(checks))
    ))


class AbstractCodeGen(object):
    def genCode(self, obj, **kwargs):
        raise NotImplementedError()

    def genReport(self, report, **kwargs):
        raise NotImplementedError()
