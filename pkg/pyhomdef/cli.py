#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Hom-algebra and deformation checking tool
#
import os
import sys
import getopt
from collections import OrderedDict
from pyhomdef.reader import FileReader, CallbackReader
from pyhomdef.writer import FileWriter
from pyhomdef.parser import AlgebraFileParser, parseOption
from pyhomdef.codegen import JsonCodeGen, TextCodeGen
from pyhomdef.codegen.base import ReportInfo
from pyhomdef.homcore import (HomAlgebra, KINDS, kindHomLie, checkIdentity, skewCheck,
                              checkHomLie)
from pyhomdef.cochain import FLAVORS, cohomology2, derivations
from pyhomdef.deform import DeformationSeries, verify, firstOrderCocycleCheck
from pyhomdef.graded import FAMILIES, GradedFamily, GradedElement, scanFamily, familyWittDeformation
from pyhomdef.checkinfo import CheckInfo, statusPass, statusFail, statusError, combine
from pyhomdef import catalog
from pyhomdef import debug
from pyhomdef import error

PROGRAM = 'homdef'

EX_OK = 0
EX_FAILED = 1
EX_USAGE = 2

helpMessage = """\
Usage: %s [--help]
      [--version]
      [--quiet]
      [--debug=<%s>]
      [--json]
      [--out=<PATH>]
      [--kind=<KIND>]
      [--flavor=<FLAVOR>]
      [--bases]
      [--orders=<N>]
      [--N=<N>]
      [--q=<RATIONAL>]
      [--window=<LO..HI>]
      [--params=<NAME=RATIONAL,...>]
      [--samples=<N>]
      [--seed=<N>]
      [--family=<FAMILY>]
      <COMMAND> [ARGS]
Where:
    COMMAND  - check PATH
               cohomology PATH
               deform verify PATH
               graded FAMILY
               catalog list | catalog show NAME | catalog export NAME
               twists
               probe
    PATH     - structure document, - reads standard input
    KIND     - %s
    FLAVOR   - %s
    FAMILY   - %s (graded), %s (probe)
    RATIONAL - -?digits(/digits)?""" % (
    PROGRAM,
    '|'.join(sorted(debug.flagMap)),
    '|'.join(KINDS),
    '|'.join(FLAVORS),
    '|'.join(FAMILIES),
    '|'.join(catalog.PROBE_FAMILIES)
)


class UsageError(error.PyHomDefError):
    pass


class Options(object):
    """Parsed command line, defaults as class attributes."""
    verbose = True
    json = False
    out = None
    kind = None
    flavor = None
    bases = False
    orders = None
    N = None
    q = None
    window = None
    params = None
    samples = 100
    seed = 0
    family = None

    def __init__(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])


def _parseValue(startSym, option, value):
    try:
        return parseOption(startSym, value)

    except error.PyHomDefLexerError:
        raise UsageError('bad %s value "%s": %s' % (option, value, sys.exc_info()[1]))


def _nonNegative(option, value):
    value = _parseValue('integer', option, value)
    if value < 0:
        raise UsageError('%s must not be negative' % option)
    return value


def _readStdin(name, cbCtx):
    return sys.stdin.read()


def _load(path):
    if path == '-':
        info, text = CallbackReader(_readStdin).getData('stdin')

    else:
        directory, name = os.path.split(path)

        info, text = FileReader(directory or '.').getData(name)

    return info, AlgebraFileParser().parse(text)


def _loadAlgebra(path):
    info, obj = _load(path)
    if not isinstance(obj, HomAlgebra):
        raise UsageError('%s holds a deformation, an algebra document is expected' % path)
    return info, obj


def _loadDeformation(path):
    info, obj = _load(path)
    if not isinstance(obj, DeformationSeries):
        raise UsageError('%s holds an algebra, a deformation document is expected' % path)
    return info, obj


def _expectArgs(args, count, synopsis):
    if len(args) != count:
        raise UsageError('usage: %s %s' % (PROGRAM, synopsis))


def _structureFacts(a):
    return OrderedDict((('kind', a.kind), ('dim', a.dim), ('basis', list(a.labels))))


def _numbered(items):
    return OrderedDict(('%02d' % (i + 1), x) for i, x in enumerate(items))


def cmdCheck(args, opts):
    _expectArgs(args, 1, 'check PATH')

    info, a = _loadAlgebra(args[0])

    if opts.kind and opts.kind != a.kind:
        try:
            a = a.withKind(opts.kind)

        except error.PyHomDefKindError:
            # bracket is not alternating
            report = combine(kindHomLie, (
                skewCheck('skew-symmetry', a.product),
                CheckInfo(name='hom-jacobi', status=statusFail, message='bracket is not alternating')))

            return ReportInfo(command='check', inputDigest=info.digest,
                              checks=[report], facts=_structureFacts(a))

    return ReportInfo(command='check', inputDigest=info.digest,
                      checks=[checkIdentity(a)], facts=_structureFacts(a))


def cmdCohomology(args, opts):
    _expectArgs(args, 1, 'cohomology PATH')

    info, a = _loadAlgebra(args[0])

    base = checkIdentity(a)

    facts = _structureFacts(a)

    if not base:
        return ReportInfo(command='cohomology', inputDigest=info.digest,
                          checks=[base], facts=facts)

    cohomology = cohomology2(a, opts.flavor)
    derivationBasis = derivations(a, opts.flavor)

    facts['flavor'] = cohomology.flavor
    facts['dim_Z2'] = cohomology.dimZ2
    facts['dim_B2'] = cohomology.dimB2
    facts['dim_H2'] = cohomology.dimH2
    facts['dim_tau'] = cohomology.dimTau
    facts['dim_derivations'] = len(derivationBasis)

    if opts.bases:
        facts['basis_Z2'] = _numbered(cohomology.basisZ2)
        facts['basis_B2'] = _numbered(cohomology.basisB2)
        facts['basis_derivations'] = _numbered(derivationBasis)

    return ReportInfo(command='cohomology', inputDigest=info.digest,
                      checks=[base], facts=facts)


def cmdDeform(args, opts):
    if not args or args[0] != 'verify':
        raise UsageError('usage: %s deform verify PATH' % PROGRAM)

    _expectArgs(args[1:], 1, 'deform verify PATH')

    info, d = _loadDeformation(args[1])

    order = d.order
    if opts.orders is not None:
        order = min(opts.orders, d.order)

    d = d.truncated(order)

    facts = OrderedDict((('flavor', d.flavor), ('dim', d.dim), ('basis', list(d.labels)),
                         ('orders_checked', order)))

    if d.order >= 1:
        facts['first_order_cocycle'] = firstOrderCocycleCheck(d)

    return ReportInfo(command='deform verify', inputDigest=info.digest,
                      checks=[verify(d)], facts=facts)


def cmdGraded(args, opts):
    _expectArgs(args, 1, 'graded FAMILY')

    family = args[0]
    if family not in FAMILIES:
        raise UsageError('unknown graded family %s, known families: %s' % (
            family, ', '.join(FAMILIES)))

    facts = OrderedDict((('family', family),))

    if family == familyWittDeformation:
        order = opts.orders
        if order is None:
            order = 2
        facts['order'] = order
        report = scanFamily(family, order=order, window=opts.window)

    else:
        if opts.q is None:
            raise UsageError('graded family %s needs --q' % family)
        facts['q'] = opts.q
        report = scanFamily(family, q=opts.q, window=opts.window)

    if opts.window:
        facts['window'] = list(opts.window)

    return ReportInfo(command='graded', checks=[report], facts=facts)


def _catalogEntryFacts(entry):
    facts = OrderedDict((('type', entry.entryType), ('description', entry.description),
                         ('params', list(entry.params))))

    if entry.fixedOrder is not None:
        facts['order'] = entry.fixedOrder
    elif entry.defaultOrder is not None:
        facts['default_order'] = entry.defaultOrder

    return facts


def _gradedFacts(name, family):
    facts = OrderedDict((('family', name),))

    if family.nonNegative:
        facts['order'] = family.order
        indices = range(0, 4)
    else:
        facts['q'] = family.q
        indices = range(-2, 3)

    facts['alpha'] = OrderedDict(('x_%s' % n, family.alpha(n)) for n in indices)
    facts['alpha_c'] = str(family.alphaElement(GradedElement(central=1)))

    facts['brackets'] = OrderedDict(
        ('[x_%s, x_%s]' % (n, m), str(family.bracket(n, m)))
        for n in indices for m in indices if n < m)

    return facts


def cmdCatalog(args, opts):
    if not args:
        raise UsageError('usage: %s catalog list | show NAME | export NAME' % PROGRAM)

    action = args[0]

    if action == 'list':
        _expectArgs(args, 1, 'catalog list')

        facts = OrderedDict((entry.name, _catalogEntryFacts(entry))
                            for entry in catalog.listEntries())

        return ReportInfo(command='catalog list', facts=facts)

    if action not in ('show', 'export'):
        raise UsageError('unknown catalog action %s' % action)

    _expectArgs(args, 2, 'catalog %s NAME' % action)

    name = args[1]

    obj = catalog.get(name, params=opts.params, order=opts.N)

    if isinstance(obj, GradedFamily):
        if action == 'export':
            raise UsageError('graded family %s has no document format' % name)

        return ReportInfo(command='catalog show', facts=_gradedFacts(name, obj))

    if action == 'show':
        return obj

    text = JsonCodeGen().genCode(obj)

    if not opts.out:
        return text

    directory, filename = os.path.split(opts.out)

    FileWriter(directory or '.').putData(filename, text)

    debug.logger & debug.flagCli and debug.logger('exported %s to %s' % (name, opts.out))

    return ReportInfo(command='catalog export', facts=OrderedDict(
        (('entry', name), ('path', opts.out), ('bytes', len(text.encode('utf-8'))))))


def cmdTwists(args, opts):
    _expectArgs(args, 0, 'twists')

    dimension, basis, relations = catalog.solveSl2Twists()

    bracket = catalog.sl2XBracket()

    members = combine('twist-basis-hom-lie', [
        checkHomLie(HomAlgebra(kindHomLie, bracket, m)) for m in basis])

    shape = CheckInfo(
        name='twist-family-relations',
        status=len(relations) == len(catalog.SL2_TWIST_RELATIONS) and statusPass or statusFail,
        details=(('expected', len(catalog.SL2_TWIST_RELATIONS)), ('holding', len(relations))))

    facts = OrderedDict((
        ('dimension', dimension),
        ('relations', ['m%d%d = %s*m%d%d' % (i + 1, j + 1, c, k + 1, l + 1)
                       for (i, j), c, (k, l) in relations]),
        ('basis', _numbered(basis))
    ))

    return ReportInfo(command='twists', checks=[members, shape], facts=facts)


def cmdProbe(args, opts):
    _expectArgs(args, 0, 'probe')

    family = opts.family or 'random'

    census = catalog.probeConjecture(opts.samples, opts.seed, family=family)

    probe = CheckInfo(
        name='lie-probe', status=census.counterexamples and statusFail or statusPass,
        message='experimental: evidence only, never a proof',
        details=(('counterexamples', len(census.counterexamples)),))

    facts = OrderedDict((
        ('family', census.family),
        ('samples', census.samples),
        ('seed', census.seed),
        ('draws', census.draws),
        ('side_condition', census.sideCondition),
        ('hom_lie', census.homLie),
        ('classical_jacobi', census.classicalJacobi),
        ('counterexamples', list(census.counterexamples))
    ))

    return ReportInfo(command='probe', checks=[probe], facts=facts)


COMMANDS = {
    'check': cmdCheck,
    'cohomology': cmdCohomology,
    'deform': cmdDeform,
    'graded': cmdGraded,
    'catalog': cmdCatalog,
    'twists': cmdTwists,
    'probe': cmdProbe
}


def parseArgs(argv):
    """Turn the command line into `(Options, command, args)`.

    Raises:
        UsageError: unknown option or malformed option value
    """
    try:
        opts, args = getopt.gnu_getopt(
            argv, 'hv',
            ['help', 'version', 'quiet', 'debug=', 'json', 'out=', 'kind=',
             'flavor=', 'bases', 'orders=', 'N=', 'q=', 'window=', 'params=',
             'samples=', 'seed=', 'family=']
        )

    except getopt.GetoptError:
        raise UsageError(str(sys.exc_info()[1]))

    options = Options()
    command = None

    for opt, value in opts:
        if opt in ('-h', '--help'):
            command = 'help'

        if opt in ('-v', '--version'):
            command = 'version'

        if opt == '--quiet':
            options.verbose = False

        if opt == '--debug':
            try:
                debug.setLogger(debug.Debug(*value.split(',')))

            except error.PyHomDefError:
                raise UsageError(str(sys.exc_info()[1]))

        if opt == '--json':
            options.json = True

        if opt == '--out':
            options.out = value

        if opt == '--kind':
            if value not in KINDS:
                raise UsageError('unknown kind %s' % value)
            options.kind = value

        if opt == '--flavor':
            if value not in FLAVORS:
                raise UsageError('unknown flavor %s' % value)
            options.flavor = value

        if opt == '--bases':
            options.bases = True

        if opt == '--orders':
            options.orders = _nonNegative(opt, value)

        if opt == '--N':
            options.N = _nonNegative(opt, value)

        if opt == '--q':
            options.q = _parseValue('rational', opt, value)

        if opt == '--window':
            lo, hi = _parseValue('window', opt, value)
            if lo > hi:
                raise UsageError('empty window %s' % value)
            options.window = (lo, hi)

        if opt == '--params':
            options.params = OrderedDict(_parseValue('params', opt, value))

        if opt == '--samples':
            options.samples = _nonNegative(opt, value)

        if opt == '--seed':
            options.seed = _parseValue('integer', opt, value)

        if opt == '--family':
            if value not in catalog.PROBE_FAMILIES:
                raise UsageError('unknown probe family %s' % value)
            options.family = value

    if command is None:
        if not args:
            raise UsageError('command not specified')

        command, args = args[0], args[1:]

        if command not in COMMANDS:
            raise UsageError('unknown command %s' % command)

    return options, command, args


def _exitCode(result):
    if not isinstance(result, ReportInfo):
        return EX_OK

    for check in result.checks:
        if check.status in (statusFail, statusError):
            return EX_FAILED

    return EX_OK


def _render(result, opts):
    if isinstance(result, str):
        return result

    codegen = opts.json and JsonCodeGen() or TextCodeGen()

    if isinstance(result, ReportInfo):
        return codegen.genReport(result)

    return codegen.genCode(result)


def main(argv=None):
    """Run one command, return the exit status.

    0 when every executed check passes, 1 when an identity fails and 2 on
    usage, parse, pole and unknown-name errors.
    """
    if argv is None:
        argv = sys.argv[1:]

    verbose = '--quiet' not in argv

    try:
        opts, command, args = parseArgs(argv)

    except UsageError:
        if verbose:
            sys.stderr.write('ERROR: %s\r\n%s\r\n' % (sys.exc_info()[1], helpMessage))

        return EX_USAGE

    if command == 'help':
        sys.stdout.write("""\
Synopsis:
  Hom-algebra structures, cohomology and formal deformations checking tool
%s
""" % helpMessage)
        return EX_OK

    if command == 'version':
        from pyhomdef import __version__

        sys.stdout.write("""\
Hom-algebra deformation library version %s
Python interpreter: %s
""" % (__version__, sys.version))
        return EX_OK

    debug.logger & debug.flagCli and debug.logger(
        'running %s with arguments %s' % (command, ' '.join(args)))

    try:
        result = COMMANDS[command](args, opts)

        text = _render(result, opts)

    except UsageError:
        if opts.verbose:
            sys.stderr.write('ERROR: %s\r\n%s\r\n' % (sys.exc_info()[1], helpMessage))

        return EX_USAGE

    except error.PyHomDefError:
        if opts.verbose:
            sys.stderr.write('ERROR: %s\r\n' % sys.exc_info()[1])

        return EX_USAGE

    if opts.verbose:
        sys.stdout.write(text)

    exitCode = _exitCode(result)

    debug.logger & debug.flagCli and debug.logger('%s finished with exit code %s' % (command, exitCode))

    return exitCode
