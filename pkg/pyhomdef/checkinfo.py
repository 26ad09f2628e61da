#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
from pyhomdef import debug


class CheckStatus(str):
    """Indicate the verdict of an identity check.

    *CheckStatus* is a subclass of Python string type.

    The following *CheckStatus* class instances are defined:

    * *pass* - identity holds on every basis tuple
    * *fail* - identity is violated, the owning *CheckInfo* carries a witness
    * *error* - check could not be carried out, *error* attribute carries details
    """


statusPass = CheckStatus('pass')
statusFail = CheckStatus('fail')
statusError = CheckStatus('error')


class CheckInfo(object):
    """Outcome of one named check.

    Failing checks carry a witness: the deformation order (if any),
    the lexicographically first offending basis tuple and the residual
    vector observed there.
    """
    #: check name, reports are sorted by it
    name = ''

    #: one of `statusPass`, `statusFail`, `statusError`
    status = statusPass

    #: degree of the failing deformation equation or None
    order = None

    #: offending basis index tuple or None
    triple = None

    #: residual coefficients at `triple` (sequence of Fractions)
    residual = None

    #: free-form diagnostics
    message = ''

    #: nested checks, e.g. per deformation order
    checks = ()

    #: additional facts as ordered (key, value) pairs
    details = ()

    def __init__(self, **kwargs):
        for k in kwargs:
            setattr(self, k, kwargs[k])

    def __bool__(self):
        return self.status == statusPass

    def __repr__(self):
        return '%s(name=%r, status=%s, order=%r, triple=%r)' % (
            self.__class__.__name__, self.name, self.status, self.order, self.triple)

    def walk(self):
        """Yield this check and all nested ones, depth first."""
        yield self
        for check in self.checks:
            for x in check.walk():
                yield x


def fromResidual(name, tensor, order=None, **kwargs):
    """Turn a residual tensor into a check verdict.

    Args:
        name (str): check name
        tensor: object with a `firstNonZero()` method returning
            `(triple, vector)` or None

    Keyword Args:
        order (int): deformation order the tensor belongs to

    Returns:
        CheckInfo: `pass` if the tensor vanishes, `fail` with a witness
        otherwise
    """
    witness = tensor.firstNonZero()

    if witness is None:
        debug.logger & debug.flagHomcore and debug.logger('%s: pass' % name)
        return CheckInfo(name=name, status=statusPass, order=order, **kwargs)

    triple, vector = witness

    debug.logger & debug.flagHomcore and debug.logger(
        '%s: fail at order %s triple %s residual %s' % (name, order, triple, vector))

    return CheckInfo(name=name, status=statusFail, order=order,
                     triple=tuple(triple), residual=tuple(vector), **kwargs)


def combine(name, checks, **kwargs):
    """Aggregate sub-checks into a single verdict.

    The aggregate fails if any sub-check fails and reports an error if
    any sub-check reports one and none fails. Witness of the first failing
    sub-check is lifted to the aggregate.
    """
    checks = tuple(checks)

    status = statusPass
    witness = None

    for check in checks:
        if check.status == statusFail:
            status = statusFail
            if witness is None:
                witness = check
        elif check.status == statusError and status == statusPass:
            status = statusError

    if witness is not None:
        kwargs.setdefault('order', witness.order)
        kwargs.setdefault('triple', witness.triple)
        kwargs.setdefault('residual', witness.residual)

    return CheckInfo(name=name, status=status, checks=checks, **kwargs)
