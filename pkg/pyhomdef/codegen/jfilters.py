#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
# Filters see JSON-ready documents: rationals are already strings.
#


def status(text):
    return text and text.upper() or '?'


def triple(value):
    if value is None:
        return '-'

    return '(%s)' % ', '.join(str(x) for x in value)


def scalar(value):
    if value is None:
        return '-'

    if value is True:
        return 'yes'

    if value is False:
        return 'no'

    if isinstance(value, dict):
        return ', '.join('%s=%s' % (k, scalar(v)) for k, v in value.items())

    if isinstance(value, (list, tuple)):
        return '[%s]' % ', '.join(scalar(x) for x in value)

    return str(value)


def ismatrix(value):
    return (isinstance(value, list) and bool(value) and
            all(isinstance(row, list) and row and not isinstance(row[0], (list, dict))
                for row in value))


def matrix(rows):
    """Right-aligned columns, one string per row."""
    if not rows:
        return []

    widths = [max(len(str(row[j])) for row in rows) for j in range(len(rows[0]))]

    return ['  '.join(str(x).rjust(w) for x, w in zip(row, widths)) for row in rows]


def term(coeff, label):
    if coeff == '1':
        return label

    if coeff == '-1':
        return '-' + label

    return '%s*%s' % (coeff, label)


def products(entries, labels, bracket=False):
    """Structure constants as `[a, b] = ...` or `a * b = ...` lines."""
    lines = []

    for entry in entries:
        x = labels[entry['i']]
        y = labels[entry['j']]

        value = ' + '.join(term(c, labels[int(k)]) for k, c in entry['out'].items())
        value = value.replace('+ -', '- ')

        if bracket:
            lines.append('[%s, %s] = %s' % (x, y, value))
        else:
            lines.append('%s * %s = %s' % (x, y, value))

    return lines


def witness(check):
    """Order and offending tuple of a check document, if any."""
    text = ''

    if check.get('order') is not None:
        text += ' order %s' % check['order']

    if check.get('status') == 'fail' and check.get('triple') is not None:
        text += ' at %s' % triple(check['triple'])

        if check.get('residual') is not None:
            text += ' residual %s' % scalar(check['residual'])

    return text
