#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import json
import os
from pyhomdef.codegen.base import AbstractCodeGen, toDocument, reportDocument
from pyhomdef import debug

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), 'schema', 'report.json')


class JsonCodeGen(AbstractCodeGen):
    """Turns structures and reports into canonical JSON documents.

    Output is byte-stable: keys keep their canonical order, rationals are
    written as strings in lowest terms, indentation is two spaces and the
    document ends with a newline. Exporting a parsed export reproduces it
    byte for byte.
    """
    indent = 2

    def _dump(self, doc):
        return json.dumps(doc, indent=self.indent, separators=(',', ': ')) + '\n'

    def genCode(self, obj, **kwargs):
        text = self._dump(toDocument(obj))

        debug.logger & debug.flagCodegen and debug.logger(
            'serialized %r, JSON document size %d bytes' % (obj, len(text)))

        return text

    def genReport(self, report, **kwargs):
        text = self._dump(reportDocument(report))

        debug.logger & debug.flagCodegen and debug.logger(
            'report of %s, %s check(s), JSON document size %d bytes' % (
                report.command, len(report.checks), len(text)))

        return text


def loadSchema():
    with open(SCHEMA_PATH) as f:
        return json.load(f)
