#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
import os
import sys
from pyhomdef.codegen.base import AbstractCodeGen, toDocument, reportDocument
from pyhomdef.codegen import jfilters
from pyhomdef import error
from pyhomdef import debug

import jinja2


class TextCodeGen(AbstractCodeGen):
    """Renders structures and reports for humans.

    Rendering works on the same JSON-ready documents the JSON code
    generator writes, so both outputs carry the same facts.
    """
    REPORT_TEMPLATE = 'text/report.j2'
    STRUCTURE_TEMPLATE = 'text/structure.j2'

    def _render(self, templateName, dstTemplate=None, **context):
        searchPath = [os.path.join(os.path.dirname(__file__), 'templates')]

        if dstTemplate:
            searchPath.insert(0, os.path.dirname(os.path.abspath(dstTemplate)))
            templateName = os.path.basename(dstTemplate)

        env = jinja2.Environment(loader=jinja2.FileSystemLoader(searchPath),
                                 trim_blocks=True, lstrip_blocks=True)

        env.filters['status'] = jfilters.status
        env.filters['triple'] = jfilters.triple
        env.filters['scalar'] = jfilters.scalar
        env.filters['matrix'] = jfilters.matrix
        env.filters['products'] = jfilters.products
        env.filters['witness'] = jfilters.witness
        env.tests['matrix'] = jfilters.ismatrix

        try:
            tmpl = env.get_template(templateName)
            text = tmpl.render(**context)

        except jinja2.exceptions.TemplateError:
            err = sys.exc_info()[1]
            raise error.PyHomDefCodegenError('Jinja template rendering error: %s' % err)

        debug.logger & debug.flagCodegen and debug.logger(
            'rendered %s, text size %d bytes' % (templateName, len(text)))

        return text

    def genCode(self, obj, **kwargs):
        return self._render(self.STRUCTURE_TEMPLATE, kwargs.get('dstTemplate'),
                            doc=toDocument(obj))

    def genReport(self, report, **kwargs):
        return self._render(self.REPORT_TEMPLATE, kwargs.get('dstTemplate'),
                            report=reportDocument(report))
