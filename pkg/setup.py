#!/usr/bin/env python
#
# This file is part of pyhomdef software.
#
# Copyright (c) 2020, pyhomdef developers
# License: BSD, see LICENSE.rst
#
"""Hom-algebra deformation checker

A pure-Python, exact-arithmetic library and tool for checking Hom-associative,
Hom-Lie and Hom-Leibniz identities, computing second Hom-cohomology and
verifying formal deformations order by order.
"""

import os
import sys

classifiers = """\
Development Status :: 4 - Beta
Environment :: Console
Intended Audience :: Developers
Intended Audience :: Education
Intended Audience :: Science/Research
License :: OSI Approved :: BSD License
Natural Language :: English
Operating System :: OS Independent
Programming Language :: Python :: 3
Programming Language :: Python :: 3.6
Programming Language :: Python :: 3.7
Programming Language :: Python :: 3.8
Topic :: Scientific/Engineering :: Mathematics
Topic :: Software Development :: Libraries :: Python Modules
"""


def howto_install_setuptools():
    print("""
   Error: You need setuptools Python package!

   It's very easy to install it, just type:

   pip install setuptools

   Then you could make eggs from this package.
""")


if sys.version_info[:2] < (3, 6):
    print("ERROR: this package requires Python 3.6 or later!")
    sys.exit(1)


try:
    from setuptools import setup, Command

    params = {'zip_safe': True,
              'install_requires': ['ply', 'jinja2>=2.10.1']}

except ImportError:
    for arg in sys.argv:
        if 'egg' in arg:
            howto_install_setuptools()
            sys.exit(1)

    from distutils.core import setup, Command

    params = {'requires': ['ply', 'jinja2(>=2.10.1)']}

doclines = [x.strip() for x in (__doc__ or '').split('\n') if x]

params.update({
    'name': 'pyhomdef',
    'version': open(os.path.join('pyhomdef', '__init__.py')).read().split('\'')[1],
    'description': doclines[0],
    'long_description': ' '.join(doclines[1:]),
    'maintainer': 'pyhomdef developers',
    'author': 'pyhomdef developers',
    'url': 'https://github.com/pyhomdef/pyhomdef',
    'platforms': ['any'],
    'classifiers': [x for x in classifiers.split('\n') if x],
    'license': 'BSD',
    'python_requires': '>=3.6',
    'packages': [
        'pyhomdef',
        'pyhomdef.exactlin',
        'pyhomdef.reader',
        'pyhomdef.lexer',
        'pyhomdef.parser',
        'pyhomdef.codegen',
        'pyhomdef.writer'
    ],
    'package_data': {
        'pyhomdef.codegen': [
            'templates/*/*.j2',
            'schema/*.json'
        ],
    },
    'scripts': [os.path.join('scripts', 'homdef.py')]
})

import unittest


class PyTest(Command):
    user_options = []

    def initialize_options(self): pass

    def finalize_options(self): pass

    def run(self):
        suite = unittest.defaultTestLoader.discover('tests')
        unittest.TextTestRunner(verbosity=2).run(suite)


params['cmdclass'] = {'test': PyTest}

setup(**params)
