# -*- coding: utf-8 -*-
#
# pyhomdef documentation build configuration file
#
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

from pyhomdef import __version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.intersphinx'
]

source_suffix = '.rst'
master_doc = 'contents'

project = u'Hom-algebra deformation checker'
copyright = u'2020, pyhomdef developers'
author = u'pyhomdef developers'

release = __version__
version = '.'.join(release.split('.')[:2])

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Exact checks of Hom-algebra identities and deformations',
    'show_powered_by': False,
    'github_user': 'pyhomdef',
    'github_repo': 'pyhomdef',
    'fixed_sidebar': True,
}
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}
html_domain_indices = False
html_use_index = False
html_show_sourcelink = False
html_show_sphinx = False

man_pages = [
    (master_doc, 'homdef', u'Hom-algebra deformation checker', [author], 1)
]

intersphinx_mapping = {'python': ('https://docs.python.org/3', None)}

# google style docstrings only
autoclass_content = 'both'
napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_include_special_with_doc = True
napoleon_use_param = False
napoleon_use_rtype = False
