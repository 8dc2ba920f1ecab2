# -*- coding: utf-8 -*-
#
# hcchar documentation build configuration file.

import datetime
import os
import sys

sys.path.insert(0, os.path.abspath('../..'))

import alabaster  # noqa: E402

import hcchar  # noqa: E402

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.doctest',
    'alabaster',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'hcchar'
copyright = u' %s, The hcchar Authors' % datetime.date.today().year
author = u'The hcchar Authors'
version = hcchar.__version__
release = version

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_theme_options = {
    'show_powered_by': False,
}
html_theme_path = [alabaster.get_path()]
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'searchbox.html',
    ],
}
html_show_sourcelink = False
html_show_copyright = False
htmlhelp_basename = 'hccharDoc'

latex_documents = [
    (master_doc, 'hcchar.tex', u'hcchar Documentation', author, 'manual'),
]

man_pages = [(master_doc, 'hcchar', u'hcchar Documentation', [author], 1)]
