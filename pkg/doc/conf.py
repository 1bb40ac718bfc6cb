# -*- coding: utf-8 -*-
# Sphinx configuration for the ordtile documentation.

import os
import sys

# document the checkout, not an installed copy
sys.path.insert(0, os.path.abspath('..'))

project = 'ordtile'
author = 'ordtile contributors'
copyright = author
version = release = '0.1'
language = 'en'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.intersphinx',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx_copybutton',
    'numpydoc',
    'recommonmark',
]

source_suffix = ['.rst', '.md']
master_doc = 'index'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable/', None),
    'pandas': ('https://pandas.pydata.org/docs/', None),
}

autosummary_generate = True
autodoc_member_order = 'bysource'
# numpydoc plus autosummary lists every class member twice otherwise
numpydoc_show_class_members = False

html_theme = 'sphinx_rtd_theme'
html_theme_options = {
    'navigation_depth': 3,
    'collapse_navigation': False,
}
html_show_sourcelink = False

copybutton_prompt_text = "$ "
