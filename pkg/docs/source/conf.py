#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# SupercontinuumSqueezing documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys
sys.path.insert(0, os.path.abspath('../../'))


# -- General configuration ------------------------------------------------

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.mathjax',
              'sphinx.ext.githubpages',
              'sphinx.ext.napoleon']

# numba is optional; document the numpy kernels when it is missing
autodoc_mock_imports = ['numba']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'SupercontinuumSqueezing'
copyright = '2017, Zachary Glassman'
author = 'Zachary Glassman'

version = '0.1.0'
release = '0.1.0'

language = None
exclude_patterns = []
pygments_style = 'sphinx'
todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_static_path = ['_static']
htmlhelp_basename = 'SupercontinuumSqueezingdoc'


# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}
latex_documents = [
    (master_doc, 'SupercontinuumSqueezing.tex', 'SupercontinuumSqueezing Documentation',
     'Zachary Glassman', 'manual'),
]


# -- Options for manual page output ---------------------------------------

man_pages = [
    (master_doc, 'supercontinuumsqueezing', 'SupercontinuumSqueezing Documentation',
     [author], 1)
]
