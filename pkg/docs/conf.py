#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# esampling documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sphinx_rtd_theme  # For read the docs theme

import esampling

# -- General configuration ---------------------------------------------

extensions = [
    'm2r2',
    'sphinx.ext.autodoc',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'sphinx.ext.todo',
    'sphinx.ext.coverage',
    'sphinx.ext.mathjax'
]

templates_path = ['_templates']

source_suffix = ['.rst', '.md']

master_doc = 'index'

# General information about the project.
project = 'eSampling'
slug = 'esampling'
title = project + ' Documentation'
copyright = '2026, eSampling Developers'
author = 'eSampling Developers'
description = 'Sampling rate versus harvested energy tradeoffs of self-harvesting SAR ADCs.'

version = esampling.__version__
release = esampling.__version__

language = 'en'

exclude_patterns = ['.py', '_build', 'Thumbs.db', '.DS_Store']

pygments_style = 'sphinx'

todo_include_todos = False

# -- Options for HTML output -------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_theme_options = {
    'collapse_navigation': False,
    'display_version': False,
}

htmlhelp_basename = slug + 'doc'

# -- Options for LaTeX output ------------------------------------------

latex_documents = [(
    master_doc,
    slug + '.tex',
    title,
    author,
    'manual'
)]

# -- Options for manual page output ------------------------------------

man_pages = [(
    master_doc,
    slug,
    title,
    [author],
    1
)]

# -- Options for Texinfo output ----------------------------------------

texinfo_documents = [(
    master_doc,
    slug,
    title,
    author,
    slug,
    description,
    'Miscellaneous'
)]
