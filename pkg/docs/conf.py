#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# mvtwin documentation build configuration file.

import sys
import os

sys.path.insert(0, os.path.abspath("../"))

import mvtwin

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.napoleon",
]
templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "mvtwin"
copyright = "2026, the mvtwin developers"
version = mvtwin.__version__
release = version

exclude_patterns = ["_build"]
pygments_style = "sphinx"

# Document members in source order, which follows the dependency order of the
# word, permutation and matrix layers
autodoc_member_order = "bysource"

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinxdoc"
html_static_path = ["_static"]
htmlhelp_basename = "mvtwindoc"

# -- Options for manual page output ---------------------------------------

man_pages = [("index", "mvtwin", "mvtwin Documentation", ["The mvtwin developers"], 1)]
