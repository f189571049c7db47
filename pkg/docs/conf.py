#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# bitml documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

# General information about the project.
project = "bitml"
copyright = "2020, bitml contributors"
author = "bitml contributors"

# The short X.Y version.
version = "0.1"
# The full version, including alpha/beta/rc tags.
release = "0.1.0"

language = None

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

pygments_style = "sphinx"

todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "alabaster"

html_theme_options = {
    "show_related": True,
    "page_width": "1080px",
    "fixed_sidebar": True,
    "code_font_size": "0.8em",
}

htmlhelp_basename = "bitmldoc"

# -- Options for LaTeX output ---------------------------------------------

latex_elements = {}

latex_documents = [
    (master_doc, "bitml.tex", "bitml Documentation", author, "manual"),
]

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "bitml", "bitml Documentation", [author], 1)]

# -- Options for Texinfo output -------------------------------------------

texinfo_documents = [
    (
        master_doc,
        "bitml",
        "bitml Documentation",
        author,
        "bitml",
        "Parse, verify and compile BitML contracts.",
        "Miscellaneous",
    ),
]
