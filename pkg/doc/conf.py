#!/usr/bin/env python3
# -*- coding: utf-8 -*-
#
# pyequipart documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath("."))

try:
    import pyequipart
except:
    sys.path.insert(0, os.path.abspath(".."))
    import pyequipart

from pyequipart import __version__

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.doctest",
    "sphinx.ext.mathjax",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
]

autosummary_generate = True
autodoc_member_order = "bysource"


def skip(app, what, name, obj, would_skip, options):
    if name == "__call__":
        return False
    return would_skip


def setup(app):
    app.connect("autodoc-skip-member", skip)


templates_path = ["_templates"]
source_suffix = [".rst"]
master_doc = "index"

project = "pyequipart"
copyright = "2026, The pyequipart developers."
author = "The pyequipart developers."

version = __version__
release = __version__

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"
todo_include_todos = False
nitpicky = False

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {
    "display_version": True,
    "prev_next_buttons_location": "bottom",
    "collapse_navigation": True,
    "sticky_navigation": True,
    "navigation_depth": 4,
}
html_title = "pyequipart"
html_short_title = "pyequipart documentation"
html_static_path = ["_static"]
html_last_updated_fmt = "%b %d, %Y"
html_show_sourcelink = False
html_show_sphinx = False
htmlhelp_basename = "pyequipartdoc"
