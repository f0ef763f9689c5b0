#!/usr/bin/env python
#
# tagnet documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import os
import sys

sys.path.insert(0, os.path.abspath("../.."))

import tagnet

# -- General configuration ---------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
    "sphinx.ext.napoleon",
    "sphinx_copybutton",
    "sphinx_toggleprompt",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "tagnet"
copyright = "2026, tagnet developers"
author = "tagnet developers"

version = tagnet.__version__
release = tagnet.__version__

language = "en"
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"
todo_include_todos = False

# -- Options for HTML output -------------------------------------------

html_theme = "pydata_sphinx_theme"
html_title = "tagnet"
html_theme_options = {
    "navbar_center": ["navbar-nav"],
    "navbar_end": ["theme-switcher", "navbar-icon-links"],
    "navbar_persistent": ["search-button"],
    "navbar_align": "content",
    "secondary_sidebar_items": ["page-toc", "sourcelink"],
    "show_prev_next": True,
    "footer_items": ["copyright", "sphinx-version", "theme-version"],
}

htmlhelp_basename = "tagnetdoc"

# -- Options for LaTeX output ------------------------------------------

latex_documents = [
    (master_doc, "tagnet.tex", "tagnet Documentation", author, "manual"),
]

man_pages = [(master_doc, "tagnet", "tagnet Documentation", [author], 1)]

texinfo_documents = [
    (
        master_doc,
        "tagnet",
        "tagnet Documentation",
        author,
        "tagnet",
        "Tag co-occurrence network diagnostics.",
        "Miscellaneous",
    ),
]
