#!/usr/bin/env python
#
# hpfg documentation build configuration file.

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import hpfg  # noqa: E402

extensions = ["sphinx.ext.autodoc", "sphinx.ext.viewcode", "sphinx.ext.mathjax"]
autodoc_member_order = "bysource"

source_suffix = ".rst"
master_doc = "index"

project = "hpfg"
copyright = "2026, hpfg developers"
author = "hpfg developers"
version = hpfg.__version__
release = hpfg.__version__

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"

html_theme = "alabaster"
htmlhelp_basename = "hpfgdoc"

latex_documents = [
    (master_doc, "hpfg.tex", "hpfg Documentation", author, "manual"),
]
man_pages = [(master_doc, "hpfg", "hpfg Documentation", [author], 1)]
