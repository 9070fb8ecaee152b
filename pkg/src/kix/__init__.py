"""k-intersection edge-coloring toolkit for subcubic plane multigraphs."""

__version__ = "0.1.0"
