"""
Almost Invariant Colorings Toolkit
==================================

Exact integer tools for the mapping class group action on curves:

- torus: PSL2(Z) acting on primitive integer pairs, and the labelled binary tree
- colorings: building, checking and classifying almost invariant colorings of torus curves
- dehn_thurston: Dehn-Thurston twist coordinates and lattice coloring checks
- cli: command line front end (``python -m mcg_colorings --help``)
"""

__version__ = "0.3.0"
