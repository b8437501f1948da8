"""Exact and asymptotic enumeration of k-gonal 2-trees.

A k-gonal 2-tree is built from k-sided polygons glued edge to edge in a
tree-like fashion.  This package counts them exactly (labelled and
unlabelled, rooted and unrooted, oriented and not) and computes the
growth constants of the unlabelled families.

The modules are layered:

    series      exact truncated power series over Fraction
    kernels     integer convolution kernels (compiled when available)
    bseries     the fundamental edge-rooted series b(x) and its powers
    labelled    closed-form labelled counts and cycle-type fixed points
    oriented    unlabelled counts up to orientation-preserving maps
    odd, even   unlabelled counts with reflections, split by parity of k
    oracle      brute-force enumeration of small structures
    asymptotics growth rate and amplitude constants
    universal   coefficients of the large-k expansion of the singularity
    cli         command line front end
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
