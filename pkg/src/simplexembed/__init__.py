"""simplex-embed - Decide and certify embeddability of simplicial complexes in Euclidean space."""

__version__ = "0.1.0"
