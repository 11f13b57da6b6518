"""L2 zeta functions of graphs with a free cocompact Z-action."""

__version__ = "0.1.0"
