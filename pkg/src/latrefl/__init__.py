"""latrefl: exact lattices, root enumeration and hyperbolic reflection groups."""

__version__ = "0.1.0"
