"""Genus-2 curves with a power gap, their cyclic covers, and the elliptic
pencil machinery for locating and certifying torsion sections."""

__version__ = "0.1.0"
