"""Simulation and characterization of gate-addressable hybrid split-gate switch arrays."""

__version__ = "0.1.0"
