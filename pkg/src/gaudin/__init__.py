"""Explicit Bethe ansatz solutions of the Gaudin model for types B, C, D on V_lambda (x) V_{omega_1}."""

__version__ = "0.1.0"
