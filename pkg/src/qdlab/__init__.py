"""Spectral numerics for the linearized quantum-hydrodynamic acoustic system.

Modules: ``dispersion`` (symbols), ``grid`` (periodic lattice, multipliers,
dyadic blocks), ``propagator`` (exact evolution, Duhamel, Boussinesq form),
``oscillatory`` (stationary-phase integrals), ``norms`` (admissible pairs,
mixed and Besov norms), ``gpe`` (Gross-Pitaevskii cross-check) and
``experiments`` / ``cli`` (campaigns and reports).
"""

__version__ = "0.1.0"
