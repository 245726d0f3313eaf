"""genus-verify package.

Executable checks for two constructions of finitely generated residually finite
groups that share a profinite completion: a soluble group-ring construction and
an Alt(5) branch-group construction, both verified at finite level.
"""

__all__ = [
    "__version__",
]

__version__ = "0.1.0"
