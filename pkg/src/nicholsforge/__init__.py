"""nicholsforge: exact construction and machine verification of the Nichols
algebras, Hopf algebras and liftings living over the smallest non-pointed
basic Hopf algebra of dimension 8."""

__version__ = "0.1.0"
