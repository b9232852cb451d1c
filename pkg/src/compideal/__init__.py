"""Complete monomial ideals: closures, base points and length formulas."""
__version__ = "0.1.0"
