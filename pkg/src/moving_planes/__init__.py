"""Moving Planes - geometric algebra of moving planes and relativistic boosts."""

__version__ = "0.1.0"
