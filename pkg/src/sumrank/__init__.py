"""Sum-rank-metric codes over F_{q^m}: construction, geometry and exhaustive checks."""

__version__ = "0.1.0"
