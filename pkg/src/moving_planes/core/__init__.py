"""Core models, product tables and algebra kernels."""
