"""Command-level services over the algebra kernels."""
