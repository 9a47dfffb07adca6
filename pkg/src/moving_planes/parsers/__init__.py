"""Parsers for multivector, vector and range text."""
