"""Rendering and file export of results."""
