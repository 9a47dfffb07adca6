"""Tests for Moving Planes."""
