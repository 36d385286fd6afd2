"""Tests for simplicial complexes and their operations."""
