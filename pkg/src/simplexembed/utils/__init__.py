"""Utility modules for simplexembed."""
