"""Tests for simplex-embed."""
