"""Tests for the simplexembed package."""
