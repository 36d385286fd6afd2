"""Tests for mod-2 homology."""
