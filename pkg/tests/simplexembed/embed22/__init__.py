"""Tests for plane embeddability of 2-complexes."""
