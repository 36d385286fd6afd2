"""Tests for exact intersection numbers and their verifiers."""
