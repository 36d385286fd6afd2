"""Tests for the 3-SAT reduction and its gadgets."""
