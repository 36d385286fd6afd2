"""Tests for exact integer and GF(2) linear algebra."""
