"""Tests for the Van Kampen obstruction."""
