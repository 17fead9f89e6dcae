"""Test suite for beauville_forge."""
