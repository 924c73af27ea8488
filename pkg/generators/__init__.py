"""Seeded corpus generators for round-trip testing."""
