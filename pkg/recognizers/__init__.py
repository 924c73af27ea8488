"""Graph class membership tests and small forbidden-pattern detectors."""
