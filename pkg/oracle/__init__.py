"""Exhaustive ground truth for small inputs."""
