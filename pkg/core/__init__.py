"""Graph value type, text formats and named graphs shared by every package."""
