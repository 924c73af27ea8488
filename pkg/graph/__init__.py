"""LangGraph pipelines for the ptolemaic and the 3-sun-free split square-root algorithms."""
