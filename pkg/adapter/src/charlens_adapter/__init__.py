"""Adapter from NLP toolchain output to the annotation interchange format."""

from .adapt import AdapterConfig, AdapterError, adapt, adapt_to_bytes

__all__ = ["AdapterConfig", "AdapterError", "adapt", "adapt_to_bytes"]
