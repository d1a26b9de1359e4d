"""Core building blocks: configuration, logging, geometric models and utilities."""
