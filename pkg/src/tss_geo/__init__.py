"""tss-geo: Target Set Selection on geometric graphs."""

__version__ = "1.0.0"
