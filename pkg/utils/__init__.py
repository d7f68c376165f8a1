"""Configuration and logging helpers for the bracket series engine."""
