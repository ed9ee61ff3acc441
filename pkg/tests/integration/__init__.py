# tests/integration/__init__.py
"""Tests d'intégration."""
