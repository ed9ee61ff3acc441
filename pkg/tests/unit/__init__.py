# tests/unit/__init__.py
"""Package pour les tests unitaires."""
