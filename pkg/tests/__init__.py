# tests/__init__.py
"""
Package de tests pour impute-bench.
"""
