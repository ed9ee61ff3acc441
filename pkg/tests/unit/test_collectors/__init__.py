"""Tests for collectors module."""
