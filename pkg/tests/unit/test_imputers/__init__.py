"""Tests for imputers module."""
