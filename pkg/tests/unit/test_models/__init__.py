"""Tests for models module."""
