"""Tests for generators module."""
