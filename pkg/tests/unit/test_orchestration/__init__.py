"""Tests for orchestration module."""
