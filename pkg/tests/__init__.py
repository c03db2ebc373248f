"""Tests for gem_degree package."""
