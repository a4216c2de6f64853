"""
Tests for the nullstellensatz package.
"""
