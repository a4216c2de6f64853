"""
Tests for the oracle package.
"""
