"""
Tests for the discharge package.
"""
