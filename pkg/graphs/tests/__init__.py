"""
Tests for the graphs package.
"""
