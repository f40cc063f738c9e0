"""Depths of graded quotients with a prescribed Hilbert function."""
