"""Unit test package for tagnet."""
