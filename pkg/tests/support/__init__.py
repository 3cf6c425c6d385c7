"""Test support utilities."""
