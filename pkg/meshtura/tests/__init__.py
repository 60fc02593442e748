"""Test suite for Meshtura."""
