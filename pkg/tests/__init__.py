"""Tests for the ackermann_goodstein package."""
