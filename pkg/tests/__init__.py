"""Tests for chowgen."""
