"""Test suite for chartfold."""
