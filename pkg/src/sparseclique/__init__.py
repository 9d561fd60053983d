"""Maximal clique enumeration for sparse graphs."""
