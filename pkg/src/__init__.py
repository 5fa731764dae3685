"""Exact invariants of hyperplane arrangement complements and pure braid groups."""
