"""Dubrovnik polynomial of link and tangle diagrams by bridge-guided skein recursion."""
