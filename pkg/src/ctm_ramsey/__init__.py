"""Monochromatic connected triangle matchings in 2-colored complete graphs."""
