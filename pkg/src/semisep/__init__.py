"""Finite and finitely presented semigroups: separability-preservation deciders,
congruences, rewriting normal forms and bounded verification scenarios."""

from .core import FiniteSemigroup, from_table, to_table, monogenic, direct_product
from .deciders import classify

__all__ = ["FiniteSemigroup", "from_table", "to_table", "monogenic", "direct_product", "classify"]
__version__ = "0.1.0"
