"""Quantities attached to countable game objects.

A quantity is a count plus an optional metric unit and a material noun,
e.g. "25g of oak" or "18 marbles".  Units within one dimension normalize
to a common base (metres, grams, litres) so quantities stay comparable
regardless of the unit they were generated with.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# scale factors into the base unit of each dimension
UNIT_SCALE: dict[str, Fraction] = {
    "mm": Fraction(1, 1000),
    "cm": Fraction(1, 100),
    "m": Fraction(1),
    "mg": Fraction(1, 1000),
    "g": Fraction(1),
    "kg": Fraction(1000),
    "ml": Fraction(1, 1000),
    "l": Fraction(1),
}

UNIT_DIMENSION: dict[str, str] = {
    "mm": "length",
    "cm": "length",
    "m": "length",
    "mg": "mass",
    "g": "mass",
    "kg": "mass",
    "ml": "volume",
    "l": "volume",
}

DIMENSION_UNITS: dict[str, tuple[str, ...]] = {
    "length": ("mm", "cm", "m"),
    "mass": ("mg", "g", "kg"),
    "volume": ("ml", "l"),
}


@dataclass(frozen=True)
class Quantity:
    count: int
    unit: str | None  # None means a bare count of discrete things
    material: str

    @property
    def dimension(self) -> str:
        return UNIT_DIMENSION[self.unit] if self.unit else "count"

    @property
    def normalized(self) -> Fraction:
        """Value in the base unit of this quantity's dimension."""
        if self.unit is None:
            return Fraction(self.count)
        return self.count * UNIT_SCALE[self.unit]

    @property
    def compact_name(self) -> str:
        """Display form used in room text and commands, e.g. "25g of oak"."""
        if self.unit is None:
            return f"{self.count} {self.material}"
        return f"{self.count}{self.unit} of {self.material}"

    @property
    def spaced_name(self) -> str:
        """Normalized listing form used by the sorter, e.g. "25 g of oak"."""
        if self.unit is None:
            return f"{self.count} {self.material}"
        return f"{self.count} {self.unit} of {self.material}"
