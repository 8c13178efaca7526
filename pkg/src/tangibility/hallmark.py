"""Hallmark vectors: per-term entity multiplicities of an application.

A hallmark has twelve components in canonical term order, each a Count.
Binarization cuts every component to presence (0 or 1); "many" binarizes
to 1.  L1 distance is defined only on hallmarks free of "many"; Hamming
distance is defined on binary hallmarks and never exceeds 12.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .model import Application, Count
from .terms import Term, term_of

__all__ = [
    "Hallmark",
    "BinaryHallmark",
    "SymbolicCountError",
    "compute_hallmark",
    "binarize",
    "l1_distance",
    "hamming_distance",
]

COMPONENT_COUNT = 12


class SymbolicCountError(ValueError):
    """Raised where an exact number is required but 'many' is present."""


def _as_count(value: Union[int, str, Count]) -> Count:
    if isinstance(value, Count):
        return value
    if value == "many":
        return Count.MANY
    if isinstance(value, int) and not isinstance(value, bool):
        return Count(value)
    raise TypeError(f"component must be an int, 'many', or Count, got {value!r}")


@dataclass(frozen=True)
class Hallmark:
    """Twelve Counts in canonical term order."""

    components: tuple[Count, ...]

    def __post_init__(self) -> None:
        if len(self.components) != COMPONENT_COUNT:
            raise ValueError(
                f"hallmark needs {COMPONENT_COUNT} components, got {len(self.components)}"
            )

    @classmethod
    def of(cls, *values: Union[int, str, Count]) -> "Hallmark":
        """Build a hallmark from ints, 'many', or Counts, in term order."""
        return cls(tuple(_as_count(v) for v in values))

    @classmethod
    def zero(cls) -> "Hallmark":
        return cls((Count(0),) * COMPONENT_COUNT)

    def component(self, term: Term) -> Count:
        return self.components[term.index]

    @property
    def has_many(self) -> bool:
        return any(c.is_many for c in self.components)

    def __str__(self) -> str:
        cells = ("N" if c.is_many else str(c.value) for c in self.components)
        return "(" + ", ".join(cells) + ")"


@dataclass(frozen=True)
class BinaryHallmark:
    """Presence vector: one bit per term, in canonical term order."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bits) != COMPONENT_COUNT:
            raise ValueError(
                f"binary hallmark needs {COMPONENT_COUNT} bits, got {len(self.bits)}"
            )
        if any(bit not in (0, 1) for bit in self.bits):
            raise ValueError("binary hallmark bits must be 0 or 1")

    def __str__(self) -> str:
        return "(" + ", ".join(str(bit) for bit in self.bits) + ")"


def compute_hallmark(app: Application) -> Hallmark:
    """Sum entity counts per term.  An application with no entities is all zero.

    Summing absorbs "many": any term with a many-counted entity gets "many".
    """
    totals = [Count(0)] * COMPONENT_COUNT
    for entity in app.entities:
        index = term_of(entity.role, entity.tangibility).index
        totals[index] = totals[index] + entity.count
    return Hallmark(tuple(totals))


def binarize(hallmark: Hallmark) -> BinaryHallmark:
    return BinaryHallmark(tuple(1 if c.is_positive else 0 for c in hallmark.components))


def l1_distance(a: Hallmark, b: Hallmark) -> int:
    """Sum of absolute component differences.

    Undefined when either hallmark carries "many"; that raises
    SymbolicCountError rather than guessing a magnitude.
    """
    if a.has_many or b.has_many:
        raise SymbolicCountError("L1 distance is undefined on a symbolic count 'many'")
    return sum(
        abs(x.value - y.value) for x, y in zip(a.components, b.components)  # type: ignore[operator]
    )


def hamming_distance(a: BinaryHallmark, b: BinaryHallmark) -> int:
    return sum(1 for x, y in zip(a.bits, b.bits) if x != y)


def positivity(vector: Union[Hallmark, BinaryHallmark]) -> tuple[bool, ...]:
    """Per-term presence flags, accepting either vector form."""
    if isinstance(vector, Hallmark):
        return tuple(c.is_positive for c in vector.components)
    return tuple(bit == 1 for bit in vector.bits)
