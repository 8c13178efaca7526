"""Tangibility classes.

An application's class depends only on which hallmark components are
positive, never on their magnitudes, so classification is invariant under
binarization and accepts either vector form.

Component shorthand used below: D/T/O/C for the datum, tool, operation and
constraint roles, subscripted T/G/I for tangible, graspable, intangible.

The four classes, decided in order:

  I    (D_T or D_G) and no D_I         bodied data without a projected image
  II   (D_T or D_G) and D_I            bodied data next to projected data
  III  D_I only, via bodied tools      projected data worked with graspable
                                       or tangible tools
  IV   no data, no tools, O_T or O_G   a bodied operation is the whole
                                       interface

Anything else is unclassified, with a reason naming the decisive gap.
The predicates are mutually exclusive by construction.

`classify_by_patterns` answers from a positional rule table instead; the
table is kept verbatim as transcribed, first match wins.  The two answers
agree whenever no role has both its tangible and graspable components
positive.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

from .hallmark import BinaryHallmark, Hallmark, positivity

__all__ = [
    "TangibilityClass",
    "ClassResult",
    "Cell",
    "PatternRule",
    "classify",
    "classify_by_patterns",
    "pattern_table",
]

Vector = Union[Hallmark, BinaryHallmark]


class TangibilityClass(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


@dataclass(frozen=True)
class ClassResult:
    """Outcome of classification.

    `outcome` is None when unclassified; then `reason` says why.  When a
    class is assigned, `rule` identifies the predicate or pattern row that
    fired.
    """

    outcome: TangibilityClass | None
    rule: str | None = None
    reason: str | None = None

    @property
    def is_classified(self) -> bool:
        return self.outcome is not None

    @property
    def label(self) -> str:
        return self.outcome.value if self.outcome else "unclassified"


def classify(vector: Vector) -> ClassResult:
    """Assign a tangibility class from component positivity."""
    p = positivity(vector)
    d_t, d_g, d_i, t_t, t_g, t_i, o_t, o_g = p[:8]

    if (d_t or d_g) and not d_i:
        return ClassResult(TangibilityClass.I, rule="I")
    if (d_t or d_g) and d_i:
        return ClassResult(TangibilityClass.II, rule="II")
    if d_i and not d_t and not d_g and (t_t or t_g):
        return ClassResult(TangibilityClass.III, rule="III")
    if not any((d_t, d_g, d_i, t_t, t_g, t_i)) and (o_t or o_g):
        return ClassResult(TangibilityClass.IV, rule="IV")

    if d_i:
        reason = "intangible data but no tangible or graspable tool"
    elif t_t or t_g or t_i:
        reason = "tools present but no data"
    else:
        reason = "no data, no bodied operation"
    return ClassResult(None, reason=reason)


class Cell(enum.Enum):
    """One constraint cell of a pattern row."""

    ZERO = "0"
    POSITIVE = "+"
    ANY = "*"

    def admits(self, positive: bool) -> bool:
        if self is Cell.ZERO:
            return not positive
        if self is Cell.POSITIVE:
            return positive
        return True


@dataclass(frozen=True)
class PatternRule:
    label: str
    outcome: TangibilityClass
    cells: tuple[Cell, ...]

    def matches(self, vector: Vector) -> bool:
        return all(cell.admits(flag) for cell, flag in zip(self.cells, positivity(vector)))


def _row(label: str, outcome: TangibilityClass, pattern: str) -> PatternRule:
    cells = tuple(Cell(ch) for ch in pattern.split())
    assert len(cells) == 12
    return PatternRule(label, outcome, cells)


# Cell order is canonical term order: datum, tool, operation, constraint,
# each tangible / graspable / intangible.
_PATTERN_TABLE: tuple[PatternRule, ...] = (
    _row("I.1", TangibilityClass.I, "+ 0 0  * * *  * * *  * * *"),
    _row("I.2", TangibilityClass.I, "0 + 0  * * *  * * *  * * *"),
    _row("II.1", TangibilityClass.II, "+ 0 +  * * *  * * *  * * *"),
    _row("II.2", TangibilityClass.II, "0 + +  * * *  * * *  * * *"),
    _row("III.1", TangibilityClass.III, "0 0 +  0 + *  * * *  * * *"),
    _row("III.2", TangibilityClass.III, "0 0 +  + 0 *  * * *  * * *"),
    _row("IV.1", TangibilityClass.IV, "0 0 0  0 0 0  + 0 *  * * *"),
    _row("IV.2", TangibilityClass.IV, "0 0 0  0 0 0  0 + *  * * *"),
)


def pattern_table() -> tuple[PatternRule, ...]:
    """The eight pattern rows, in precedence order."""
    return _PATTERN_TABLE


def classify_by_patterns(vector: Vector) -> ClassResult:
    """Assign a class from the pattern table; first matching row wins."""
    for rule in _PATTERN_TABLE:
        if rule.matches(vector):
            return ClassResult(rule.outcome, rule=rule.label)
    return ClassResult(None, reason="no pattern row matches")
