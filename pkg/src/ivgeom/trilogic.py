"""Three-valued verdicts for semi-decidable geometric tests.

TRUE and FALSE carry the force of proof over the operand sets;
UNDETERMINED means the test could not decide.  Connectives follow strong
Kleene semantics: UNDETERMINED behaves as an unknown classical value.
"""

from __future__ import annotations

from enum import Enum


class TruthValue(Enum):
    TRUE = "true"
    FALSE = "false"
    UNDETERMINED = "undetermined"

    def __str__(self) -> str:
        return self.value

    @staticmethod
    def from_bool(b: bool) -> "TruthValue":
        return TruthValue.TRUE if b else TruthValue.FALSE

    @property
    def is_true(self) -> bool:
        return self is TruthValue.TRUE

    @property
    def is_false(self) -> bool:
        return self is TruthValue.FALSE

    @property
    def is_undetermined(self) -> bool:
        return self is TruthValue.UNDETERMINED


def and3(a: TruthValue, b: TruthValue) -> TruthValue:
    """Strong Kleene conjunction: FALSE dominates, TRUE is the identity."""
    if a is TruthValue.FALSE or b is TruthValue.FALSE:
        return TruthValue.FALSE
    if a is TruthValue.TRUE and b is TruthValue.TRUE:
        return TruthValue.TRUE
    return TruthValue.UNDETERMINED


def not3(a: TruthValue) -> TruthValue:
    """Swap TRUE and FALSE; UNDETERMINED is a fixed point."""
    if a is TruthValue.TRUE:
        return TruthValue.FALSE
    if a is TruthValue.FALSE:
        return TruthValue.TRUE
    return TruthValue.UNDETERMINED


def or3(a: TruthValue, b: TruthValue) -> TruthValue:
    """De Morgan dual of and3: TRUE dominates."""
    return not3(and3(not3(a), not3(b)))
