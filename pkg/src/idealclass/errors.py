"""Exception types shared across the package."""

from __future__ import annotations


class IdealclassError(Exception):
    """Base class for all package-specific errors."""


class RingFormatError(IdealclassError, ValueError):
    """A ring/ideal/corpus text form could not be parsed."""


class AxiomError(IdealclassError, ValueError):
    """A table ring violates a ring axiom; message names the axiom and a witness."""


class RingMismatchError(IdealclassError, ValueError):
    """An operation received ideals or elements from different rings."""


class BridgeDisagreementError(IdealclassError):
    """A closed-form classification of nZ contradicts the finite-quotient oracle."""

    def __init__(self, modulus: int, mismatches: dict):
        self.modulus = modulus
        self.mismatches = mismatches
        parts = ", ".join(
            f"{field}: closed={got!r} oracle={want!r}"
            for field, (got, want) in sorted(mismatches.items())
        )
        super().__init__(f"closed form falsified at modulus {modulus}: {parts}")

    def __reduce__(self):
        return type(self), (self.modulus, self.mismatches)


class CapExceededError(IdealclassError):
    """A configured size cap would be exceeded; never silently ignored."""

    def __init__(self, cap_name: str, limit: int, actual: int, where: str = ""):
        self.cap_name = cap_name
        self.limit = limit
        self.actual = actual
        self.where = where
        suffix = f" in {where}" if where else ""
        super().__init__(
            f"cap '{cap_name}' exceeded{suffix}: size {actual} > limit {limit}"
        )

    def __reduce__(self):
        return type(self), (self.cap_name, self.limit, self.actual, self.where)


class OutOfScopeError(IdealclassError):
    """A theorem id that is recorded but deliberately not checked."""

    def __init__(self, topic: str, reason: str, valid: list[str]):
        self.topic = topic
        self.reason = reason
        self.valid = valid
        super().__init__(
            f"'{topic}' is registered as out of scope ({reason}); "
            f"checkable ids: {', '.join(valid)}"
        )

    def __reduce__(self):
        return type(self), (self.topic, self.reason, self.valid)


class ExprError(IdealclassError, ValueError):
    """Predicate-expression parse error; carries the offending position."""

    def __init__(self, text: str, pos: int, msg: str):
        self.text = text
        self.pos = pos
        self.msg = msg
        caret = " " * pos + "^"
        super().__init__(f"{msg} at column {pos}\n  {text}\n  {caret}")

    def __reduce__(self):
        return type(self), (self.text, self.pos, self.msg)
