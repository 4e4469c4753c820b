"""Size caps shared by scans, enumeration and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import CapExceededError

__all__ = ["Caps", "DEFAULT_CAPS", "check_cap", "parse_caps"]


@dataclass(frozen=True)
class Caps:
    """Budget limits; exceeding one raises CapExceededError, never silence.

    cubic: largest |R| fed to a triple-scan predicate.
    enumeration: largest |R| for ideal enumeration and pair-level scans.
    lattice_triples: largest ideal-lattice size quantified over ideal triples.
    """

    cubic: int = 512
    enumeration: int = 4096
    lattice_triples: int = 64

    def bumped(self, **kw) -> "Caps":
        return replace(self, **kw)


DEFAULT_CAPS = Caps()

_CAP_ALIASES = {
    "cubic": "cubic",
    "enumeration": "enumeration",
    "enum": "enumeration",
    "lattice": "lattice_triples",
    "lattice_triples": "lattice_triples",
}


def check_cap(caps: Caps, cap_name: str, actual: int, where: str = "") -> None:
    limit = getattr(caps, cap_name)
    if actual > limit:
        raise CapExceededError(cap_name, limit, actual, where)


def parse_caps(text: str, base: Caps = DEFAULT_CAPS) -> Caps:
    """Parse a caps override such as ``cubic=1024,lattice=64``."""
    caps = base
    if not text.strip():
        return caps
    for part in text.split(","):
        if "=" not in part:
            raise ValueError(f"bad caps entry {part!r}, expected name=value")
        name, _, value = part.partition("=")
        key = _CAP_ALIASES.get(name.strip())
        if key is None:
            raise ValueError(
                f"unknown cap {name.strip()!r}; valid: cubic, enumeration, lattice"
            )
        caps = caps.bumped(**{key: int(value)})
    return caps
