"""Exception types shared across the package."""


class PhonomemError(Exception):
    """Base class for corpus, model, and generation errors."""


class CorpusError(PhonomemError):
    """Malformed, unreadable, or empty corpus input."""


class UnknownSymbolError(PhonomemError):
    """A string contains a cluster that is not in the alphabet."""

    def __init__(self, symbol: str, byte_offset: int) -> None:
        super().__init__(f"unknown symbol {symbol!r} at byte offset {byte_offset}")
        self.symbol = symbol
        self.byte_offset = byte_offset


class SectorExhaustedError(PhonomemError):
    """Every candidate next sound is excluded by the active penalty set."""


class ModelFormatError(PhonomemError):
    """Unreadable or version-incompatible model file."""
