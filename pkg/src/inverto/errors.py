"""Exception types shared by all inverto modules."""


class ParseError(ValueError):
    """Malformed textual input (tournament/graph code, set list, sample file).

    ``position`` is the 0-based character offset of the offending spot.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CapExceeded(ValueError):
    """Input size is above the configured cap of an exhaustive computation."""
