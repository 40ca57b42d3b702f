"""Exception types shared across the package."""


class BarlaxError(Exception):
    """Base class for all library errors."""


class EndpointMismatch(BarlaxError):
    """Source/target dimensions or objects do not line up for composition."""


class IndexOutOfRange(BarlaxError):
    """A generator index or tuple position is outside its legal range."""


class ShapeMismatch(BarlaxError):
    """A grid, tuple or mask has the wrong length for the requested operation."""


class ColourOrder(BarlaxError):
    """A structural arrow was requested with colours out of order (needs k < l)."""


class ArityMismatch(BarlaxError):
    """Wrong number of colours or objects supplied."""


class UnboundVariable(BarlaxError):
    """A term evaluation met an object variable absent from the assignment."""


class NotANormalizingPath(BarlaxError):
    """A swap sequence does not sort the shuffle it claims to sort."""


class NotEqualArrows(BarlaxError):
    """Two words supposed to denote the same arrow of Delta^op do not."""


class ParseError(BarlaxError):
    """Text input does not conform to the word/shuffle grammar."""


class ConfigError(BarlaxError):
    """Invalid verification suite configuration."""
