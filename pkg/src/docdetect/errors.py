"""Exception types shared across the package."""


class DocdetectError(Exception):
    """Base class for errors raised by this package."""


class FontError(DocdetectError):
    """A font could not be located or loaded."""


class LayoutError(DocdetectError):
    """Page layout could not be produced within the retry budget."""


class CorpusError(DocdetectError):
    """A corpus directory or annotation file is malformed."""


class CheckpointError(DocdetectError):
    """A model checkpoint is unreadable or inconsistent with its config."""


class DatasetFormatError(DocdetectError):
    """A ground-truth dataset file does not follow its published layout."""
