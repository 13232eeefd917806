"""Exception types shared across the toolkit."""


class SentweetError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(SentweetError):
    """Invalid or inconsistent configuration (bad selector, missing file, bad value)."""


class FormatError(SentweetError):
    """Malformed input file (CSV, embedding header/rows, resource files)."""


class EmptyDataset(SentweetError):
    """Dataset file contains no documents."""


class EmptyVocabulary(SentweetError):
    """No token met the frequency threshold while fitting a vocabulary."""


class DimensionMismatch(SentweetError):
    """Embedding row length disagrees with the declared dimension."""


class SequenceTooShort(SentweetError):
    """Sequence shorter than a layer's minimum input length."""


class LengthMismatch(SentweetError):
    """Paired sequences (predictions/labels) differ in length."""


class DegenerateClass(SentweetError):
    """A class has no training samples."""


class EmptyClass(SentweetError):
    """Stratified splitting requested for a class with no members."""


class NumericError(SentweetError):
    """Training or inference produced non-finite values."""
