"""
Exception hierarchy for knowtex.

All application-specific exceptions inherit from KnowTexError,
allowing CLI layer to catch-all with a single handler.

Problems found *in* a document (unbalanced braces, unknown labels, orphan
proofs) are not exceptions; they are collected as diagnostics. Exceptions
are reserved for conditions that stop a run.

Hierarchy:
    KnowTexError                 # Base - catch-all for CLI
    ├── SourceError              # Input file unreadable or not UTF-8
    ├── ConfigError              # Configuration file errors
    ├── UsageError               # Bad command-line selections
    ├── ChapterSelectionError    # Requested chapter does not exist
    ├── StyleError               # Style file errors
    └── RenderError              # Emitter failures
        └── LayoutMismatchError  # Layout computed for a different graph
"""


class KnowTexError(Exception):
    """Base exception for all knowtex errors.

    CLI layer catches this to format user-friendly messages.
    Use --verbose flag to show full traceback.
    """

    pass


class SourceError(KnowTexError):
    """Input document failures.

    Raised when:
    - The input file does not exist or cannot be read
    - The file is not valid UTF-8
    """

    def __init__(
        self,
        message: str,
        *,
        path: str | None = None,
        reason: str | None = None,
    ) -> None:
        super().__init__(message)
        self.path = path
        self.reason = reason


class ConfigError(KnowTexError):
    """Configuration errors.

    Raised when:
    - Config file has invalid YAML syntax
    - Setting value is invalid
    """

    def __init__(
        self,
        message: str,
        *,
        setting: str | None = None,
    ) -> None:
        super().__init__(message)
        self.setting = setting


class UsageError(KnowTexError):
    """Invalid command-line selections.

    Raised when:
    - An environment override is not of the form PATTERN=KIND
    - The pattern is not a valid regular expression
    - The kind is unknown
    - Neither an output file nor a listing mode was requested
    """

    def __init__(
        self,
        message: str,
        *,
        token: str | None = None,
    ) -> None:
        super().__init__(message)
        self.token = token


class ChapterSelectionError(KnowTexError):
    """Requested chapter is not in the document."""

    def __init__(
        self,
        message: str,
        *,
        available: list[str] | None = None,
    ) -> None:
        super().__init__(message)
        self.available = available or []


class StyleError(KnowTexError):
    """Style file failures.

    Raised when:
    - The style file is not valid JSON
    - A kind, shape, line style or color name is unknown
    """

    def __init__(
        self,
        message: str,
        *,
        key_path: str | None = None,
    ) -> None:
        super().__init__(message)
        self.key_path = key_path


class RenderError(KnowTexError):
    """Emitter failures.

    Raised when:
    - A template is missing or fails to render
    - Emitter inputs violate their contract
    - An output file cannot be written
    """

    def __init__(
        self,
        message: str,
        *,
        format: str | None = None,
    ) -> None:
        super().__init__(message)
        self.format = format


class LayoutMismatchError(RenderError):
    """Layout node set differs from the graph node set."""

    def __init__(
        self,
        message: str,
        *,
        missing: list[str] | None = None,
        extra: list[str] | None = None,
    ) -> None:
        super().__init__(message, format="tikz")
        self.missing = missing or []
        self.extra = extra or []
