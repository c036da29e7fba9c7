"""Exception types shared across the package."""

from __future__ import annotations


class SnarkforgeError(Exception):
    """Base class for all package errors."""


class GraphError(SnarkforgeError):
    """Invalid graph construction or a degenerate input fed to a cubic-only oracle."""


class GraphParseError(SnarkforgeError):
    """Malformed graph/certificate/spec file. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonCubicError(GraphError):
    """A cubic-only oracle was given a graph with a vertex of degree != 3."""


class UnsupportedScaleError(SnarkforgeError):
    """Requested parameter is beyond the supported desk scale (e.g. cut threshold > 4)."""


class MalformedColoringError(SnarkforgeError):
    """Coloring is not total on the host graph or uses a color outside 1..k."""


class ImproperColoringError(SnarkforgeError):
    """An operation requiring a proper edge-coloring was given an improper one."""


class SpecError(SnarkforgeError):
    """An LP spec violates its invariants (parity, partition coverage, ranges)."""


class IncompatibleSpecError(SpecError):
    """Spec does not satisfy the hypotheses of the requested table-driven coloring."""


class VerificationError(SnarkforgeError):
    """A certificate failed verification where a verified one is required."""


class NotIsomorphicError(SnarkforgeError):
    """Two graphs expected to be isomorphic are not."""
