"""
Execution interfaces and the error hierarchy shared by all plethyx modules.
"""

from abc import ABC, abstractmethod
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")


class WorkRunner(ABC):
    """Abstract base class for work runners.

    A runner applies a picklable function to a batch of independent work
    units and returns the results in input order, whatever the number of
    workers behind it.
    """

    @abstractmethod
    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """Apply ``fn`` to every item.

        Args:
            fn: Module-level function (must be picklable for process pools)
            items: Work units

        Returns:
            List[R]: Results, in the order of ``items``
        """
        pass

    @abstractmethod
    def close(self) -> None:
        """Release worker resources."""
        pass

    @property
    @abstractmethod
    def workers(self) -> int:
        """Number of workers behind this runner."""
        pass

    @abstractmethod
    def get_info(self) -> str:
        """Get a one-line description of the runner."""
        pass

    def __enter__(self) -> "WorkRunner":
        return self

    def __exit__(self, exc_type, exc, tb) -> None:
        self.close()


class PlethyxError(Exception):
    """Base class for every error raised by plethyx."""
    pass


class InvalidPartitionError(PlethyxError, ValueError):
    """Raised for parts that are not weakly decreasing positive integers."""
    pass


class InvalidTableauError(PlethyxError, ValueError):
    """Raised when a filling breaks the semistandard or shape conditions."""
    pass


class InvalidCornerError(PlethyxError):
    """Raised when a slide starts at a cell that is not an inner corner."""
    pass


class MalformedBiwordError(PlethyxError):
    """Raised when bi-letters are not in biword or Burge order."""
    pass


class ShapeMismatchError(PlethyxError):
    """Raised when a rectified two-letter piece has no admissible shape."""
    pass


class FormatError(PlethyxError, ValueError):
    """Raised when a text or JSON input cannot be parsed."""
    pass


class RunnerConfigError(PlethyxError, ValueError):
    """Raised for a thread or process count that is not a positive integer."""
    pass


class OracleError(PlethyxError):
    """Raised when the symmetric function engine hits an inconsistency."""
    pass


class VerificationError(PlethyxError):
    """Raised when a verification suite finds a counterexample."""

    def __init__(self, message: str, counterexample=None):
        super().__init__(message)
        self.counterexample = counterexample
