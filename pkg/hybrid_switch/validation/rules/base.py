"""Base primitives for diagnosis rules."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Iterable
from typing import TYPE_CHECKING, ClassVar

from hybrid_switch.definition.metrics import DeviceIssue

if TYPE_CHECKING:  # pragma: no cover - typing support only
    from hybrid_switch.validation.context import DiagnosisContext, DiagnosisOptions


class DiagnosisRule(ABC):
    """A check that maps a device's metrics and traces to findings."""

    code: ClassVar[str]
    description: ClassVar[str]

    @abstractmethod
    def apply(self, context: DiagnosisContext, options: DiagnosisOptions) -> Iterable[DeviceIssue]:
        """Evaluate the rule against one device."""

    def __repr__(self) -> str:  # pragma: no cover - simple debug helper
        return f"{self.__class__.__name__}(code={self.code!r})"
