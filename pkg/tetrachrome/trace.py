"""
Trace Event Log

A small in-memory fan-out for solver progress events. The solver emits
structured events (`phase1.step`, `atom`, `phase2.base`, ...); the CLI
subscribes to print them for `--trace`, `clean` and `phase2`, and tests
subscribe to inspect what happened.

DESIGN:
- Events are kept in emission order; formatting has no timestamps, so the
  same input always produces the same trace text.
- A subscriber that raises is dropped; the run continues.
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

log = logging.getLogger("tetrachrome.trace")

Subscriber = Callable[["TraceEvent"], None]


@dataclass(frozen=True)
class TraceEvent:
    kind: str
    fields: Dict[str, Any] = field(default_factory=dict)

    def format(self) -> str:
        parts = [self.kind]
        for key, value in self.fields.items():
            parts.append(f"{key}={_format_value(value)}")
        return " ".join(parts)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_format_value(v) for v in value) + "]"
    return str(value)


class TraceLog:
    """
    Collects events and broadcasts each one to every subscriber.
    """

    def __init__(self) -> None:
        self.events: List[TraceEvent] = []
        self._subscribers: Dict[int, Subscriber] = {}
        self._next_token = 0

    def subscribe(self, callback: Subscriber) -> int:
        """
        Register a callback for future events.

        Returns:
            A token for `unsubscribe`
        """
        token = self._next_token
        self._next_token += 1
        self._subscribers[token] = callback
        return token

    def unsubscribe(self, token: int) -> None:
        self._subscribers.pop(token, None)

    def emit(self, kind: str, **fields: Any) -> TraceEvent:
        event = TraceEvent(kind, dict(fields))
        self.events.append(event)
        dead = []
        for token, callback in self._subscribers.items():
            try:
                callback(event)
            except Exception:
                log.warning("dropping trace subscriber %d after it raised", token, exc_info=True)
                dead.append(token)
        for token in dead:
            self.unsubscribe(token)
        return event

    def kinds(self) -> List[str]:
        return [e.kind for e in self.events]

    def lines(self) -> List[str]:
        return [e.format() for e in self.events]


def emit(trace: Optional["TraceLog"], kind: str, **fields: Any) -> None:
    """Emit on `trace` when one was passed in; no-op otherwise."""
    if trace is not None:
        trace.emit(kind, **fields)


def vertex_labels(labels: Sequence[str], ids: Sequence[int]) -> List[str]:
    return [labels[v] for v in ids]
