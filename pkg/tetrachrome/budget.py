"""
Difftest Budget

Caps how much work a differential run may do: a maximum number of
instances and/or a wall-clock allowance. The harness asks before every
instance and stops cleanly once the budget is spent, marking the report
as exhausted.

HOW IT WORKS:
- `check()` records one attempt and answers (allowed, error_message)
- limits of None mean "no limit"
- the clock is injectable so tests stay deterministic
"""
import time
from typing import Callable, Optional, Tuple


class Budget:
    def __init__(
        self,
        max_items: Optional[int] = None,
        max_seconds: Optional[float] = None,
        clock: Callable[[], float] = time.monotonic,
    ):
        self.max_items = max_items
        self.max_seconds = max_seconds
        self._clock = clock
        self._started = clock()
        self.used = 0

    def check(self) -> Tuple[bool, Optional[str]]:
        """
        Ask for one more instance.

        Returns:
            Tuple of (allowed, error_message)
            - If allowed: (True, None) and the attempt is counted
            - If spent: (False, reason)
        """
        if self.max_items is not None and self.used >= self.max_items:
            return False, f"budget exhausted: {self.max_items} instances"
        if self.max_seconds is not None and self._clock() - self._started >= self.max_seconds:
            return False, f"budget exhausted: {self.max_seconds:g} seconds"
        self.used += 1
        return True, None

    def reset(self) -> None:
        self._started = self._clock()
        self.used = 0


def unlimited() -> Budget:
    return Budget()
