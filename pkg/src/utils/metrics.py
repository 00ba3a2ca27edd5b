from dataclasses import dataclass, field
from typing import Dict, Any
import time


@dataclass
class Metrics:
    """Progress counters and phase timings for long-running sweeps"""
    phase_seconds: Dict[str, float] = field(default_factory=dict)
    counters: Dict[str, int] = field(default_factory=dict)
    _start_times: Dict[str, float] = field(default_factory=dict)

    def start_phase(self, phase: str) -> None:
        self._start_times[phase] = time.monotonic()

    def end_phase(self, phase: str) -> None:
        """Stop timing a phase and accumulate its duration"""
        if phase in self._start_times:
            duration = time.monotonic() - self._start_times[phase]
            self.record_duration(phase, duration)
            del self._start_times[phase]

    def record_duration(self, phase: str, duration: float) -> None:
        self.phase_seconds[phase] = self.phase_seconds.get(phase, 0.0) + duration

    def increment(self, counter: str, amount: int = 1) -> None:
        self.counters[counter] = self.counters.get(counter, 0) + amount

    def get_metrics(self) -> Dict[str, Any]:
        """Snapshot of all metrics"""
        return {
            "phase_seconds": dict(self.phase_seconds),
            "counters": dict(self.counters)
        }
