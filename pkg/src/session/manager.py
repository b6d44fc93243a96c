"""Run journal: timestamped lifecycle events of one CLI invocation.

Events are kept in memory and flushed to a JSONL file on request.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional, Union


def _now_iso() -> str:
    return datetime.now(timezone.utc).isoformat().replace("+00:00", "Z")


@dataclass
class JournalEvent:
    ts: str
    type: str
    data: Dict[str, Any]


class RunJournal:
    """Collects events such as ``command``, ``step_failure``, ``flag_violation`` and ``verification``"""

    def __init__(self, run_id: Optional[str] = None):
        self.run_id = run_id or _now_iso()
        self.events: List[JournalEvent] = []

    def record(self, event_type: str, data: Optional[Dict[str, Any]] = None) -> None:
        self.events.append(JournalEvent(ts=_now_iso(), type=event_type, data=data or {}))

    def of_type(self, event_type: str) -> List[JournalEvent]:
        return [e for e in self.events if e.type == event_type]

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps({"run_id": self.run_id, **asdict(ev)}) for ev in self.events)

    def save(self, path: Union[str, Path]) -> None:
        with open(path, "w", encoding="utf-8") as f:
            f.write(self.to_jsonl())
            if self.events:
                f.write("\n")
