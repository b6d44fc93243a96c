"""Reporter utilities: load run journals from JSONL and aggregate summaries."""
from __future__ import annotations

import json
import logging
from collections import Counter
from pathlib import Path
from typing import Any, Dict, List, Optional, Set, Tuple, Union

logger = logging.getLogger(__name__)


def load_journal_from_jsonl(path: Union[str, Path]) -> Tuple[str, List[Dict[str, Any]]]:
    """Load journal events from a JSONL file.

    Each line is expected to be a JSON object with at least:
    {"run_id": str, "ts": str, "type": str, "data": {...}}
    Returns (run_id, events)
    """
    run_id: Optional[str] = None
    events: List[Dict[str, Any]] = []
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                logger.warning("skipping malformed journal line %d in %s", lineno, path)
                continue
            if run_id is None:
                run_id = rec.get("run_id")
            events.append({"ts": rec.get("ts"), "type": rec.get("type"), "data": rec.get("data", {})})
    return (run_id or "unknown-run", events)


def aggregate_events(events: List[Dict[str, Any]]) -> Dict[str, Any]:
    """
    Summarize one run journal.

    Returns the event counts by type, the commands invoked in order, the
    term indices that failed to divide or raised a flag, and every error
    and warning message carried in event data.
    """
    counts = Counter(ev.get("type") for ev in events)
    commands: List[str] = []
    failed_steps: Set[int] = set()
    flagged_terms: Set[int] = set()
    messages: Dict[str, List[str]] = {"errors": [], "warnings": []}
    for ev in events:
        data = ev.get("data") or {}
        kind = ev.get("type")
        if kind == "command" and data.get("name"):
            commands.append(str(data["name"]))
        n = data.get("n")
        if isinstance(n, int):
            if kind == "step_failure":
                failed_steps.add(n)
            elif kind == "flag_violation":
                flagged_terms.add(n)
        for key, bucket in messages.items():
            items = data.get(key)
            if isinstance(items, list):
                bucket.extend(str(m) for m in items)
    return {
        "counts": dict(counts),
        "commands": commands,
        "failed_steps": sorted(failed_steps),
        "flagged_terms": sorted(flagged_terms),
        **messages,
    }
