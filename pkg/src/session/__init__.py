from .manager import JournalEvent, RunJournal

__all__ = ["JournalEvent", "RunJournal"]
