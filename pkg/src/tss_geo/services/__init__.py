"""File-backed services: artifact/repro storage and the case journal."""

from tss_geo.services.journal import CaseJournal
from tss_geo.services.storage import ArtifactStore

__all__ = ["ArtifactStore", "CaseJournal"]
