"""Append-only JSONL catalog of certified polytopes."""

from __future__ import annotations

import json
from dataclasses import dataclass
from datetime import datetime, timezone

from . import __version__
from .errors import LatfreeError
from .verify import Certificate, certificate_to_json, verify_certificate_json

SCHEMA_VERSION = 1


def make_entry(cert: Certificate) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "d_source": len(cert.source),
        "tuple": list(cert.source),
        "certificate": certificate_to_json(cert),
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "tool_version": __version__,
    }


def append_entries(path: str, entries: list[dict]) -> None:
    """Append entries sorted by (d_source, tuple); one JSON object per line."""
    entries = sorted(entries, key=lambda e: (e["d_source"], e["tuple"]))
    with open(path, "a", encoding="utf-8") as fh:
        for e in entries:
            fh.write(json.dumps(e) + "\n")


def read_entries(path: str) -> list[tuple[int, dict]]:
    """(line number, entry) pairs; raises ValueError on malformed lines."""
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                out.append((lineno, json.loads(line)))
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {lineno}: not valid JSON ({exc})") from exc
    return out


@dataclass
class CatalogReport:
    total: int
    ok: int
    first_failure: tuple[int, str] | None  # (line number, reason)

    @property
    def passed(self) -> bool:
        return self.first_failure is None


def verify_catalog(path: str) -> CatalogReport:
    """Re-verify every entry from scratch (witness arithmetic and unit-sum claims)."""
    try:
        entries = read_entries(path)
    except ValueError as exc:
        return CatalogReport(total=0, ok=0, first_failure=(0, str(exc)))
    ok = 0
    for lineno, entry in entries:
        try:
            if entry.get("schema_version") != SCHEMA_VERSION:
                raise ValueError(f"unsupported schema_version {entry.get('schema_version')}")
            cert = entry["certificate"]
            if entry.get("tuple") != cert.get("a"):
                raise ValueError("entry tuple does not match certificate tuple")
            if entry.get("d_source") != len(entry["tuple"]):
                raise ValueError("d_source does not match tuple length")
            verify_certificate_json(cert)
            ok += 1
        except (LatfreeError, ValueError, KeyError, TypeError) as exc:
            return CatalogReport(total=len(entries), ok=ok, first_failure=(lineno, str(exc)))
    return CatalogReport(total=len(entries), ok=ok, first_failure=None)
