"""Classification reports with byte-stable text, JSON and CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

KINDS = (
    "roots",
    "table1",
    "table2",
    "table3",
    "special",
    "primitive",
    "crgraphs",
    "structures",
    "check",
)


@dataclass(frozen=True)
class Report:
    kind: str
    rows: tuple[dict, ...]
    provenance: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown report kind {self.kind}")

    def sorted(self) -> "Report":
        return Report(self.kind, tuple(sorted(self.rows, key=_row_key)), self.provenance)

    def to_json(self) -> str:
        data = {
            "kind": self.kind,
            "rows": [dict(sorted(r.items())) for r in self.sorted().rows],
            "provenance": list(self.provenance),
        }
        return json.dumps(data, indent=2, ensure_ascii=False, sort_keys=False) + "\n"

    @staticmethod
    def from_json(text: str) -> "Report":
        data = json.loads(text)
        return Report(
            data["kind"],
            tuple(dict(r) for r in data["rows"]),
            tuple(data.get("provenance", ())),
        )

    def to_csv(self) -> str:
        rows = self.sorted().rows
        keys: list[str] = []
        for r in rows:
            for k in r:
                if k not in keys:
                    keys.append(k)
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: r.get(k, "") for k in keys})
        return buf.getvalue()

    def to_text(self) -> str:
        rows = self.sorted().rows
        if not rows:
            return f"[{self.kind}] empty\n"
        keys: list[str] = []
        for r in rows:
            for k in r:
                if k not in keys:
                    keys.append(k)
        widths = {k: max(len(k), max(len(str(r.get(k, ""))) for r in rows)) for k in keys}
        lines = [f"[{self.kind}]"]
        lines.append("  ".join(k.ljust(widths[k]) for k in keys))
        lines.append("  ".join("-" * widths[k] for k in keys))
        for r in rows:
            lines.append("  ".join(str(r.get(k, "")).ljust(widths[k]) for k in keys))
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt}")

    def row_multiset(self) -> dict:
        out: dict = {}
        for r in self.rows:
            key = tuple(sorted((k, str(v)) for k, v in r.items()))
            out[key] = out.get(key, 0) + 1
        return out


_WHAT_ORDER = {"root": 0, "simple_root": 1, "highest_root": 2, "cartan_row": 3}


def _row_key(row: dict):
    return (
        str(row.get("type", "")),
        int(row.get("rank", 0) or 0),
        str(row.get("theta_canon", row.get("theta", ""))),
        _WHAT_ORDER.get(row.get("what"), 0),
        int(row.get("index", 0) or 0),
        tuple(sorted((k, str(v)) for k, v in row.items())),
    )
