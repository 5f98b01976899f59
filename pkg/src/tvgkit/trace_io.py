"""Reading and writing dated-edge trace files.

Trace format: UTF-8 CSV with LF line endings and header
``u,v,start[,end][,label]``.  Timestamps are raw integer ticks; a missing
end column makes a record a punctual contact ``[start, start+1)``.  Node
names are arbitrary text, interned to dense integer ids in order of first
appearance.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterable, Optional, TextIO, Union

from .core import Lifetime, TimeVaryingGraph, build_tvg

HEADERS = (
    ["u", "v", "start"],
    ["u", "v", "start", "end"],
    ["u", "v", "start", "end", "label"],
)


class TraceFormatError(ValueError):
    """Malformed trace input; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class ParseResult:
    graph: TimeVaryingGraph
    names: list[str]
    skipped: list[tuple[int, str]] = field(default_factory=list)

    @property
    def name_to_id(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}


def parse_trace(
    source: Union[str, TextIO, Iterable[str]],
    directed: bool = False,
    strict: bool = True,
) -> ParseResult:
    """Parse a trace into a TVG plus the node name table.

    ``strict`` aborts on the first malformed record; otherwise bad records
    are skipped and reported in ``ParseResult.skipped``.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    reader = csv.reader(source)
    header = None
    names: list[str] = []
    ids: dict[str, int] = {}
    events: list[tuple] = []
    skipped: list[tuple[int, str]] = []

    def bad(line_no: int, msg: str):
        if strict:
            raise TraceFormatError(line_no, msg)
        skipped.append((line_no, msg))

    for line_no, row in enumerate(reader, start=1):
        if not row or all(not c.strip() for c in row):
            continue
        row = [c.strip() for c in row]
        if header is None:
            if row not in [list(h) for h in HEADERS]:
                raise TraceFormatError(
                    line_no, f"expected header u,v,start[,end][,label], got {','.join(row)}"
                )
            header = row
            continue
        if len(row) < 3 or len(row) > 5:
            bad(line_no, f"expected 3-5 fields, got {len(row)}")
            continue
        u_name, v_name = row[0], row[1]
        label = row[4] if len(row) == 5 and row[4] else None
        try:
            start = int(row[2])
        except ValueError:
            bad(line_no, f"non-integer start {row[2]!r}")
            continue
        if len(row) >= 4 and row[3]:
            try:
                end = int(row[3])
            except ValueError:
                bad(line_no, f"non-integer end {row[3]!r}")
                continue
        else:
            end = start + 1  # punctual contact
        if start >= end:
            bad(line_no, f"inverted interval [{start},{end})")
            continue
        if u_name == v_name:
            bad(line_no, f"self-loop on {u_name!r}")
            continue
        if not u_name or not v_name:
            bad(line_no, "empty node name")
            continue
        for name in (u_name, v_name):
            if name not in ids:
                ids[name] = len(names)
                names.append(name)
        events.append((ids[u_name], ids[v_name], start, end, label))

    if header is None:
        raise TraceFormatError(0, "empty input")
    if not events:
        raise TraceFormatError(0, "no valid records")
    lifetime = Lifetime(min(e[2] for e in events), max(e[3] for e in events))
    graph = build_tvg(len(names), directed, lifetime, events)
    return ParseResult(graph, names, skipped)


def write_trace(
    g: TimeVaryingGraph, names: Optional[list[str]] = None, out: Optional[TextIO] = None
) -> str:
    """Canonical trace text for ``g``: one row per edge presence interval,
    sorted; parses back to an equal graph (given every node has an edge
    and the lifetime is the hull of the intervals)."""
    if names is None:
        names = [str(i) for i in range(g.n)]
    has_labels = any(e.label for e in g.edges)
    rows = []
    for e, p in zip(g.edges, g.presence):
        for a, b in p.intervals:
            row = [names[e.u], names[e.v], str(a), str(b)]
            if has_labels:
                row.append(e.label or "")
            rows.append(row)
    rows.sort(key=lambda r: (r[0], r[1], int(r[2]), int(r[3])))
    header = "u,v,start,end" + (",label" if has_labels else "")
    text = header + "\n" + "".join(",".join(r) + "\n" for r in rows)
    if out is not None:
        out.write(text)
    return text
