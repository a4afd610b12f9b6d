"""Structured-text file formats and the report model.

Files are line-oriented: `#` starts a comment, blank lines are skipped,
and an entry is either `key token...` on one line or a bare `key` opening
a block of integer rows. Reports render to the same shape (plus a `note`
key for diagnostics) and to a JSON tree; both directions round-trip.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .completion import all_subgroups, group_completion
from .dynamics import FunctionalGraph, validate_graph
from .errors import MonoidMismatch, ParseError
from .monoid import FiniteMonoid, submonoid, validate_monoid
from .mset import EqMap, FinMSet, validate_eqmap, validate_mset
from .replacements import FamilyZY, make_family

_KEY_RE = re.compile(r"^[a-z][a-z0-9_-]*$")
_INT_RE = re.compile(r"^-?[0-9]+$")


@dataclass(frozen=True)
class _Entry:
    key: str
    line: int
    tokens: tuple[str, ...]
    columns: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    row_lines: tuple[int, ...]
    inline: bool


def _scan_entries(text: str) -> list[_Entry]:
    entries: list[dict] = []
    for number, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        tokens: list[str] = []
        columns: list[int] = []
        cursor = 0
        for token in body.split():
            at = body.index(token, cursor)
            tokens.append(token)
            columns.append(at + 1)
            cursor = at + len(token)
        first = tokens[0]
        if _INT_RE.match(first):
            if not entries or entries[-1]["inline"]:
                raise ParseError("value row outside a block", number, columns[0])
            row = []
            for token, column in zip(tokens, columns):
                if not _INT_RE.match(token):
                    raise ParseError(f"expected an integer, got {token!r}", number, column)
                row.append(int(token))
            entries[-1]["rows"].append(tuple(row))
            entries[-1]["row_lines"].append(number)
        elif _KEY_RE.match(first):
            entries.append(
                {
                    "key": first,
                    "line": number,
                    "tokens": tokens[1:],
                    "columns": columns[1:],
                    "rows": [],
                    "row_lines": [],
                    "inline": len(tokens) > 1,
                }
            )
        else:
            raise ParseError(f"bad key {first!r}", number, columns[0])
    return [
        _Entry(
            e["key"],
            e["line"],
            tuple(e["tokens"]),
            tuple(e["columns"]),
            tuple(e["rows"]),
            tuple(e["row_lines"]),
            e["inline"],
        )
        for e in entries
    ]


def _single_int(entry: _Entry) -> int:
    if len(entry.tokens) != 1:
        raise ParseError(f"{entry.key} expects one value", entry.line)
    if not _INT_RE.match(entry.tokens[0]):
        raise ParseError(f"expected an integer, got {entry.tokens[0]!r}", entry.line, entry.columns[0])
    return int(entry.tokens[0])


def _int_list(entry: _Entry) -> tuple[int, ...]:
    values = []
    for token, column in zip(entry.tokens, entry.columns):
        if not _INT_RE.match(token):
            raise ParseError(f"expected an integer, got {token!r}", entry.line, column)
        values.append(int(token))
    return tuple(values)


def _rect_rows(entry: _Entry, count: int, width: int) -> tuple[tuple[int, ...], ...]:
    if len(entry.rows) != count:
        raise ParseError(f"{entry.key} expects {count} rows, got {len(entry.rows)}", entry.line)
    for row, line in zip(entry.rows, entry.row_lines):
        if len(row) != width:
            raise ParseError(f"row of length {len(row)}, expected {width}", line)
    return entry.rows


def _index_entries(entries: list[_Entry], allowed: set[str]) -> dict[str, _Entry]:
    seen: dict[str, _Entry] = {}
    for entry in entries:
        if entry.key not in allowed:
            raise ParseError(f"unknown key {entry.key!r}", entry.line)
        if entry.key in seen:
            raise ParseError(f"duplicate key {entry.key!r}", entry.line)
        seen[entry.key] = entry
    return seen


def _require(seen: dict[str, _Entry], key: str) -> _Entry:
    if key not in seen:
        raise ParseError(f"missing required key {key!r}")
    return seen[key]


def parse_monoid_text(text: str) -> tuple[FiniteMonoid, tuple[str, ...] | None]:
    seen = _index_entries(_scan_entries(text), {"size", "identity", "table", "names"})
    size = _single_int(_require(seen, "size"))
    identity = _single_int(_require(seen, "identity"))
    table = _rect_rows(_require(seen, "table"), size, size)
    names: tuple[str, ...] | None = None
    if "names" in seen:
        entry = seen["names"]
        if len(entry.tokens) != size:
            raise ParseError(f"names expects {size} tokens, got {len(entry.tokens)}", entry.line)
        names = entry.tokens
    return validate_monoid(table, identity), names


@dataclass(frozen=True)
class MSetSpec:
    monoid_ref: str | None
    size: int
    action: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None


def parse_mset_text(text: str) -> MSetSpec:
    seen = _index_entries(_scan_entries(text), {"monoid", "size", "action", "names"})
    ref = None
    if "monoid" in seen:
        entry = seen["monoid"]
        if len(entry.tokens) != 1:
            raise ParseError("monoid expects one path", entry.line)
        ref = entry.tokens[0]
    size = _single_int(_require(seen, "size"))
    action_entry = _require(seen, "action")
    for row, line in zip(action_entry.rows, action_entry.row_lines):
        if len(row) != size:
            raise ParseError(f"row of length {len(row)}, expected {size}", line)
    names: tuple[str, ...] | None = None
    if "names" in seen:
        entry = seen["names"]
        if len(entry.tokens) != size:
            raise ParseError(f"names expects {size} tokens, got {len(entry.tokens)}", entry.line)
        names = entry.tokens
    return MSetSpec(ref, size, action_entry.rows, names)


@dataclass(frozen=True)
class MapSpec:
    source_ref: str
    target_ref: str
    mapping: tuple[int, ...]


def parse_map_text(text: str) -> MapSpec:
    seen = _index_entries(_scan_entries(text), {"source", "target", "mapping"})
    refs = []
    for key in ("source", "target"):
        entry = _require(seen, key)
        if len(entry.tokens) != 1:
            raise ParseError(f"{key} expects one path", entry.line)
        refs.append(entry.tokens[0])
    mapping_entry = _require(seen, "mapping")
    if mapping_entry.inline:
        mapping = _int_list(mapping_entry)
    else:
        mapping = tuple(v for row in mapping_entry.rows for v in row)
    return MapSpec(refs[0], refs[1], mapping)


@dataclass(frozen=True)
class FamilySpec:
    entries: tuple[tuple[tuple[int, ...], str | tuple[tuple[int, ...], ...]], ...]


def parse_family_text(text: str) -> FamilySpec:
    entries = _scan_entries(text)
    packed: list[tuple[tuple[int, ...], str | tuple[tuple[int, ...], ...]]] = []
    current: tuple[int, ...] | None = None
    subgroups: list[tuple[int, ...]] = []
    mode: str | None = None

    def close() -> None:
        nonlocal current, subgroups, mode
        if current is None:
            return
        if mode is None:
            raise ParseError(f"submonoid {current} lists no subgroups")
        packed.append((current, "full" if mode == "full" else tuple(subgroups)))
        current, subgroups, mode = None, [], None

    for entry in entries:
        if entry.key == "submonoid":
            close()
            current = _int_list(entry)
        elif entry.key == "subgroups":
            if current is None:
                raise ParseError("subgroups before any submonoid", entry.line)
            if entry.tokens != ("full",):
                raise ParseError("subgroups expects the single token full", entry.line)
            if mode is not None:
                raise ParseError("mixed subgroup declarations", entry.line)
            mode = "full"
        elif entry.key == "subgroup":
            if current is None:
                raise ParseError("subgroup before any submonoid", entry.line)
            if mode == "full":
                raise ParseError("mixed subgroup declarations", entry.line)
            mode = "explicit"
            subgroups.append(_int_list(entry))
        else:
            raise ParseError(f"unknown key {entry.key!r}", entry.line)
    close()
    if not packed:
        raise ParseError("family lists no submonoids")
    return FamilySpec(tuple(packed))


def parse_graph_text(text: str) -> FunctionalGraph:
    seen = _index_entries(_scan_entries(text), {"size", "step"})
    size = _single_int(_require(seen, "size"))
    step_entry = _require(seen, "step")
    if step_entry.inline:
        step = _int_list(step_entry)
    else:
        step = tuple(v for row in step_entry.rows for v in row)
    if len(step) != size:
        raise ParseError(f"step expects {size} values, got {len(step)}", step_entry.line)
    return validate_graph(size, step)


def render_monoid_text(monoid: FiniteMonoid, names: tuple[str, ...] | None = None) -> str:
    lines = [f"size {monoid.size}", f"identity {monoid.identity}", "table"]
    lines.extend(" ".join(str(v) for v in row) for row in monoid.table)
    if names is not None:
        lines.append("names " + " ".join(names))
    return "\n".join(lines) + "\n"


def render_mset_text(
    mset: FinMSet, monoid_ref: str | None = None, names: tuple[str, ...] | None = None
) -> str:
    lines = []
    if monoid_ref is not None:
        lines.append(f"monoid {monoid_ref}")
    lines.extend([f"size {mset.size}", "action"])
    lines.extend(" ".join(str(v) for v in row) for row in mset.action)
    if names is not None:
        lines.append("names " + " ".join(names))
    return "\n".join(lines) + "\n"


def render_graph_text(fg: FunctionalGraph) -> str:
    step = " ".join(str(v) for v in fg.step)
    return f"size {fg.size}\nstep {step}\n"


@dataclass(frozen=True)
class Tokens:
    values: tuple[str, ...]


@dataclass(frozen=True)
class Matrix:
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Report:
    """Structured command output: ordered entries plus free-text notes."""

    command: str
    entries: tuple[tuple[str, Tokens | Matrix], ...]
    notes: tuple[str, ...] = ()


def render_report(report: Report) -> str:
    lines = [f"report {report.command}"]
    for key, value in report.entries:
        if isinstance(value, Tokens):
            if not value.values:
                raise ValueError(f"entry {key!r} has no tokens; use a matrix for empties")
            lines.append(key + " " + " ".join(value.values))
        else:
            lines.append(key)
            lines.extend(" ".join(str(v) for v in row) for row in value.rows)
    lines.extend(f"note {note}" for note in report.notes)
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> Report:
    entries = _scan_entries(text)
    if not entries or entries[0].key != "report" or len(entries[0].tokens) != 1:
        raise ParseError("report files start with: report <command>")
    command = entries[0].tokens[0]
    if entries[0].rows:
        raise ParseError("report header takes no rows", entries[0].row_lines[0])
    packed: list[tuple[str, Tokens | Matrix]] = []
    notes: list[str] = []
    for entry in entries[1:]:
        if entry.key == "note":
            notes.append(" ".join(entry.tokens))
        elif entry.inline:
            packed.append((entry.key, Tokens(entry.tokens)))
        else:
            packed.append((entry.key, Matrix(entry.rows)))
    return Report(command, tuple(packed), tuple(notes))


def render_report_tree(report: Report) -> str:
    entries = []
    for key, value in report.entries:
        if isinstance(value, Tokens):
            entries.append({"key": key, "tokens": list(value.values)})
        else:
            entries.append({"key": key, "matrix": [list(row) for row in value.rows]})
    doc = {"command": report.command, "entries": entries, "notes": list(report.notes)}
    return json.dumps(doc, indent=2) + "\n"


def parse_report_tree(text: str) -> Report:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc.msg}", exc.lineno, exc.colno) from exc
    entries: list[tuple[str, Tokens | Matrix]] = []
    for item in doc["entries"]:
        if "tokens" in item:
            entries.append((item["key"], Tokens(tuple(item["tokens"]))))
        else:
            entries.append((item["key"], Matrix(tuple(tuple(row) for row in item["matrix"]))))
    return Report(doc["command"], tuple(entries), tuple(doc.get("notes", ())))


@dataclass
class Workspace:
    """Loaded files keyed by resolved path, with cross-references chased."""

    _monoids: dict[Path, tuple[FiniteMonoid, tuple[str, ...] | None]] = field(default_factory=dict)
    _msets: dict[Path, tuple[FinMSet, tuple[str, ...] | None]] = field(default_factory=dict)
    _graphs: dict[Path, FunctionalGraph] = field(default_factory=dict)

    def _read(self, path: Path) -> str:
        try:
            return path.read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from exc

    def load_monoid(self, path: str | Path) -> tuple[FiniteMonoid, tuple[str, ...] | None]:
        resolved = Path(path).resolve()
        if resolved not in self._monoids:
            self._monoids[resolved] = parse_monoid_text(self._read(resolved))
        return self._monoids[resolved]

    def load_mset(
        self, path: str | Path, context: FiniteMonoid | None = None
    ) -> tuple[FinMSet, tuple[str, ...] | None]:
        resolved = Path(path).resolve()
        if resolved not in self._msets:
            spec = parse_mset_text(self._read(resolved))
            monoid = context
            if spec.monoid_ref is not None:
                referenced, _ = self.load_monoid(resolved.parent / spec.monoid_ref)
                if monoid is not None and (
                    referenced.table != monoid.table or referenced.identity != monoid.identity
                ):
                    raise MonoidMismatch(f"{resolved} references a different monoid")
                monoid = referenced
            if monoid is None:
                raise ParseError(f"{resolved} has no monoid reference and none was supplied")
            self._msets[resolved] = (validate_mset(monoid, spec.size, spec.action), spec.names)
        elif context is not None:
            cached = self._msets[resolved][0]
            if cached.monoid.table != context.table or cached.monoid.identity != context.identity:
                raise MonoidMismatch(f"{resolved} references a different monoid")
        return self._msets[resolved]

    def load_map(
        self, path: str | Path, context: FiniteMonoid | None = None
    ) -> tuple[EqMap, tuple[str, ...] | None, tuple[str, ...] | None]:
        resolved = Path(path).resolve()
        spec = parse_map_text(self._read(resolved))
        source, source_names = self.load_mset(resolved.parent / spec.source_ref, context)
        target, target_names = self.load_mset(resolved.parent / spec.target_ref, source.monoid)
        return validate_eqmap(source, target, spec.mapping), source_names, target_names

    def load_family(self, path: str | Path, monoid: FiniteMonoid) -> FamilyZY:
        resolved = Path(path).resolve()
        spec = parse_family_text(self._read(resolved))
        entries = []
        for elements, subgroup_spec in spec.entries:
            sub = submonoid(monoid, elements)
            if subgroup_spec == "full":
                subgroups = all_subgroups(group_completion(sub.embedded).group).subgroups
            else:
                subgroups = subgroup_spec
            entries.append((sub, subgroups))
        return make_family(monoid, entries)

    def load_graph(self, path: str | Path) -> FunctionalGraph:
        resolved = Path(path).resolve()
        if resolved not in self._graphs:
            self._graphs[resolved] = parse_graph_text(self._read(resolved))
        return self._graphs[resolved]
