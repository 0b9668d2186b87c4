"""Text formats for Cayley tables and sequences.

Group file: first line ``n``, then n lines of n space-separated entries.
Sequence file: first line ``l``, then one line of l entries. Lines starting
with ``#`` and blank lines are ignored in both.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .errors import InputError
from .groups import FiniteGroup, from_cayley_table, make_builtin
from .seqcheck import GroupSequence


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _parse_ints(line: str, where: str) -> list[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise InputError(f"non-integer token in {where}: {line!r}") from None


def parse_table(text: str) -> list[list[int]]:
    lines = _content_lines(text)
    if not lines:
        raise InputError("empty Cayley table file")
    header = _parse_ints(lines[0], "header")
    if len(header) != 1 or header[0] < 1:
        raise InputError(f"first line must be a single positive order, got {lines[0]!r}")
    n = header[0]
    rows = [_parse_ints(ln, f"row {i}") for i, ln in enumerate(lines[1:])]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"expected {n} rows of {n} entries")
    return rows


def format_table(g: FiniteGroup | Sequence[Sequence[int]]) -> str:
    rows = g.table if isinstance(g, FiniteGroup) else g
    return f"{len(rows)}\n" + "".join(" ".join(map(str, r)) + "\n" for r in rows)


def parse_sequence(text: str) -> list[int]:
    lines = _content_lines(text)
    if len(lines) != 2:
        raise InputError("sequence file must have an order line and one entry line")
    header = _parse_ints(lines[0], "header")
    if len(header) != 1 or header[0] < 1:
        raise InputError(f"first line must be a single positive length, got {lines[0]!r}")
    entries = _parse_ints(lines[1], "entry line")
    if len(entries) != header[0]:
        raise InputError(f"header says {header[0]} entries, found {len(entries)}")
    return entries


def format_sequence(s: GroupSequence | Sequence[int]) -> str:
    entries = s.entries if isinstance(s, GroupSequence) else list(s)
    return f"{len(entries)}\n" + " ".join(map(str, entries)) + "\n"


def read_group(path: str | Path) -> FiniteGroup:
    path = Path(path)
    return from_cayley_table(parse_table(path.read_text()), label=path.name)


def load_group(spec_or_path: str) -> FiniteGroup:
    """A builtin spec such as ``frobenius:7:3``, or a path to a table file."""
    path = Path(spec_or_path)
    if path.is_file():
        return read_group(path)
    if ":" not in spec_or_path:
        raise InputError(f"{spec_or_path!r} is neither a group file nor a builtin spec")
    return make_builtin(spec_or_path)


def read_sequence(path: str | Path, group: FiniteGroup) -> GroupSequence:
    entries = parse_sequence(Path(path).read_text())
    return GroupSequence(group, tuple(entries))
