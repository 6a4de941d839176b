"""Reading and writing Cayley tables in the plain text format.

Line 1 holds the order n; each of the next n lines holds n whitespace
separated indices in 0..n-1, row i giving the products of element i with
every element.  No identity position is assumed; it is detected during
validation.  The writer is canonical, so export -> ingest -> export
reproduces the file byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .group import FULL_CHECK_LIMIT, FiniteGroup, from_cayley_table


def format_cayley(group: FiniteGroup) -> str:
    rows = "\n".join(" ".join(str(int(v)) for v in row) for row in group.table)
    return f"{group.size}\n{rows}\n"


def parse_cayley(text: str, label: str = "ingested") -> FiniteGroup:
    """Parse and fully validate a Cayley table from text."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty input")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in table: {exc}") from exc
    n = values[0]
    if n < 1:
        raise ParseError(f"declared order {n} must be positive")
    if n > FULL_CHECK_LIMIT:
        raise ParseError(f"declared order {n} exceeds the ingestion limit {FULL_CHECK_LIMIT}")
    body = values[1:]
    if len(body) != n * n:
        raise ParseError(f"declared order {n} needs {n * n} entries, found {len(body)}")
    table = [body[i * n : (i + 1) * n] for i in range(n)]
    return from_cayley_table(table, label, check_level="full")


def ingest(path: str | Path, label: str | None = None) -> FiniteGroup:
    """Load and validate a Cayley-table file."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_cayley(text, label if label is not None else str(path))


def export(group: FiniteGroup, path: str | Path) -> None:
    """Write a group's table in the canonical text format."""
    Path(path).write_text(format_cayley(group))
