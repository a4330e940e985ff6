"""The FRC text format and CSV report emission.

Grammar (UTF-8, LF): line 1 is ``FRC 1``; the next grammatical line is
``fr <n> <theta>`` or ``hg <num_vertices> <num_edges>``; then exactly n
(respectively num_edges) lines of space-separated strictly ascending
1-based ids.  Lines starting with ``#`` after line 1 are comments.
Serialisation is canonical: members sorted ascending, single spaces,
comments right after the header, trailing newline.  ``parse(serialize(d))``
is the identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .analysis import max_file_size
from .errors import ParseError
from .guards import guard_nodes, guard_subsets
from .model import FRCode, Hypergraph, validate_fr

HEADER = "FRC 1"


@dataclass(frozen=True)
class FrcDocument:
    """A parsed or to-be-serialised structure plus its metadata comments."""

    body: FRCode | Hypergraph
    comments: tuple[str, ...] = ()

    @property
    def kind(self) -> str:
        return "fr" if isinstance(self.body, FRCode) else "hg"


def serialize_frc(doc: FrcDocument) -> str:
    lines = [HEADER]
    lines.extend(f"# {c}" if c else "#" for c in doc.comments)
    if isinstance(doc.body, FRCode):
        lines.append(f"fr {doc.body.n} {doc.body.theta}")
        groups = doc.body.sorted_nodes()
    else:
        lines.append(f"hg {doc.body.num_vertices} {doc.body.num_edges}")
        groups = doc.body.sorted_edges()
    lines.extend(" ".join(str(x) for x in g) for g in groups)
    return "\n".join(lines) + "\n"


def _parse_id_line(line: str, lineno: int, allow_empty: bool) -> tuple[int, ...]:
    parts = line.split()
    if not parts:
        if allow_empty:
            return ()
        raise ParseError(lineno, "expected at least one id")
    ids = []
    for p in parts:
        if not p.isdigit():
            raise ParseError(lineno, f"not a positive integer: {p!r}")
        ids.append(int(p))
    for a, b in zip(ids, ids[1:]):
        if b <= a:
            raise ParseError(lineno, "ids must be strictly ascending")
    if ids and ids[0] < 1:
        raise ParseError(lineno, "ids are 1-based")
    return tuple(ids)


def parse_frc(text: str) -> FrcDocument:
    """Parse a document; grammar errors carry the offending line number.

    The structure is validated semantically after parsing, so an FR body
    with an orphaned packet raises the core validation error, not a parse
    error.
    """
    raw_lines = text.split("\n")
    if raw_lines and raw_lines[-1] == "":
        raw_lines.pop()
    if not raw_lines:
        raise ParseError(1, "empty document")
    if raw_lines[0] != HEADER:
        raise ParseError(1, f"expected {HEADER!r}")

    comments: list[str] = []
    content: list[tuple[int, str]] = []
    for lineno, line in enumerate(raw_lines[1:], start=2):
        if line.startswith("#"):
            comments.append(line[1:].strip())
        else:
            content.append((lineno, line))
    if not content:
        raise ParseError(len(raw_lines), "missing kind line")

    kind_lineno, kind_line = content[0]
    parts = kind_line.split()
    if len(parts) != 3 or parts[0] not in ("fr", "hg"):
        raise ParseError(kind_lineno, "expected 'fr <n> <theta>' or 'hg <vertices> <edges>'")
    if not (parts[1].isdigit() and parts[2].isdigit()):
        raise ParseError(kind_lineno, "counts must be positive integers")
    kind, first, second = parts[0], int(parts[1]), int(parts[2])

    expected = first if kind == "fr" else second
    body_lines = content[1:]
    if len(body_lines) != expected:
        raise ParseError(
            kind_lineno, f"expected {expected} content lines, found {len(body_lines)}"
        )
    groups = [
        _parse_id_line(line, lineno, allow_empty=(kind == "hg"))
        for lineno, line in body_lines
    ]

    if kind == "fr":
        body: FRCode | Hypergraph = validate_fr(groups, theta=second)
    else:
        body = Hypergraph(num_vertices=first, edges=tuple(frozenset(g) for g in groups))
    return FrcDocument(body=body, comments=tuple(comments))


def emit_filesize_csv(
    code: FRCode, ks: Sequence[int] | None = None, *, force: bool = False
) -> str:
    """File-size table as CSV.

    Columns: k, the exact guaranteed file size M(k), the universally good
    lower bound (sum of the k smallest capacities minus C(k,2), guaranteed
    when the code is linear), and the upper bound (sum of the k largest
    capacities).  Exact integers, LF line endings, deterministic.
    """
    if ks is None:
        ks = range(1, code.n + 1)
    guard_nodes(code.n, force)
    guard_subsets(sum(comb(code.n, k) for k in ks), force)
    ascending = sorted(code.alpha_vec)
    descending = sorted(code.alpha_vec, reverse=True)
    lines = ["k,M_k,ug_lower_bound,upper_bound"]
    for k in ks:
        mk = max_file_size(code, k, force=True)
        lower = sum(ascending[:k]) - comb(k, 2)
        upper = sum(descending[:k])
        lines.append(f"{k},{mk},{lower},{upper}")
    return "\n".join(lines) + "\n"
