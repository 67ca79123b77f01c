"""
Text formats for instances and results.

family file:       "family <n>" then n lines of ascending labels (empty line = empty set)
graph file:        "bipartite <|A|> <|B|> <|E|>" then |E| lines "<a> <b>"
transversal file:  "transversal <n>" then n lines "<index> <element>"
matching output:   lines "<a> <b>"

Lines end with LF; only ASCII digits and single spaces are accepted.
Reports are "key: value" lines followed by an optional payload.
"""

import re
from typing import Iterable, List, Sequence, Tuple

from src.models import (
    Assignment,
    BipartiteGraph,
    Matching,
    ParseError,
    SetFamily,
)

_NUMBER = re.compile(r"[0-9]+")


def _lines(text: str) -> List[str]:
    lines = text.split("\n")
    # a final LF terminates the last line rather than opening a new one
    if lines and lines[-1] == "":
        lines.pop()
    return lines


def _numbers(line: str, line_no: int) -> List[int]:
    tokens = line.split(" ") if line else []
    values = []
    for token in tokens:
        if not _NUMBER.fullmatch(token):
            raise ParseError(f"expected a non-negative integer, got {token!r}", line_no)
        values.append(int(token))
    return values


def _header(lines: Sequence[str], keyword: str, arity: int) -> List[int]:
    if not lines:
        raise ParseError(f"missing '{keyword}' header", 1)
    parts = lines[0].split(" ")
    if parts[0] != keyword or len(parts) != arity + 1:
        raise ParseError(f"expected header '{keyword}' with {arity} count(s)", 1)
    values = _numbers(" ".join(parts[1:]), 1)
    if len(values) != arity:
        raise ParseError(f"expected header '{keyword}' with {arity} count(s)", 1)
    return values


def _pair_lines(lines: Sequence[str], first_line_no: int) -> List[Tuple[int, int]]:
    pairs = []
    for offset, line in enumerate(lines):
        line_no = first_line_no + offset
        values = _numbers(line, line_no)
        if len(values) != 2:
            raise ParseError("expected two integers", line_no)
        pairs.append((values[0], values[1]))
    return pairs


# ============================================================================
# Families
# ============================================================================

def parse_family(text: str) -> SetFamily:
    """
    Parse a family file.

    Raises:
        ParseError: Malformed header, non-integer token, repeated or
            descending element, or wrong number of set lines
    """
    lines = _lines(text)
    (n,) = _header(lines, "family", 1)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} set lines, found {len(lines) - 1}", len(lines) + 1)

    sets = []
    for offset, line in enumerate(lines[1:]):
        line_no = offset + 2
        members = _numbers(line, line_no)
        if len(set(members)) != len(members):
            raise ParseError("element listed twice", line_no)
        if any(a > b for a, b in zip(members, members[1:])):
            raise ParseError("elements must be listed in ascending order", line_no)
        sets.append(tuple(members))
    return SetFamily.of(sets)


def serialize_family(family: SetFamily) -> str:
    lines = [f"family {family.n}"]
    lines.extend(" ".join(str(x) for x in members) for members in family.sets)
    return "\n".join(lines) + "\n"


# ============================================================================
# Graphs
# ============================================================================

def parse_graph(text: str) -> BipartiteGraph:
    """
    Parse a bipartite graph file.

    Raises:
        ParseError: Out-of-range endpoint, duplicate edge, count mismatch or
            malformed line
    """
    lines = _lines(text)
    size_a, size_b, edge_count = _header(lines, "bipartite", 3)
    if len(lines) - 1 != edge_count:
        raise ParseError(
            f"expected {edge_count} edge lines, found {len(lines) - 1}", len(lines) + 1
        )

    seen = set()
    for offset, (a, b) in enumerate(_pair_lines(lines[1:], 2)):
        line_no = offset + 2
        if a >= size_a:
            raise ParseError(f"a={a} out of range for |A|={size_a}", line_no)
        if b >= size_b:
            raise ParseError(f"b={b} out of range for |B|={size_b}", line_no)
        if (a, b) in seen:
            raise ParseError(f"duplicate edge ({a}, {b})", line_no)
        seen.add((a, b))
    return BipartiteGraph(size_a, size_b, frozenset(seen))


def serialize_graph(graph: BipartiteGraph) -> str:
    lines = [f"bipartite {graph.size_a} {graph.size_b} {len(graph.edges)}"]
    lines.extend(f"{a} {b}" for a, b in graph.sorted_edges)
    return "\n".join(lines) + "\n"


# ============================================================================
# Transversals and matchings
# ============================================================================

def parse_assignment(text: str) -> Assignment:
    """
    Parse a transversal file; every index 0..n-1 must appear exactly once.

    Raises:
        ParseError: Malformed lines, wrong count, or missing/repeated index
    """
    lines = _lines(text)
    (n,) = _header(lines, "transversal", 1)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} choice lines, found {len(lines) - 1}", len(lines) + 1)

    choices = {}
    for offset, (index, element) in enumerate(_pair_lines(lines[1:], 2)):
        line_no = offset + 2
        if index >= n or index in choices:
            raise ParseError(f"index {index} out of range or repeated", line_no)
        choices[index] = element
    return Assignment(tuple(choices[i] for i in range(n)))


def serialize_transversal(assignment: Assignment) -> str:
    lines = [f"transversal {len(assignment)}"]
    lines.extend(f"{i} {x}" for i, x in enumerate(assignment.choices))
    return "\n".join(lines) + "\n"


def parse_matching(text: str) -> Matching:
    """
    Parse matching lines "<a> <b>".

    Raises:
        ParseError: Malformed or repeated pair
    """
    seen = set()
    for line_no, pair in enumerate(_pair_lines(_lines(text), 1), start=1):
        if pair in seen:
            raise ParseError("matching lists a pair twice", line_no)
        seen.add(pair)
    return Matching(frozenset(seen))


def serialize_matching(matching: Matching) -> str:
    return "".join(f"{a} {b}\n" for a, b in matching.sorted_pairs)


# ============================================================================
# Reports
# ============================================================================

def format_value(value) -> str:
    """Stable text for report values: floats in 12 significant digits."""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return format(value, ".12g")
    if value is None:
        return "none"
    if isinstance(value, (tuple, list)):
        return " ".join(format_value(v) for v in value) if value else "none"
    return str(value)


def format_report(fields: Iterable[Tuple[str, object]], payload: str = "") -> str:
    """Render "key: value" lines followed by an optional payload."""
    text = "".join(f"{key}: {format_value(value)}\n" for key, value in fields)
    return text + payload
