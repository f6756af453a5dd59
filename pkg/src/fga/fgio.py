"""The ``.fg`` text format and DOT export."""

from __future__ import annotations

from pathlib import Path

from .core import FlowGraph
from .errors import FormatError, ValidationError

_HEADER = ("fg", "v", "s", "t")


def _int(tok: str, line: int) -> int:
    if not tok.isdigit():
        raise FormatError(f"expected a nonnegative decimal integer, got {tok!r}", line)
    return int(tok)


def parse_fg(text: str) -> FlowGraph:
    """Parse ``.fg`` text; edges may appear in any order and keep their input order as ids."""
    header: list[int] = []
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        toks = body.split()
        if len(header) < 4:
            want = _HEADER[len(header)]
            if toks[0] != want or len(toks) != 2:
                raise FormatError(f"expected '{want} <int>'", lineno)
            value = _int(toks[1], lineno)
            if want == "fg" and value != 1:
                raise FormatError(f"unsupported format version {value}", lineno)
            if want == "v" and value < 1:
                raise FormatError("a flow graph has at least one vertex", lineno)
            if want in ("s", "t") and value >= header[1]:
                raise FormatError(f"{want} index {value} out of range", lineno)
            header.append(value)
            continue
        if toks[0] != "e" or len(toks) != 3:
            raise FormatError("expected 'e <tail> <head>'", lineno)
        u, v = _int(toks[1], lineno), _int(toks[2], lineno)
        if u >= header[1] or v >= header[1]:
            raise FormatError(f"edge ({u}, {v}) references a vertex outside 0..{header[1] - 1}", lineno)
        edges.append((u, v))
    if len(header) < 4:
        raise FormatError(f"missing '{_HEADER[len(header)]}' header line")
    _, n, s, t = header
    try:
        return FlowGraph(n, tuple(edges), s, t)
    except ValidationError as exc:
        raise FormatError(str(exc)) from exc


def write_fg(a: FlowGraph) -> str:
    lines = ["fg 1", f"v {a.vertex_count}", f"s {a.source}", f"t {a.target}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(a.edges))
    return "\n".join(lines) + "\n"


def read_fg(path: str | Path) -> FlowGraph:
    return parse_fg(Path(path).read_text(encoding="ascii"))


def save_fg(a: FlowGraph, path: str | Path) -> None:
    Path(path).write_text(write_fg(a), encoding="ascii", newline="\n")


def to_dot(a: FlowGraph, name: str = "A") -> str:
    out = [f"digraph {name} {{"]
    for v in range(a.vertex_count):
        if v == a.source == a.target:
            out.append(f'  {v} [label="s=t"];')
        elif v == a.source:
            out.append(f'  {v} [label="s"];')
        elif v == a.target:
            out.append(f'  {v} [label="t"];')
        else:
            out.append(f"  {v};")
    out.extend(f"  {u} -> {v};" for u, v in sorted(a.edges))
    out.append("}")
    return "\n".join(out) + "\n"
