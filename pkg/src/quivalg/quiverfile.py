"""Plain-text quiver files.

The format is line based::

    # any comment
    vertices: a b c
    arrow p: a -> b
    arrow q: b -> c

Blank lines are ignored, a line whose first non-space character is ``#`` is
a comment, exactly one ``vertices:`` line must appear and must precede every
arrow line.  Labels and arrow ids are free-form tokens without whitespace
and without any of ``:``, ``-``, ``>``; parenthesised composite labels like
``(a,b)`` are fine, which is what lets a Kronecker square round-trip
through the format.
"""

from __future__ import annotations

import re

from .quiver import Quiver, validate

_ARROW_RE = re.compile(r"^arrow\s+(\S+)\s*:\s*(\S+)\s*->\s*(\S+)$")
_FORBIDDEN = set(":->")


class QuiverFileError(ValueError):
    """A parse or validation error, carrying the 1-based line number (0 when
    the error is not tied to one line)."""

    def __init__(self, line: int, message: str):
        self.line = line
        self.message = message
        super().__init__(f"line {line}: {message}" if line else message)


def _valid_token(token: str) -> bool:
    return bool(token) and not any(c in _FORBIDDEN for c in token)


def parse_quiver_file(text: str) -> Quiver:
    """Parse the text format into a valid quiver, or raise :class:`QuiverFileError`."""
    vertices: list[str] | None = None
    arrows: list[tuple[str, str, str]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise QuiverFileError(number, "duplicate 'vertices:' line")
            if arrows:
                raise QuiverFileError(
                    number, "'vertices:' line must precede arrow lines"
                )
            tokens = line[len("vertices:"):].split()
            if not tokens:
                raise QuiverFileError(number, "expected 'vertices: <label> ...'")
            for t in tokens:
                if not _valid_token(t):
                    raise QuiverFileError(
                        number, f"invalid vertex label {t!r}"
                    )
            vertices = tokens
            continue
        if line.startswith("arrow"):
            match = _ARROW_RE.match(line)
            if not match:
                raise QuiverFileError(
                    number, "expected 'arrow <id>: <src> -> <tgt>'"
                )
            name, source, target = match.groups()
            for t in (name, source, target):
                if not _valid_token(t):
                    raise QuiverFileError(
                        number, "expected 'arrow <id>: <src> -> <tgt>'"
                    )
            if vertices is None:
                raise QuiverFileError(
                    number, "'vertices:' line must precede arrow lines"
                )
            arrows.append((name, source, target))
            continue
        raise QuiverFileError(
            number, "expected 'vertices: <label> ...' or 'arrow <id>: <src> -> <tgt>'"
        )
    if vertices is None:
        raise QuiverFileError(0, "missing 'vertices:' line")
    q = Quiver(vertices, arrows)
    violations = validate(q)
    if violations:
        raise QuiverFileError(0, "; ".join(str(v) for v in violations))
    return q


def emit_quiver_file(q: Quiver) -> str:
    """Serialise a quiver so that parsing gives it back unchanged."""
    for v in q.vertices:
        if not _valid_token(v):
            raise ValueError(f"vertex label {v!r} cannot be written to a quiver file")
    lines = ["vertices: " + " ".join(q.vertices)]
    for a in q.arrows:
        for t in (a.name, a.source, a.target):
            if not _valid_token(t):
                raise ValueError(f"token {t!r} cannot be written to a quiver file")
        lines.append(f"arrow {a.name}: {a.source} -> {a.target}")
    return "\n".join(lines) + "\n"
