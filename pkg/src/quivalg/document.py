"""Report documents: one dictionary shape rendered as JSON or text.

The JSON rendering is canonical: keys sorted, two-space indent, trailing
newline, integers and strings only (the infinite sentinel serialises as the
string ``"infinite"``), so parsing a report and re-serialising it gives the
identical bytes back.
"""

from __future__ import annotations

import json
from typing import Any, Union

from .graph import (
    classify_cycles,
    is_connected,
    is_pairwise_strongly_connected,
    is_path_reversible,
    is_strongly_connected,
)
from .infinity import Extent, Infinite
from .intmatrix import IntMatrix
from .kronecker import kronecker_square
from .quiver import Quiver
from .report import (
    AlgebraReport,
    analyze_face_algebra,
    analyze_path_algebra,
    face_hilbert_series,
    hilbert_series,
)

JsonExtent = Union[int, str]


def extent_json(value: Extent) -> JsonExtent:
    return "infinite" if isinstance(value, Infinite) else value


def matrix_rows(m: IntMatrix) -> list[list[int]]:
    return [list(r) for r in m.rows]


def graph_block(q: Quiver) -> dict[str, Any]:
    cycles = classify_cycles(q)
    return {
        "vertex_count": len(q.vertices),
        "arrow_count": len(q.arrows),
        "acyclic": not cycles.has_cycle,
        "connected": is_connected(q),
        "strongly_connected": is_strongly_connected(q),
        "pairwise_strongly_connected": is_pairwise_strongly_connected(q),
        "path_reversible": is_path_reversible(q),
        "exclusive_condition": cycles.exclusive_condition,
        "has_source_cycle": cycles.has_source_cycle,
        "has_sink_cycle": cycles.has_sink_cycle,
        "all_cycles_isolated": cycles.all_cycles_isolated,
        "max_chain_length": extent_json(cycles.max_chain_length),
    }


def algebra_block(report: AlgebraReport) -> dict[str, Any]:
    return {
        "algebra": report.algebra,
        "finite_dimensional": report.finite_dimensional,
        "dimension": extent_json(report.dimension),
        "gk_dimension": extent_json(report.gk_dimension),
        "noetherian": report.noetherian,
        "noetherian_left": report.noetherian_left,
        "noetherian_right": report.noetherian_right,
        "prime": report.prime,
        "semiprime": report.semiprime,
        "global_dimension": report.global_dimension,
        "hereditary": report.hereditary,
        "koszul": report.koszul,
    }


def build_report(q: Quiver, degree: int = 5) -> dict[str, Any]:
    """The full analysis document for one quiver."""
    square = kronecker_square(q).square
    return {
        "format": "quivalg-report/1",
        "quiver": graph_block(q),
        "kronecker_square": graph_block(square),
        "path_algebra": algebra_block(analyze_path_algebra(q)),
        "face_algebra": algebra_block(analyze_face_algebra(q)),
        "hilbert": {
            "degree": degree,
            "path_algebra": [
                matrix_rows(m) for m in hilbert_series(q, degree).coefficients
            ],
            "face_algebra": [
                matrix_rows(m) for m in face_hilbert_series(q, degree).coefficients
            ],
        },
    }


def to_json(doc: dict[str, Any]) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_matrix_blocks(coefficients: list[list[list[int]]]) -> list[str]:
    """Matrix series as text: a ``-- k=<deg>`` header, then one row per line."""
    lines: list[str] = []
    for k, rows in enumerate(coefficients):
        lines.append(f"-- k={k}")
        for row in rows:
            lines.append(" ".join(str(x) for x in row))
    return lines


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


_GRAPH_ROWS: list[tuple[str, str]] = [
    ("vertices", "vertex_count"),
    ("arrows", "arrow_count"),
    ("acyclic", "acyclic"),
    ("connected", "connected"),
    ("strongly connected", "strongly_connected"),
    ("pairwise strongly connected", "pairwise_strongly_connected"),
    ("path reversible", "path_reversible"),
    ("exclusive condition", "exclusive_condition"),
    ("has source cycle", "has_source_cycle"),
    ("has sink cycle", "has_sink_cycle"),
    ("all cycles isolated", "all_cycles_isolated"),
    ("max chain length", "max_chain_length"),
]


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return _yes_no(value)
    return str(value)


def _algebra_lines(title: str, dim_label: str, block: dict[str, Any]) -> list[str]:
    noeth = (
        f"{_yes_no(block['noetherian'])} "
        f"(left {_yes_no(block['noetherian_left'])}, "
        f"right {_yes_no(block['noetherian_right'])})"
    )
    return [
        title,
        f"  {dim_label} = {block['dimension']}",
        f"  finite dimensional   {_yes_no(block['finite_dimensional'])}",
        f"  GK dimension         {block['gk_dimension']}",
        f"  noetherian           {noeth}",
        f"  prime                {_yes_no(block['prime'])}",
        f"  semiprime            {_yes_no(block['semiprime'])}",
        f"  global dimension     {block['global_dimension']}",
        f"  hereditary           {_yes_no(block['hereditary'])}",
        f"  koszul               {_yes_no(block['koszul'])}",
    ]


def to_text(doc: dict[str, Any]) -> str:
    """Human-oriented rendering with the same values as the JSON form."""
    quiver = doc["quiver"]
    square = doc["kronecker_square"]
    lines = [
        f"quiver: {quiver['vertex_count']} vertices, {quiver['arrow_count']} arrows",
        "",
        f"{'graph properties':<31}{'Q':<12}Q^",
    ]
    for label, key in _GRAPH_ROWS:
        lines.append(f"  {label:<29}{_cell(quiver[key]):<12}{_cell(square[key])}")
    lines.append("")
    lines.extend(_algebra_lines("path algebra kQ", "dim kQ", doc["path_algebra"]))
    lines.append("")
    lines.extend(_algebra_lines("face algebra H(Q)", "dim H(Q)", doc["face_algebra"]))
    hilbert = doc["hilbert"]
    lines.append("")
    lines.append(f"hilbert series of kQ through degree {hilbert['degree']}")
    lines.extend(render_matrix_blocks(hilbert["path_algebra"]))
    lines.append("")
    lines.append(f"hilbert series of H(Q) through degree {hilbert['degree']}")
    lines.extend(render_matrix_blocks(hilbert["face_algebra"]))
    return "\n".join(lines) + "\n"
