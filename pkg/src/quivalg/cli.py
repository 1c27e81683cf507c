"""Command line interface.

Four subcommands, all reading the text quiver format:

* ``analyze``   full graph and algebra report, text or JSON;
* ``kronecker`` emit the Kronecker square in the same text format;
* ``hilbert``   truncated matrix Hilbert series;
* ``verify``    machine-check the face algebra presentation and the
  graph/algebra transfer rules on the given quiver.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .document import build_report, render_matrix_blocks, to_json, to_text
from .face import FaceElement, face_basis, face_multiply, face_unit, phi, verify_presentation
from .graph import (
    classify_cycles,
    is_path_reversible,
    is_pairwise_strongly_connected_definitional,
    is_strongly_connected,
)
from .intmatrix import kron, power
from .kronecker import kronecker_square
from .oracle import (
    CAP_EXCEEDED,
    oracle_dimension,
    oracle_face_dimension_both_readings,
    oracle_max_chain,
    oracle_path_reversible,
)
from .quiver import Quiver, adjacency_matrix
from .quiverfile import QuiverFileError, emit_quiver_file, parse_quiver_file
from .report import analyze_face_algebra, analyze_path_algebra, face_dimension
from . import report as report_module


def _load(path: str) -> Quiver:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_quiver_file(handle.read())


def cmd_analyze(q: Quiver, degree: int, fmt: str, out) -> int:
    doc = build_report(q, degree)
    out.write(to_json(doc) if fmt == "json" else to_text(doc))
    return 0


def cmd_kronecker(q: Quiver, out) -> int:
    out.write(emit_quiver_file(kronecker_square(q).square))
    return 0


def cmd_hilbert(q: Quiver, degree: int, face: bool, out) -> int:
    series = (
        report_module.face_hilbert_series(q, degree)
        if face
        else report_module.hilbert_series(q, degree)
    )
    blocks = render_matrix_blocks(
        [[list(r) for r in m.rows] for m in series.coefficients]
    )
    out.write("\n".join(blocks) + "\n")
    return 0


class _Verify:
    """Accumulates [ok]/[FAIL] lines and informational notes."""

    def __init__(self, out):
        self.out = out
        self.failed = False
        self.notes = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        tag = "[ok]" if ok else "[FAIL]"
        if not ok:
            self.failed = True
        suffix = f"  ({detail})" if detail else ""
        self.out.write(f"{tag} {name}{suffix}\n")

    def note(self, text: str) -> None:
        self.notes += 1
        self.out.write(f"note: {text}\n")


def cmd_verify(q: Quiver, degree: int, samples: int, out) -> int:
    v = _Verify(out)
    presentation = verify_presentation(q, degree)
    for check in presentation.checks:
        v.check(
            f"presentation/{check.name}",
            check.ok,
            check.counterexample if not check.ok else f"{check.instances} instances",
        )

    square = kronecker_square(q).square
    base_cycles = classify_cycles(q)
    square_cycles = classify_cycles(square)
    base_report = analyze_path_algebra(q)
    face_report = analyze_face_algebra(q)

    c = adjacency_matrix(q)
    ok_power = True
    for k in range(7):
        ck = power(c, k)
        if power(kron(c, c), k) != kron(ck, ck):
            ok_power = False
            break
    v.check("square adjacency powers factor as tensor squares (k <= 6)", ok_power)

    v.check(
        "acyclicity transfers to the square",
        base_cycles.has_cycle == square_cycles.has_cycle,
    )
    v.check(
        "exclusive condition transfers to the square",
        base_cycles.exclusive_condition == square_cycles.exclusive_condition,
    )
    if base_cycles.exclusive_condition and base_cycles.has_cycle:
        expected = 2 * base_cycles.max_chain_length - 1
        v.check(
            "longest chain of cycles doubles minus one on the square",
            square_cycles.max_chain_length == expected,
            f"{base_cycles.max_chain_length} -> {square_cycles.max_chain_length}",
        )
        oracle_chain = oracle_max_chain(q)
        v.check(
            "chain length matches cycle-enumeration oracle",
            oracle_chain == base_cycles.max_chain_length,
            f"oracle {oracle_chain}",
        )
        oracle_square_chain = oracle_max_chain(square)
        v.check(
            "square chain length matches cycle-enumeration oracle",
            oracle_square_chain == expected,
            f"oracle {oracle_square_chain}",
        )
    v.check(
        "source/sink cycles transfer to the square",
        base_cycles.has_source_cycle == square_cycles.has_source_cycle
        and base_cycles.has_sink_cycle == square_cycles.has_sink_cycle,
    )
    v.check(
        "path reversibility transfers to the square",
        is_path_reversible(q) == is_path_reversible(square),
    )

    square_sc = is_strongly_connected(square)
    base_sc = is_strongly_connected(q)
    definitional = is_pairwise_strongly_connected_definitional(q)
    if square_sc and not definitional:
        v.check(
            "square strong connectivity implies same-length pair connectivity",
            False,
        )
    else:
        v.check(
            "square strong connectivity implies same-length pair connectivity", True
        )
        if definitional and not square_sc:
            v.note(
                "same-length pair connectivity holds but the square is not "
                "strongly connected"
            )
    if square_sc and not base_sc:
        v.check("square strong connectivity implies strong connectivity", False)
    else:
        v.check("square strong connectivity implies strong connectivity", True)
        if base_sc and base_cycles.has_cycle and not square_sc:
            v.note(
                "Q is strongly connected with a cycle but the square is not "
                "strongly connected; the face algebra is reported not prime"
            )

    if not base_cycles.has_cycle:
        dim = base_report.dimension
        oracle_dim = oracle_dimension(q)
        v.check(
            "dimension matches the path enumeration oracle",
            oracle_dim == dim,
            f"dim kQ = {dim}, oracle {oracle_dim}",
        )
        both = oracle_face_dimension_both_readings(q)
        v.check(
            "face dimension equals the squared-path-count reading",
            both[1] == face_report.dimension and face_dimension(q) == both[1],
            f"dim H(Q) = {face_report.dimension}, readings {both}",
        )
        if both[0] != both[1]:
            v.note(
                "the entrywise-squared reading would give "
                f"{both[0]}, not {both[1]}"
            )
    v.check(
        "path reversibility matches the enumeration oracle (length <= 4)",
        oracle_path_reversible(q, 4) == is_path_reversible(q),
    )

    rng = random.Random(0)
    flat = [b for k in range(degree + 1) for b in face_basis(q, k)]
    unit = face_unit(q)
    sampled_ok = True
    for _ in range(samples):
        def pick() -> FaceElement:
            chosen = rng.sample(flat, k=min(len(flat), rng.randint(1, 3)))
            return FaceElement(
                q, [(b, Fraction(rng.randint(-3, 3))) for b in chosen]
            )

        x, y, z = pick(), pick(), pick()
        if face_multiply(face_multiply(x, y), z) != face_multiply(x, face_multiply(y, z)):
            sampled_ok = False
        if face_multiply(unit, x) != x or face_multiply(x, unit) != x:
            sampled_ok = False
        if phi(face_multiply(x, y)) != phi(x) * phi(y):
            sampled_ok = False
    v.check(
        f"random element identities ({samples} samples, coefficients in [-3, 3])",
        sampled_ok,
    )

    if v.failed:
        out.write("FAIL\n")
        return 1
    if v.notes:
        plural = "note" if v.notes == 1 else "notes"
        out.write(f"PASS ({v.notes} {plural})\n")
    else:
        out.write("PASS\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivalg",
        description="Exact path-algebra and face-algebra analysis of finite quivers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full graph and algebra report")
    analyze.add_argument("file")
    analyze.add_argument("--degree", type=int, default=5,
                         help="Hilbert series truncation degree (default 5)")
    analyze.add_argument("--format", choices=["text", "json"], default="text")

    kronecker = sub.add_parser("kronecker", help="emit the Kronecker square")
    kronecker.add_argument("file")

    hilbert = sub.add_parser("hilbert", help="truncated matrix Hilbert series")
    hilbert.add_argument("file")
    hilbert.add_argument("--degree", type=int, default=5)
    hilbert.add_argument("--face", action="store_true",
                         help="series of the face algebra instead of the path algebra")

    verify = sub.add_parser(
        "verify", help="machine-check the face algebra presentation"
    )
    verify.add_argument("file")
    verify.add_argument("--degree", type=int, default=3,
                        help="bound for the exhaustive degree checks (default 3)")
    verify.add_argument("--samples", type=int, default=25,
                        help="random element identities to sample (default 25)")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        q = _load(args.file)
    except QuiverFileError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return 2

    out = sys.stdout
    if args.command == "analyze":
        if args.degree < 0:
            print("error: --degree must be non-negative", file=sys.stderr)
            return 2
        return cmd_analyze(q, args.degree, args.format, out)
    if args.command == "kronecker":
        return cmd_kronecker(q, out)
    if args.command == "hilbert":
        if args.degree < 0:
            print("error: --degree must be non-negative", file=sys.stderr)
            return 2
        return cmd_hilbert(q, args.degree, args.face, out)
    if args.command == "verify":
        if args.degree < 1:
            print("error: --degree must be at least 1", file=sys.stderr)
            return 2
        if args.samples < 0:
            print("error: --samples must be non-negative", file=sys.stderr)
            return 2
        return cmd_verify(q, args.degree, args.samples, out)
    raise AssertionError(f"unhandled command {args.command!r}")


def entry() -> None:
    raise SystemExit(main())
