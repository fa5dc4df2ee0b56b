"""Command-line front end.

Subcommands:

* ``characters`` -- branch-curve characters of a surface family member
  (or custom intersection numbers), with the identity checks.
* ``pillow`` -- build a pillow configuration, optionally verify it and
  export it as JSON or DOT.
* ``table`` -- the singularity-distribution table with conservation checks.
* ``verify`` -- sweep the full property suite over ranges of (a, b).

Exit codes: 0 all checks passed, 1 at least one check failed, 2 invalid
parameters or usage, 3 file I/O failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import degeneration, pillow, surfaces
from .checks import Check, Report
from .errors import (
    InvalidParameter,
    NegativeCharacter,
    NonIntegral,
    NonIntegralNodeCount,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass
class RunReport:
    """Everything one invocation produced, for rendering and exit-code logic."""

    command: str
    parameters: dict
    payload: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    artifacts: list[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return EXIT_OK if self.all_passed else EXIT_CHECK_FAILED

    def as_dict(self) -> dict:
        doc = {"command": self.command, "parameters": self.parameters}
        doc.update(self.payload)
        doc["checks"] = [c.as_dict() for c in self.checks]
        doc["all_passed"] = self.all_passed
        doc["artifacts"] = self.artifacts
        doc["exit_code"] = self.exit_code
        return doc


def _print_json(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _print_checks(checks: list[Check]) -> None:
    for c in checks:
        print(f"  {c}")


# ---------------------------------------------------------------------------
# characters


def _surface_for(args) -> surfaces.SurfaceClasses:
    family = args.family
    if family == "veronese":
        if args.r is None:
            raise InvalidParameter("--family veronese requires --r")
        return surfaces.veronese(args.r)
    if family == "scroll":
        if args.r is None:
            raise InvalidParameter("--family scroll requires --r")
        return surfaces.scroll_p1p1(args.r)
    if family == "delpezzo":
        if args.deg is None:
            raise InvalidParameter("--family delpezzo requires --deg")
        return surfaces.del_pezzo(args.deg)
    if family == "k3":
        if args.g is None:
            raise InvalidParameter("--family k3 requires --g")
        return surfaces.k3(args.g)
    # custom
    missing = [flag for flag, val in (("--d", args.d), ("--kh", args.kh),
                                      ("--k2", args.k2), ("--euler", args.euler))
               if val is None]
    if missing:
        raise InvalidParameter(f"--family custom requires {' '.join(missing)}")
    return surfaces.SurfaceClasses(args.d, args.kh, args.k2, args.euler, label="custom")


def cmd_characters(args) -> int:
    s = _surface_for(args)
    chars = surfaces.branch_characters(s)
    identity_report = surfaces.verify_character_identities(s, chars)
    report = RunReport(
        command="characters",
        parameters=_parameters(args, ("family", "r", "deg", "g", "d", "kh", "k2", "euler")),
        payload={
            "surface": {
                "d": s.d, "kh": s.kh, "k2": s.k2, "euler": s.euler, "label": s.label,
            },
            "characters": chars.as_dict(),
        },
        checks=identity_report.checks,
    )
    if args.format == "json":
        _print_json(report.as_dict())
    else:
        print(f"surface: {s.label} (d={s.d}, kh={s.kh}, k2={s.k2}, euler={s.euler})")
        print(f"characters: {chars}")
        print("identity checks:")
        _print_checks(report.checks)
    return report.exit_code


# ---------------------------------------------------------------------------
# pillow


def _pillow_verification(c: pillow.PillowConfig) -> Report:
    report = pillow.verify_sphere_triangulation(c)
    brute = pillow.count_disjoint_line_pairs(c)
    report.add("disjoint_pairs_brute_vs_formula", brute, pillow.formula_disjoint_pairs(c.g))
    report.add("disjoint_pairs_brute_vs_degree_method", brute, pillow.disjoint_pairs_via_degrees(c))
    return report


def cmd_pillow(args) -> int:
    c = pillow.build_pillow(args.a, args.b)
    checks: list[Check] = []
    if args.verify:
        checks = _pillow_verification(c).checks
    report = RunReport(
        command="pillow",
        parameters=_parameters(args, ("a", "b", "verify", "export", "dot_graph", "out")),
        payload={
            "summary": {
                "a": c.a, "b": c.b, "g": c.g,
                "vertices": len(c.vertices),
                "lines": len(c.lines),
                "triangles": len(c.triangles),
            }
        },
        checks=checks,
    )

    exported = None
    if args.export == "json":
        exported = json.dumps(pillow.config_to_dict(c), indent=2) + "\n"
    elif args.export == "dot":
        if args.dot_graph == "lines":
            exported = pillow.dot_line_intersection(c)
        else:
            exported = pillow.dot_face_adjacency(c)
    if exported is not None:
        if args.out:
            Path(args.out).write_text(exported)
            report.artifacts.append(args.out)
        elif args.format == "json":
            # keep stdout a single JSON document
            report.payload["export"] = exported
        else:
            sys.stdout.write(exported)

    if args.format == "json":
        _print_json(report.as_dict())
    elif args.export is None or args.out:
        print(
            f"pillow ({c.a}, {c.b}): V={len(c.vertices)} E={len(c.lines)} "
            f"F={len(c.triangles)} g={c.g}"
        )
        if args.verify:
            _print_checks(report.checks)
            print("all checks passed" if report.all_passed else "CHECKS FAILED")
        for path in report.artifacts:
            print(f"wrote {path}")
    return report.exit_code


# ---------------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    c = pillow.build_pillow(args.a, args.b)
    table = degeneration.build_table(c)
    conservation = degeneration.verify_conservation(c, table)
    report = RunReport(
        command="table",
        parameters=_parameters(args, ("a", "b")),
        payload={"table": degeneration.table_to_dict(table)},
        checks=conservation.checks,
    )
    if args.format == "json":
        _print_json(report.as_dict())
    else:
        sys.stdout.write(degeneration.render_table(table))
        print("conservation checks:")
        _print_checks(report.checks)
    return report.exit_code


# ---------------------------------------------------------------------------
# verify sweep


def _family_report() -> Report:
    """Closed forms versus the general formulas, plus the four identities,
    over the documented parameter sweeps of every family."""
    report = Report("families")
    sweeps = [
        ("veronese", range(1, 21), surfaces.veronese, surfaces.veronese_characters),
        ("scroll", range(1, 21), surfaces.scroll_p1p1, surfaces.scroll_characters),
        ("delpezzo", range(3, 10), surfaces.del_pezzo, surfaces.del_pezzo_characters),
        ("k3", range(3, 101), surfaces.k3, surfaces.k3_characters),
    ]
    for name, params, constructor, closed_form in sweeps:
        mismatches = 0
        identity_failures = 0
        for p in params:
            s = constructor(p)
            chars = surfaces.branch_characters(s)
            if chars != closed_form(p):
                mismatches += 1
            if not surfaces.verify_character_identities(s, chars).all_passed:
                identity_failures += 1
        report.add(f"{name}_closed_forms", mismatches, 0)
        report.add(f"{name}_identities", identity_failures, 0)
    report.add(
        "veronese3_equals_delpezzo9",
        surfaces.branch_characters(surfaces.veronese(3)),
        surfaces.branch_characters(surfaces.del_pezzo(9)),
    )
    return report


def _configuration_report(a: int, b: int) -> Report:
    """Every per-configuration invariant: triangulation, pair counts,
    stage contracts, conservation, and the transpose isomorphism."""
    report = Report(f"configuration ({a}, {b})")
    c = pillow.build_pillow(a, b)
    report.extend(pillow.verify_sphere_triangulation(c))

    brute = pillow.count_disjoint_line_pairs(c)
    report.add("disjoint_pairs_brute_vs_formula", brute, pillow.formula_disjoint_pairs(c.g))
    report.add("disjoint_pairs_brute_vs_degree_method", brute,
               pillow.disjoint_pairs_via_degrees(c))

    quad = pillow.quadric_stage(a, b)
    report.add("quadric_face_count", len(quad.cells), 2 * a * b)
    report.add("quadric_line_count", len(quad.lines), 4 * a * b)
    shared_counts = {}
    for face in quad.cells:
        for ln in face.boundary:
            shared_counts[ln.pair] = shared_counts.get(ln.pair, 0) + 1
    report.add("quadric_lines_shared_by_two_faces",
               sum(1 for n in shared_counts.values() if n != 2), 0)

    two = pillow.two_surface_stage(a, b)
    report.add("two_surface_spans",
               (two.spans.top, two.spans.bottom, two.spans.intersection),
               (a * b + a + b, a * b + a + b, 2 * a + 2 * b - 1))
    top, bottom = two.cells
    report.add("two_surface_point_inclusion_exclusion",
               len(top.vertices) + len(bottom.vertices) - (2 * a + 2 * b),
               2 * a * b + 2)

    report.extend(degeneration.verify_conservation(c))

    ct = pillow.build_pillow(b, a)
    report.add("transpose_isomorphism",
               pillow.is_complex_isomorphism(c, ct, pillow.transpose_map(c, ct)), True)
    return report


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo_s, hi_s = text.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(text)
    except ValueError as exc:
        raise InvalidParameter(f"cannot parse range {text!r}; expected N or N..M") from exc
    if lo > hi:
        raise InvalidParameter(f"empty range {text!r}")
    return lo, hi


def cmd_verify(args) -> int:
    a_lo, a_hi = _parse_range(args.a)
    b_lo, b_hi = _parse_range(args.b)
    limit = args.limit
    for lo, hi, flag in ((a_lo, a_hi, "--a"), (b_lo, b_hi, "--b")):
        if lo < 2 or hi > limit:
            raise InvalidParameter(
                f"{flag} range {lo}..{hi} outside [2, {limit}] (raise --limit to widen)"
            )

    sections: list[Report] = [_family_report()]
    for a in range(a_lo, a_hi + 1):
        for b in range(b_lo, b_hi + 1):
            sections.append(_configuration_report(a, b))

    checks = [
        Check(f"{section.title}: {c.name}", c.lhs, c.rhs)
        for section in sections
        for c in section.checks
    ]
    report = RunReport(
        command="verify",
        parameters={"a": args.a, "b": args.b, "limit": limit},
        payload={
            "configurations": (a_hi - a_lo + 1) * (b_hi - b_lo + 1),
        },
        checks=checks,
    )
    if args.format == "json":
        _print_json(report.as_dict())
    else:
        for section in sections:
            status = "PASS" if section.all_passed else "FAIL"
            print(f"{status}  {section.title} ({len(section.checks)} checks)")
            for c in section.failures:
                print(f"      FAIL {c.name}: {c.lhs} != {c.rhs}")
        total = len(checks)
        print(f"overall: {'PASS' if report.all_passed else 'FAIL'} ({total} checks)")
    return report.exit_code


# ---------------------------------------------------------------------------
# parser


def _parameters(args, names) -> dict:
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pillowdeg",
        description="Pillow plane configurations and branch-curve invariants, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chars = sub.add_parser("characters", help="branch-curve characters of a surface")
    p_chars.add_argument("--family", required=True,
                         choices=["veronese", "scroll", "delpezzo", "k3", "custom"])
    p_chars.add_argument("--r", type=int, help="parameter for veronese/scroll")
    p_chars.add_argument("--deg", type=int, help="degree for delpezzo (3..9)")
    p_chars.add_argument("--g", type=int, help="genus for k3 (>= 3)")
    p_chars.add_argument("--d", type=int, help="surface degree H^2 (custom)")
    p_chars.add_argument("--kh", type=int, help="K.H (custom)")
    p_chars.add_argument("--k2", type=int, help="K^2 (custom)")
    p_chars.add_argument("--euler", type=int, help="Euler number e(S) (custom)")
    p_chars.add_argument("--format", choices=["text", "json"], default="text")
    p_chars.set_defaults(func=cmd_characters)

    p_pillow = sub.add_parser("pillow", help="build (and verify/export) a pillow configuration")
    p_pillow.add_argument("--a", type=int, required=True)
    p_pillow.add_argument("--b", type=int, required=True)
    p_pillow.add_argument("--verify", action="store_true",
                          help="run the sphere-triangulation and pair-count checks")
    p_pillow.add_argument("--export", choices=["json", "dot"])
    p_pillow.add_argument("--dot-graph", dest="dot_graph", choices=["faces", "lines"],
                          default="faces",
                          help="which graph --export dot writes (default: faces)")
    p_pillow.add_argument("--out", help="write the export here instead of stdout")
    p_pillow.add_argument("--format", choices=["text", "json"], default="text")
    p_pillow.set_defaults(func=cmd_pillow)

    p_table = sub.add_parser("table", help="singularity-distribution table for (a, b)")
    p_table.add_argument("--a", type=int, required=True)
    p_table.add_argument("--b", type=int, required=True)
    p_table.add_argument("--format", choices=["text", "json"], default="text")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="sweep all invariants over (a, b) ranges")
    p_verify.add_argument("--a", required=True, help="range, e.g. 2..4 or 3")
    p_verify.add_argument("--b", required=True, help="range, e.g. 2..4 or 3")
    p_verify.add_argument("--limit", type=int, default=6,
                          help="upper bound allowed for the ranges (default 6)")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (InvalidParameter, NonIntegralNodeCount, NegativeCharacter, NonIntegral) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
