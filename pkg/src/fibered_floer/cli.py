"""
Command-line front end.

    fibered-floer --genus 3 --word "g^2 d^-3" --format json

Words are written left to right: ``g^m`` twists along gamma, ``d^n``
along delta, ``g<i>^n`` along the i-th curve of a standard disjoint
collection. ``^1`` may be left out and tokens are separated by blanks or
``*``. The empty word is the identity (the product Sigma_g x S^1).

Exit status: 0 success, 1 bad input, 2 unsupported mapping class,
3 inconclusive rank (the two bounds disagree or a cross-check failed).
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Any

from .errors import (
    FloerError,
    InconclusiveSandwich,
    NoCitedComparison,
    ParseError,
    UnsupportedCurve,
    UnsupportedMappingClass,
)
from .mapping_class import (
    DELTA,
    GAMMA,
    DehnTwist,
    TwistWord,
    abs_trace,
    gamma_i,
    render_word,
    turaev_torsion_level,
)
from .rank_engine import RankResult, compare_unperturbed, compute_rank

EXIT_OK, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_INCONCLUSIVE = 0, 1, 2, 3

_TOKEN = re.compile(r"[^\s*]+")
_TWIST = re.compile(r"(?:g(?P<idx>\d+)?|(?P<delta>d))(?:\^(?P<pow>[+-]?\d+))?\Z")


def parse_word(src: str, genus: int) -> TwistWord:
    twists = []
    for m in _TOKEN.finditer(src):
        offset = len(src[: m.start()].encode())
        tok = _TWIST.match(m.group())
        if tok is None:
            raise ParseError(f"cannot read twist {m.group()!r}", offset)
        power = int(tok["pow"]) if tok["pow"] is not None else 1
        if tok["delta"]:
            curve = DELTA
        elif tok["idx"] is not None:
            try:
                curve = gamma_i(int(tok["idx"]))
            except UnsupportedCurve as exc:
                raise ParseError(str(exc), offset) from None
        else:
            curve = GAMMA
        twists.append(DehnTwist(curve, power))
    return TwistWord(genus, tuple(twists))


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    return x


def build_report(
    result: RankResult,
    *,
    show_generators: bool = False,
    comparison: bool = False,
    torsion_levels: bool = False,
    notes: list[str] | None = None,
) -> dict[str, Any]:
    word = result.word
    g = word.genus
    report: dict[str, Any] = {
        "genus": g,
        "word": render_word(word),
        "case": result.case.tag,
        "case_params": _jsonable(result.case.params),
        "level": result.level,
        "lefschetz": result.lefschetz,
        "level_euler": result.level_euler,
        "abs_trace": abs_trace(word) if word.is_gamma_delta() else None,
        "census": result.census.counts(),
        "diagram": result.diagram.to_json(),
        "spinc": [
            {"label": str(s.label), "chi": s.chi, "pairs": s.essential_pairs, "rank": s.rank}
            for s in result.per_structure
        ],
        "total_rank": result.total_rank,
        "rank": result.total_rank,
        "checks": [{"name": c.name, "pass": c.passed} for c in result.checks],
    }
    if comparison:
        try:
            cmp = compare_unperturbed(result)
        except NoCitedComparison as exc:
            if notes is not None:
                notes.append(str(exc))
        else:
            report["comparison"] = {
                "perturbed": cmp.perturbed,
                "unperturbed": cmp.unperturbed,
                "difference": cmp.difference,
                "note": cmp.note,
            }
    if torsion_levels:
        report["torsion"] = [
            {"k": k, "tau": turaev_torsion_level(word, k)} for k in range(g)
        ]
    if show_generators:
        report["generators"] = [
            {
                "a": pair.a.label(),
                "b": pair.b.label(),
                "fake": pair.fake,
            }
            for pair in result.census.pairs
        ]
    return report


def _use_color(stream) -> bool:
    return os.environ.get("FIBERED_FLOER_COLOR", "1") != "0" and stream.isatty()


def render_text(report: dict[str, Any], color: bool = False) -> str:
    def mark(ok: bool) -> str:
        word = "pass" if ok else "FAIL"
        if color:
            return f"\033[{32 if ok else 31}m{word}\033[0m"
        return word

    c = report["census"]
    lines = [
        f"genus {report['genus']}  word [{report['word'] or 'identity'}]",
        f"case         {report['case']} {report['case_params'] or ''}".rstrip(),
        f"level        S_{report['level']}",
        f"lefschetz    {report['lefschetz']}",
        f"level euler  {report['level_euler']}",
        f"abs trace    {report['abs_trace'] if report['abs_trace'] is not None else '-'}",
        f"census       {c['total']} pairs ({c['fake']} fake, {c['essential']} essential)",
        "spin^c structures:",
    ]
    for s in report["spinc"]:
        lines.append(f"  {s['label']:<16} chi {s['chi']:>6}  pairs {s['pairs']:>5}  rank {s['rank']:>5}")
    lines.append(f"total rank   {report['total_rank']}")
    lines.append("checks:")
    for ch in report["checks"]:
        lines.append(f"  {ch['name']:<26} {mark(ch['pass'])}")
    if "comparison" in report:
        cmp = report["comparison"]
        lines.append(
            f"unperturbed  {cmp['unperturbed']} (perturbed {cmp['perturbed']}, "
            f"difference {cmp['difference']}; {cmp['note']})"
        )
    if "torsion" in report:
        lines.append("torsion by level:")
        for row in report["torsion"]:
            lines.append(f"  k={row['k']:<3} tau {row['tau']}")
    if "generators" in report:
        lines.append("generator pairs:")
        for row in report["generators"]:
            lines.append(f"  {row['a']}  <->  {row['b']}{'  fake' if row['fake'] else ''}")
    return "\n".join(lines)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="fibered-floer",
        description="Perturbed HF+ rank in level S_{g-2} for mapping tori of Dehn-twist words.",
    )
    p.add_argument("--genus", "-g", type=int, required=True)
    p.add_argument("--word", "-w", default="", help='e.g. "g^2 d^-3", "g d g", "g1^2 g3^-1"')
    p.add_argument("--level", "-k", type=int, default=None,
                   help="spin^c level (identity word only; default g-2)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--show-generators", action="store_true")
    p.add_argument("--compare-unperturbed", action="store_true")
    p.add_argument("--show-torsion-levels", action="store_true")
    return p


def run(args: argparse.Namespace, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    notes: list[str] = []
    try:
        word = parse_word(args.word, args.genus)
        result = compute_rank(word, args.level)
        report = build_report(
            result,
            show_generators=args.show_generators,
            comparison=args.compare_unperturbed,
            torsion_levels=args.show_torsion_levels,
            notes=notes,
        )
    except UnsupportedMappingClass as exc:
        print(f"unsupported mapping class: {exc}", file=err)
        return EXIT_UNSUPPORTED
    except InconclusiveSandwich as exc:
        print(f"inconclusive: {exc}", file=err)
        return EXIT_INCONCLUSIVE
    except FloerError as exc:
        print(f"{type(exc).__name__}: {exc}", file=err)
        return EXIT_INPUT

    for note in notes:
        print(f"note: {note}", file=err)
    if args.format == "json":
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(render_text(report, color=_use_color(out)) + "\n")
    if not result.ok:
        failed = ", ".join(c.name for c in result.checks if not c.passed)
        print(f"inconclusive: cross-checks failed: {failed}", file=err)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
