"""Command-line front end: deterministic JSON reports over the engine.

Subcommands: complete, verify, nf, enumerate, count, oracle. Inputs come
either from the built-in permutation monoid (--symn N) or a presentation
file (--file PATH) with the grammar

    # comment
    gens: 3
    rel: x3 x1 x2 = x1 x2 x3

Exit codes: 0 success/pass, 1 verification failure, 2 usage or parse error,
3 budget refusal. Reports are byte-deterministic for identical inputs and
flags, except for the wall_time_s field, which is excluded from the
report_digest.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .census import (
    DEFAULT_ORACLE_BUDGET,
    OracleBudgetError,
    check_unique_normal_forms,
    count_normal_forms,
)
from .complete import DEFAULT_BUDGET, CompletionReport, shirshov_complete
from .compose import Ambiguity, CompositionResult
from .poly import Poly, format_poly
from .rewrite import Basis, ReductionTrace, build_basis, irreducible_words, normal_form
from .symn import (
    VerificationReport,
    certify_basis,
    certify_rules,
    defining_rules,
    saturated_rules,
)
from .words import Word, WordSyntaxError, format_word, parse_word

SCHEMA = "gsb-report/1"

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class ParseError(ValueError):
    """Presentation text rejected, with the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True)
class PresentationFile:
    n: int
    relations: tuple[tuple[Word, Word], ...]


def parse_presentation(text: str) -> PresentationFile:
    """Parse `gens:`/`rel:` lines into a validated presentation."""
    n: int | None = None
    relations: list[tuple[Word, Word]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if n is not None:
                raise ParseError(line_no, "duplicate gens line")
            body = line[len("gens:") :].strip()
            if not body.isdigit() or int(body) < 1:
                raise ParseError(line_no, f"bad generator count {body!r}")
            n = int(body)
        elif line.startswith("rel:"):
            if n is None:
                raise ParseError(line_no, "rel before gens")
            body = line[len("rel:") :]
            if "=" not in body:
                raise ParseError(line_no, "relation needs '='")
            lhs_text, rhs_text = body.split("=", 1)
            try:
                lhs, rhs = parse_word(lhs_text), parse_word(rhs_text)
            except WordSyntaxError as exc:
                raise ParseError(line_no, str(exc)) from exc
            for word in (lhs, rhs):
                for letter in word:
                    if letter > n:
                        raise ParseError(
                            line_no, f"generator x{letter} out of range 1..{n}"
                        )
            relations.append((lhs, rhs))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if n is None:
        raise ParseError(0, "missing gens line")
    if not relations:
        raise ParseError(0, "presentation has no relations")
    return PresentationFile(n=n, relations=tuple(relations))


# -- serialization ----------------------------------------------------------


def frac_json(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def poly_json(p: Poly) -> list[dict]:
    return [{"coef": frac_json(c), "word": list(w)} for w, c in p.terms]


def ambiguity_json(a: Ambiguity) -> dict:
    return {
        "kind": a.kind,
        "f": a.f_id,
        "g": a.g_id,
        "w": list(a.w),
        "a": list(a.a),
        "b": list(a.b),
    }


def trace_json(trace: ReductionTrace) -> list[dict]:
    return [
        {
            "rule": s.rule_id,
            "position": s.position,
            "word": list(s.word),
            "coefficient": frac_json(s.coefficient),
        }
        for s in trace.steps
    ]


def result_json(res: CompositionResult, include_trace: bool) -> dict:
    out = {
        "ambiguity": ambiguity_json(res.ambiguity),
        "composition": poly_json(res.composition),
        "remainder": poly_json(res.remainder),
        "trivial": res.trivial,
        "steps": len(res.trace.steps),
    }
    if include_trace:
        out["trace"] = trace_json(res.trace)
    return out


def completion_json(report: CompletionReport) -> dict:
    return {
        "status": report.status,
        "rounds": report.rounds,
        "rule_count": len(report.basis),
        "skipped_beyond_bound": report.skipped_beyond_bound,
        "added": [
            {
                "round": a.round_no,
                "ambiguity": ambiguity_json(a.ambiguity),
                "rule": poly_json(a.rule),
            }
            for a in report.added
        ],
        "rules": [poly_json(r) for r in report.basis.rules],
    }


def verification_json(report: VerificationReport, include_trace: bool) -> dict:
    out = {
        "verdict": "pass" if report.passed else "fail",
        "degree_bound": report.degree_bound,
        "checked": report.checked,
        "skipped_beyond_bound": report.skipped_beyond_bound,
        "unchecked": report.unchecked,
        "total_enumerated": report.total_enumerated,
        "complete_scan": report.complete_scan,
    }
    if report.pair_counts is not None:
        out["pairs"] = [
            {
                "f_family": f,
                "g_family": g,
                "checked": count,
                "nontrivial": (report.nontrivial_pair_counts or {}).get((f, g), 0),
            }
            for (f, g), count in sorted(report.pair_counts.items())
        ]
    out["failures"] = [result_json(r, include_trace) for r in report.nontrivial]
    return out


def canonical_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=False)


def build_report(command: str, argv: list[str], input_digest: str, payload: dict) -> dict:
    report = {
        "schema": SCHEMA,
        "engine_version": __version__,
        "command": command,
        "argv": list(argv),
        "input_digest": input_digest,
        "payload": payload,
    }
    report["report_digest"] = hashlib.sha256(
        canonical_json(report).encode()
    ).hexdigest()
    return report


def strip_volatile(report: dict) -> dict:
    """The determinism-relevant part of a report (drops wall_time_s)."""
    return {k: v for k, v in report.items() if k != "wall_time_s"}


# -- input resolution -------------------------------------------------------


@dataclass
class ResolvedInput:
    n: int
    rules: list[Poly]
    digest: str
    symn: bool


def _resolve_input(args) -> ResolvedInput:
    if args.symn is not None:
        if args.symn < 2:
            raise ValueError("--symn needs n >= 2")
        rules = defining_rules(args.symn)
        digest = hashlib.sha256(f"symn:{args.symn}".encode()).hexdigest()
        return ResolvedInput(n=args.symn, rules=rules, digest=digest, symn=True)
    with open(args.file, "rb") as fh:
        data = fh.read()
    pres = parse_presentation(data.decode("utf-8"))
    rules = [
        Poly([(lhs, 1), (rhs, -1)])
        for lhs, rhs in pres.relations
        if lhs != rhs  # a relation u = u contributes nothing
    ]
    return ResolvedInput(
        n=pres.n, rules=rules, digest=hashlib.sha256(data).hexdigest(), symn=False
    )


def _default_bound(args, n: int, at_least: int = 0) -> int:
    bound = args.degree_bound if args.degree_bound is not None else n + 6
    return max(bound, at_least)


def _rule_budget(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_BUDGET


def _oracle_budget(args) -> int:
    return args.budget if args.budget is not None else DEFAULT_ORACLE_BUDGET


def _symn_basis(n: int, degree_bound: int) -> Basis:
    basis, _ = saturated_rules(n, degree_bound)
    return basis


def _completed_basis(
    inp: ResolvedInput, degree_bound: int, budget: int, jobs: int
) -> tuple[Basis | None, CompletionReport | None]:
    """Basis used for normal forms: the saturated rules for the built-in
    monoid, a fresh completion for file presentations."""
    if inp.symn:
        return _symn_basis(inp.n, degree_bound), None
    report = shirshov_complete(
        inp.rules, degree_bound, budget=budget, jobs=jobs, alphabet_size=inp.n
    )
    if not report.closed:
        return None, report
    return report.basis, report


# -- subcommands ------------------------------------------------------------


def _cmd_complete(args, argv: list[str]) -> tuple[int, dict]:
    inp = _resolve_input(args)
    bound = _default_bound(args, inp.n)
    report = shirshov_complete(
        inp.rules, bound, budget=_rule_budget(args), jobs=args.jobs, alphabet_size=inp.n
    )
    payload = {"kind": "completion", "n": inp.n, "degree_bound": bound}
    payload.update(completion_json(report))
    print(f"completion: {report.status} after {report.rounds} round(s), "
          f"{len(report.basis)} rule(s), {len(report.added)} added, "
          f"{report.skipped_beyond_bound} ambiguities beyond bound")
    code = EXIT_OK if report.closed else EXIT_BUDGET
    return code, build_report("complete", argv, inp.digest, payload)


def _cmd_verify(args, argv: list[str]) -> tuple[int, dict]:
    inp = _resolve_input(args)
    bound = _default_bound(args, inp.n)
    if inp.symn:
        report = certify_basis(inp.n, bound, jobs=args.jobs)
    else:
        basis = build_basis(inp.rules, alphabet_size=inp.n)
        report = certify_rules(basis, bound, jobs=args.jobs)
    payload = {"kind": "verification", "n": inp.n}
    payload.update(verification_json(report, args.trace))
    print(f"verify: {'pass' if report.passed else 'FAIL'} "
          f"({report.checked} compositions checked <= degree {bound}, "
          f"{report.skipped_beyond_bound} beyond bound, "
          f"{len(report.nontrivial)} nontrivial)")
    for res in report.nontrivial[:5]:
        print(f"  nontrivial at w = {format_word(res.ambiguity.w)}: "
              f"remainder {format_poly(res.remainder)}")
    code = EXIT_OK if report.passed else EXIT_FAIL
    return code, build_report("verify", argv, inp.digest, payload)


def _cmd_nf(args, argv: list[str]) -> tuple[int, dict]:
    inp = _resolve_input(args)
    word = parse_word(args.word)
    for letter in word:
        if letter > inp.n:
            raise ValueError(f"generator x{letter} out of range 1..{inp.n}")
    bound = _default_bound(args, inp.n, at_least=len(word))
    basis, completion = _completed_basis(inp, bound, _rule_budget(args), args.jobs)
    if basis is None:
        assert completion is not None
        print("nf: completion budget exhausted; normal form not canonical")
        payload = {"kind": "normal_form", "n": inp.n, "status": "inconclusive"}
        payload.update(completion_json(completion))
        return EXIT_BUDGET, build_report("nf", argv, inp.digest, payload)
    result, trace = normal_form(Poly.monomial(word), basis, want_trace=True)
    if len(result.terms) == 1 and result.terms[0][1] == 1:
        text = format_word(result.terms[0][0]) or "1"
    else:
        text = format_poly(result)
    print(text)
    payload = {
        "kind": "normal_form",
        "n": inp.n,
        "degree_bound": bound,
        "word": list(word),
        "normal_form": poly_json(result),
        "normal_form_text": text,
        "steps": len(trace.steps),
    }
    if args.trace:
        payload["trace"] = trace_json(trace)
    return EXIT_OK, build_report("nf", argv, inp.digest, payload)


def _cmd_enumerate(args, argv: list[str]) -> tuple[int, dict]:
    inp = _resolve_input(args)
    length = args.len
    bound = _default_bound(args, inp.n, at_least=length)
    basis, completion = _completed_basis(inp, bound, _rule_budget(args), args.jobs)
    if basis is None:
        assert completion is not None
        print("enumerate: completion budget exhausted")
        payload = {"kind": "irreducible_words", "n": inp.n, "status": "inconclusive"}
        payload.update(completion_json(completion))
        return EXIT_BUDGET, build_report("enumerate", argv, inp.digest, payload)
    words = irreducible_words(basis, length)
    for w in words:
        print(format_word(w) or "1")
    payload = {
        "kind": "irreducible_words",
        "n": inp.n,
        "degree_bound": bound,
        "length": length,
        "count": len(words),
        "words": [list(w) for w in words],
    }
    return EXIT_OK, build_report("enumerate", argv, inp.digest, payload)


def _cmd_count(args, argv: list[str]) -> tuple[int, dict]:
    if args.symn is None:
        raise ValueError("count supports --symn input only")
    inp = _resolve_input(args)
    series = count_normal_forms(inp.n, args.max_len)
    for length, _, _, total in series.rows():
        print(f"{length}\t{total}")
    payload = {
        "kind": "growth",
        "n": inp.n,
        "max_length": args.max_len,
        "rows": [
            {"length": length, "avoiders": str(a), "special": str(s), "total": str(t)}
            for length, a, s, t in series.rows()
        ],
    }
    return EXIT_OK, build_report("count", argv, inp.digest, payload)


def _cmd_oracle(args, argv: list[str]) -> tuple[int, dict]:
    if args.symn is None:
        raise ValueError("oracle supports --symn input only")
    inp = _resolve_input(args)
    if args.len is None and args.max_len is None:
        raise ValueError("oracle needs --len or --max-len")
    lengths = [args.len] if args.len is not None else list(range(args.max_len + 1))
    series = count_normal_forms(inp.n, max(lengths))
    rows = []
    all_pass = True
    for length in lengths:
        check = check_unique_normal_forms(inp.n, length, budget=_oracle_budget(args))
        totals_match = check.class_count == series.totals[length]
        ok = check.passed and totals_match and not check.canonical_mismatches
        all_pass = all_pass and ok
        print(f"length {length}: {check.class_count} classes, "
              f"{'ok' if ok else 'MISMATCH'}")
        rows.append(
            {
                "length": length,
                "classes": check.class_count,
                "unique_normal_forms": check.passed,
                "counted_total": str(series.totals[length]),
                "totals_match": totals_match,
                "bad_classes": [
                    {"class": [list(w) for w in cls], "normal_forms": count}
                    for cls, count in check.bad_classes
                ],
                "canonical_mismatches": [list(w) for w in check.canonical_mismatches],
            }
        )
    payload = {"kind": "oracle", "n": inp.n, "rows": rows, "passed": all_pass}
    return (EXIT_OK if all_pass else EXIT_FAIL), build_report(
        "oracle", argv, inp.digest, payload
    )


# -- argument parsing and dispatch ------------------------------------------


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsb",
        description="Groebner-Shirshov basis workbench for monoid presentations",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    jobs_default = int(os.environ.get("GSB_JOBS", "1"))

    def add_common(p: argparse.ArgumentParser, input_group: bool = True) -> None:
        if input_group:
            group = p.add_mutually_exclusive_group(required=True)
            group.add_argument("--symn", type=int, metavar="N",
                               help="built-in permutation monoid on N generators")
            group.add_argument("--file", metavar="PATH",
                               help="presentation file (gens:/rel: lines)")
        p.add_argument("--degree-bound", type=int, default=None, metavar="D",
                       help="ambiguity degree bound (default: n + 6)")
        p.add_argument("--budget", type=int, default=None, metavar="R",
                       help="rule budget for completion, word budget for the oracle")
        p.add_argument("--jobs", type=int, default=jobs_default, metavar="J",
                       help="parallel workers (default: $GSB_JOBS or 1)")
        p.add_argument("--out", metavar="PATH", help="write the JSON report here")
        p.add_argument("--trace", action="store_true",
                       help="include reduction traces in the report")

    p_complete = sub.add_parser("complete", help="saturate rules under compositions")
    add_common(p_complete)

    p_verify = sub.add_parser("verify", help="check all compositions are trivial")
    add_common(p_verify)

    p_nf = sub.add_parser("nf", help="normal form of a word")
    add_common(p_nf)
    p_nf.add_argument("--word", required=True, help="word to reduce, e.g. 'x3 x1 x2'")

    p_enum = sub.add_parser("enumerate", help="irreducible words of one degree")
    add_common(p_enum)
    p_enum.add_argument("--len", type=int, required=True, help="word degree")

    p_count = sub.add_parser("count", help="growth table of normal-form counts")
    add_common(p_count)
    p_count.add_argument("--max-len", type=int, required=True, help="largest degree")

    p_oracle = sub.add_parser("oracle", help="brute-force congruence cross-check")
    add_common(p_oracle)
    p_oracle.add_argument("--len", type=int, default=None, help="single degree")
    p_oracle.add_argument("--max-len", type=int, default=None,
                          help="sweep degrees 0..MAX")
    return parser


_COMMANDS = {
    "complete": _cmd_complete,
    "verify": _cmd_verify,
    "nf": _cmd_nf,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "oracle": _cmd_oracle,
}


def dispatch(argv: list[str]) -> tuple[int, dict | None]:
    """Run one CLI invocation; returns (exit code, report or None)."""
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (EXIT_USAGE if exc.code else EXIT_OK), None
    started = time.perf_counter()
    try:
        code, report = _COMMANDS[args.command](args, argv)
    except (ParseError, WordSyntaxError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    except OracleBudgetError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET, None
    report["wall_time_s"] = round(time.perf_counter() - started, 6)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")
    return code, report


def main(argv: list[str] | None = None) -> int:
    code, _ = dispatch(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
