"""Command-line front end.

Subcommands read and write the JSON formats of :mod:`bollobas.io` so they
compose through pipes, e.g.::

    bollobas construct --kind sharpness-k2 --k 3 --n 12 | bollobas verify --t 2

Exit status: 0 when every asserted check passed, 1 when a check failed,
2 for bad input, bad parameters or a guard refusal.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import acceptance, bounds, chains, constructions, covering, io, partitions
from .core import Surjection, is_bollobas_tuple, theorem_sum
from .errors import GuardError, InvariantError, NotValidatedError, ParameterError

OK, FAILED, BAD_INPUT = 0, 1, 2


@dataclass
class RunReport:
    subcommand: str
    parameters: dict
    verdicts: list[str] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)
    artifacts: list[str] = field(default_factory=list)
    status: int = OK

    def say(self, line: str, out=None) -> None:
        self.verdicts.append(line)
        print(line, file=out or sys.stdout)

    def fail(self, line: str) -> None:
        self.status = FAILED
        self.say(line)


def _read(args) -> str:
    if args.input and args.input != "-":
        return Path(args.input).read_text()
    return sys.stdin.read()


def _write_artifact(report: RunReport, path: str, text: str) -> None:
    Path(path).write_text(text)
    report.artifacts.append(path)


def _phi(text: str | None) -> Surjection | None:
    if text is None:
        return None
    try:
        return Surjection(tuple(int(v) for v in text.split(",")))
    except ValueError as exc:
        raise ParameterError(f"--phi must be comma-separated integers: {exc}") from None


# -- subcommands --------------------------------------------------------------


def cmd_verify(args, report: RunReport) -> None:
    fam = io.family_from_json(_read(args))
    t = args.t if args.t is not None else fam.t
    v = is_bollobas_tuple(fam, t, allow_large=args.guard_override)
    label = f"is_bollobas_tuple(k={fam.k}, t={t}, m={fam.m}, n={fam.n})"
    if not v:
        indices = ",".join(str(i) for i in v.indices)
        report.fail(f"{label}: INVALID {v.kind} at ({indices})")
        return
    report.say(f"{label}: valid")
    phi = _phi(args.phi)
    if phi is not None or t in (2, fam.k):
        value = theorem_sum(fam, t, phi, validate=False)
        report.say(f"theorem_sum: {value.numerator}/{value.denominator}")


def cmd_sum(args, report: RunReport) -> None:
    fam = io.family_from_json(_read(args))
    t = args.t if args.t is not None else fam.t
    phis = list(Surjection.all(fam.k, t)) if args.all_phi else [_phi(args.phi)]
    for phi in phis:
        value = theorem_sum(fam, t, phi, allow_large=args.guard_override)
        tag = ",".join(map(str, phi.image)) if phi else "default"
        report.say(f"theorem_sum(t={t}, phi={tag}): {value.numerator}/{value.denominator}")
        if value > 1:
            report.fail(f"theorem_sum exceeds 1 at phi={tag}")


def cmd_construct(args, report: RunReport) -> None:
    kind = args.kind
    if kind == "classical-pairs":
        if args.a is None or args.b is None:
            raise ParameterError("classical-pairs needs --a and --b")
        fam = constructions.classical_pairs(args.a, args.b)
    elif kind == "permutation-kk":
        fam = constructions.permutation_kk(_need(args, "k"))
    elif kind == "sharpness-k2":
        fam = constructions.sharpness_k2(_need(args, "k"), _need(args, "n"))
    else:
        fam = constructions.modular_k2(
            _need(args, "k"), _need(args, "n"), colors=args.colors, allow_large=args.guard_override
        )
    text = io.family_to_json(fam)
    if args.output:
        _write_artifact(report, args.output, text)
        report.say(f"construct {kind}: m={fam.m}, n={fam.n} -> {args.output}")
    else:
        sys.stdout.write(text)


def _need(args, name: str) -> int:
    value = getattr(args, name)
    if value is None:
        raise ParameterError(f"--{name} is required here")
    return value


def _emit_cover(args, report: RunReport, cover) -> None:
    text = io.cover_to_json(cover)
    if args.output:
        _write_artifact(report, args.output, text)
    else:
        sys.stdout.write(text)


def cmd_cover(args, report: RunReport) -> None:
    action = args.action
    if action == "verify":
        cover = io.cover_from_json(_read(args))
        v = covering.verify_cover(cover, allow_large=args.guard_override)
        label = f"verify_cover(k={cover.k}, t={cover.t}, n={cover.n}, blocks={len(cover.blocks)})"
        if v:
            report.say(f"{label}: valid")
        else:
            where = f"edge {v.edge}" + (f" block {v.block}" if v.block is not None else "")
            report.fail(f"{label}: INVALID {v.kind} at {where}")
    elif action == "random":
        k, t, n = _need(args, "k"), _need(args, "t"), _need(args, "n")
        with warnings.catch_warnings(record=True):
            warnings.simplefilter("always")
            res = covering.random_cover(
                k, t, n, seed=args.seed, max_attempts=args.max_attempts, allow_large=args.guard_override
            )
        for note in res.notes:
            print(f"note: {note}", file=sys.stderr)
        print(
            f"random_cover(k={k}, t={t}, n={n}, seed={args.seed}): {len(res.cover.blocks)} blocks, "
            f"N={res.N}, attempts={res.attempts}, expected-uncovered bound={res.bound:.6g}",
            file=sys.stderr,
        )
        _emit_cover(args, report, res.cover)
    elif action == "exact":
        k, t, n = _need(args, "k"), _need(args, "t"), _need(args, "n")
        res = covering.exact_min_cover(k, t, n, guard_override=args.guard_override)
        line = f"exact_min_cover(k={k}, t={t}, n={n}): m={res.m}"
        if args.output:
            _write_artifact(report, args.output, io.cover_to_json(res.certificate))
            line += f", certificate {args.output}"
        report.say(line)
    elif action == "from-tuple":
        fam = io.family_from_json(_read(args))
        t = args.t if args.t is not None else fam.t
        _emit_cover(args, report, covering.tuple_to_cover(fam, t, allow_large=args.guard_override))
    else:  # to-tuple
        cover = io.cover_from_json(_read(args))
        text = io.family_to_json(covering.cover_to_tuple(cover, allow_large=args.guard_override), cover.t)
        if args.output:
            _write_artifact(report, args.output, text)
        else:
            sys.stdout.write(text)


def cmd_partitions(args, report: RunReport) -> None:
    k, t = args.k, args.t
    if args.check_lemma:
        rep = partitions.check_lemma_3_1(k, t)
        line = (
            f"check_lemma_3_1(k={k}, t={t}): {rep.refinement_pairs} refinements, "
            f"{rep.merge_pairs} merges, {len(rep.refinement_violations) + len(rep.merge_violations)} violations"
        )
        report.say(line) if rep.ok else report.fail(line)
        return
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["s", "stirling2", "min_f", "formula", "argmin", "argmin_count"])
    for s in [args.s] if args.s else range(t, k + 1):
        best, argmins = partitions.minimizers(k, s, t)
        formula = partitions.min_f_formula(k, s, t)
        first = "".join("{" + ",".join(map(str, p)) + "}" for p in argmins[0])
        w.writerow([s, partitions.stirling2(k, s), best, formula, first, len(argmins)])
        if best != formula:
            report.status = FAILED


def cmd_chains(args, report: RunReport) -> None:
    fam = io.family_from_json(_read(args))
    ctx = chains.ChainContext.of(fam)
    summary = chains.summarize(ctx)
    for c in summary.counts:
        flag = " (empty block)" if c.empty_block else ""
        sig = ",".join(str(i) for i in c.sigma)
        report.say(f"sigma=({sig}) sizes={list(c.sizes)} chains={c.enumerated}{flag}")
    rep = summary.report
    if rep.disjoint:
        report.say(f"disjoint: yes, {rep.total} of {rep.n_perms} permutations in some chain family")
    else:
        a, b, perm = rep.collision
        report.fail(f"disjoint: NO, permutation {perm} in families of sigma={a} and sigma={b}")
    s = summary.theorem_sum
    line = f"sum of counts = {rep.total} = {ctx.n}! * {s.numerator}/{s.denominator}"
    report.say(line) if summary.identity_holds else report.fail("identity FAILS: " + line)


def cmd_bounds(args, report: RunReport) -> None:
    if args.quantity == "beta":
        rep = bounds.beta_bounds(args.k, args.t, args.n, exact=args.exact)
    else:
        rep = bounds.f_bounds(args.k, args.t, args.n, exact=args.exact)
    if args.csv:
        sys.stdout.write(rep.to_csv())
    else:
        for b in rep.bounds:
            report.say(f"{b.direction:5s} {b.value:.6f}  {b.name}  [{b.validity}]")
    for v in rep.violations():
        report.fail(f"violation: {v}")


def cmd_selftest(args, report: RunReport) -> None:
    results = acceptance.run_all(args.only, echo=print)
    failed = [r.number for r in results if not r.passed]
    report.verdicts.extend(r.line() for r in results)
    report.say(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    if failed:
        report.status = FAILED


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument("--guard-override", action="store_true", help="allow enumerations beyond the guards")
    common.add_argument("--report", help="write a JSON run report to this path")

    p = argparse.ArgumentParser(prog="bollobas", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    def io_args(q, output=False):
        q.add_argument("--input", help="JSON file (default: standard input)")
        if output:
            q.add_argument("--output", help="write the JSON result here instead of standard output")

    q = sub.add_parser("verify", parents=[common], help="check a family system and print its sum")
    io_args(q)
    q.add_argument("--t", type=int)
    q.add_argument("--phi", help="surjection values, e.g. 1,2,2")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("sum", parents=[common], help="exact theorem sum of a validated tuple")
    io_args(q)
    q.add_argument("--t", type=int)
    g = q.add_mutually_exclusive_group()
    g.add_argument("--phi", help="surjection values, e.g. 1,2,2")
    g.add_argument("--all-phi", action="store_true", help="every surjection [k] -> [t]")
    q.set_defaults(func=cmd_sum)

    q = sub.add_parser("construct", parents=[common], help="emit an explicit construction")
    q.add_argument("--kind", required=True, choices=constructions.KINDS)
    q.add_argument("--k", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--a", type=int)
    q.add_argument("--b", type=int)
    q.add_argument("--colors", type=int, default=2, help="modular-k2 only")
    q.add_argument("--output")
    q.set_defaults(func=cmd_construct)

    q = sub.add_parser("cover", parents=[common], help="covers of H_{k,t}(n)")
    q.add_argument("action", choices=["verify", "random", "exact", "from-tuple", "to-tuple"])
    io_args(q, output=True)
    q.add_argument("--k", type=int)
    q.add_argument("--t", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--max-attempts", type=int, default=1000)
    q.set_defaults(func=cmd_cover)

    q = sub.add_parser("partitions", parents=[common], help="min f_pi table (CSV) or the lemma check")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--s", type=int)
    q.add_argument("--check-lemma", action="store_true")
    q.set_defaults(func=cmd_partitions)

    q = sub.add_parser("chains", parents=[common], help="chain families of a (k,k)-tuple")
    q.add_argument("action", choices=["verify"])
    io_args(q)
    q.set_defaults(func=cmd_chains)

    q = sub.add_parser("bounds", parents=[common], help="closed-form bounds at (k,t,n)")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--t", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--quantity", choices=["f", "beta"], default="f")
    q.add_argument("--exact", type=int, help="known exact value to compare against")
    q.add_argument("--csv", action="store_true")
    q.set_defaults(func=cmd_bounds)

    q = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    q.add_argument("--only", type=int, nargs="+", metavar="N", help="criterion numbers")
    q.set_defaults(func=cmd_selftest)
    return p


def run(argv: list[str] | None = None) -> tuple[RunReport, int]:
    args = build_parser().parse_args(argv)
    params = {k: v for k, v in vars(args).items() if k not in ("func", "report")}
    report = RunReport(args.command, params)
    t0 = time.perf_counter()
    try:
        args.func(args, report)
    except (ParameterError, GuardError, OSError) as exc:
        # FormatError and EntropyDomainError are ParameterErrors
        print(f"error: {exc}", file=sys.stderr)
        report.verdicts.append(f"error: {exc}")
        report.status = BAD_INPUT
    except (NotValidatedError, InvariantError, covering.LasVegasFailure) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        report.verdicts.append(f"failed: {exc}")
        report.status = FAILED
    report.timings[args.command] = time.perf_counter() - t0
    if args.report:
        Path(args.report).write_text(json.dumps(asdict(report), indent=2, default=str) + "\n")
    return report, report.status


def main(argv: list[str] | None = None) -> int:
    return run(argv)[1]


if __name__ == "__main__":
    sys.exit(main())
