"""Command line driver.

Exit codes: 0 success, 1 a verification check failed, 2 bad input or
configuration, 3 inconclusive (a bounded search gave up).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import tempfile

from .config import BOUNDS
from .errors import Inconclusive

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class ConfigError(ValueError):
    pass


def _suite_table() -> str:
    from .suites import SUITES
    lines = ["suites and supported n:"]
    for s in SUITES.values():
        lines.append(f"  {s.name:<22} {s.min_n} <= n <= {s.max_n}")
    lines.append("  all                    runs every suite, skipping those that do not apply")
    return "\n".join(lines)


def _parse_ints(s: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in re.split(r"[,\s]+", s.strip()) if x)
    except ValueError:
        raise ConfigError(f"bad list {s!r}; expected comma-separated integers") from None


def _parse_word(s: str, n: int) -> tuple[int, ...]:
    letters = _parse_ints(s)
    bad = [x for x in letters if not 1 <= x <= n - 1]
    if bad:
        raise ConfigError(f"letters {bad} outside 1..{n - 1}")
    return letters


def _parse_module(spec: str, n: int):
    from .quiver_rep import Interval, decompose_intervals, rep_from_json

    s = spec.strip()
    m = re.fullmatch(r"([LPI])(\d+)", s)
    if m:
        kind, j = m.group(1), int(m.group(2))
        if not 1 <= j <= n - 1:
            raise ConfigError(f"vertex {j} outside 1..{n - 1}")
        return [{"L": Interval(j, j), "P": Interval(j, n - 1), "I": Interval(1, j)}[kind]]
    m = re.fullmatch(r"M?\[(\d+),(\d+)\]", s.replace(" ", ""))
    if m:
        a, b = int(m.group(1)), int(m.group(2))
        if not 1 <= a <= b <= n - 1:
            raise ConfigError(f"interval [{a},{b}] out of range for n={n}")
        return [Interval(a, b)]
    if s.startswith("@"):
        with open(s[1:], encoding="utf-8") as fh:
            s = fh.read()
    try:
        M = rep_from_json(s)
    except (ValueError, KeyError, TypeError) as exc:
        raise ConfigError(f"cannot read module {spec!r}: {exc}") from None
    if M.quiver.n != n:
        raise ConfigError(f"module is for n={M.quiver.n}, not {n}")
    return list(decompose_intervals(M))


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".catcat-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _check_n(n: int, lo: int, hi: int, what: str) -> None:
    if not lo <= n <= hi:
        raise ConfigError(f"{what} supports {lo} <= n <= {hi}, got n={n}")


# -- subcommands ---------------------------------------------------------------

def cmd_enumerate(args) -> tuple[str, int]:
    from .monoid import enumerate_monoid, to_lattice_path

    _check_n(args.n, 1, BOUNDS.max_enumerate_n, "enumerate")
    elems = enumerate_monoid(args.n)
    records = []
    for f in elems:
        rec = {"values": f.to_json()}
        if args.paths:
            rec["ymax"] = to_lattice_path(f).to_json()
        records.append(rec)
    if args.format == "json":
        return _json({"n": args.n, "count": len(records), "elements": records}), EXIT_OK
    if args.format == "csv":
        head = ["values"] + (["ymax"] if args.paths else [])
        rows = [[" ".join(map(str, r["values"]))] + ([" ".join(map(str, r["ymax"]))] if args.paths else [])
                for r in records]
        return _csv([head] + rows), EXIT_OK
    lines = [str(f) + (f"  ymax={to_lattice_path(f).to_json()}" if args.paths else "") for f in elems]
    return "\n".join(lines) + "\n", EXIT_OK


def _text_report(rep: dict) -> str:
    lines = [f"suite {rep['suite']} at n={rep['n']}: {'PASS' if rep['passed'] else 'FAIL'}"]
    for r in rep["results"]:
        lines.append(f"[{r['status']}] {r['suite']}" + (f" ({r['detail']})" if "detail" in r else ""))
        for c in r.get("checks", []):
            extra = f" - {c['detail']}" if c["detail"] else ""
            lines.append(f"    {c['status']:<4} {c['name']}: {c['anchor']}{extra}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> tuple[str, int]:
    from .suites import SUITES, run_suite

    if args.suite != "all" and args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}")
    if args.n < 1:
        raise ConfigError("n must be positive")
    if args.max_word_len is not None and not 0 <= args.max_word_len <= BOUNDS.max_word_len:
        raise ConfigError(f"max word length must be in 0..{BOUNDS.max_word_len}")
    try:
        rep = run_suite(args.suite, args.n, args.max_word_len)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    code = EXIT_OK if rep["passed"] else (EXIT_INCONCLUSIVE if rep["inconclusive"] else EXIT_FAIL)
    if args.format == "json":
        return _json(rep), code
    if args.format == "csv":
        rows = [["suite", "check", "status", "anchor", "detail"]]
        for r in rep["results"]:
            if "checks" not in r:
                rows.append([r["suite"], "", r["status"], "", r.get("detail", "")])
            for c in r.get("checks", []):
                rows.append([r["suite"], c["name"], c["status"], c["anchor"], c["detail"]])
        return _csv(rows), code
    return _text_report(rep), code


def cmd_matrix(args) -> tuple[str, int]:
    from .functors import FunctorWord, grothendieck_matrix
    from .groth import BasisTag, int_rows, matrix_generator, matrix_weighted
    from .monoid import eval_word

    _check_n(args.n, 2, 64, "matrix")
    try:
        basis = BasisTag.parse(args.basis)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if (args.i is None) == (args.word is None):
        raise ConfigError("give exactly one of --i or --word")
    info = {"n": args.n, "basis": basis.value}
    if args.i is not None:
        if not 1 <= args.i <= args.n - 1:
            raise ConfigError(f"--i must be in 1..{args.n - 1}")
        if args.weights is not None:
            if basis is not BasisTag.INJECTIVE:
                raise ConfigError("weights are defined for the injective basis")
            z = _parse_ints(args.weights)
            try:
                m = matrix_weighted(args.n, args.i, z)
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
            info["weights"] = list(z)
        else:
            m = matrix_generator(args.n, args.i, basis)
        info["i"] = args.i
    else:
        letters = _parse_word(args.word, args.n)
        m = grothendieck_matrix(FunctorWord(args.n, letters), basis)
        info["word"] = list(letters)
        info["element"] = eval_word(letters, args.n).to_json()
    rows = int_rows(m)
    if args.format == "json":
        return _json({**info, "matrix": rows}), EXIT_OK
    if args.format == "csv":
        return _csv(rows), EXIT_OK
    width = max((len(str(x)) for r in rows for x in r), default=1)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows) + "\n", EXIT_OK


def cmd_functor(args) -> tuple[str, int]:
    from .functors import FunctorWord, apply_word_intervals, multiset_str
    from .quiver_rep import intervals_to_json

    _check_n(args.n, 2, 16, "functor")
    letters = _parse_word(args.word, args.n)
    ivs = _parse_module(args.module, args.n)
    out = apply_word_intervals(FunctorWord(args.n, letters), ivs)
    if args.format == "json":
        return _json({"n": args.n, "word": list(letters), "module": intervals_to_json(ivs),
                      "result": intervals_to_json(out)}), EXIT_OK
    if args.format == "csv":
        return _csv([["a", "b"]] + [[a, b] for a, b in out]), EXIT_OK
    return multiset_str(out) + "\n", EXIT_OK


def cmd_theta(args) -> tuple[str, int]:
    from .bimodule import all_ttuples, orientation_report, theta

    _check_n(args.n, 1, BOUNDS.max_ttuple_n, "theta")
    rows = [{"t": t.to_json(), "theta": theta(t).to_json()} for t in all_ttuples(args.n)]
    orient = orientation_report(args.n) if 2 <= args.n <= 6 else None
    if args.format == "json":
        return _json({"n": args.n, "table": rows, "orientation": orient}), EXIT_OK
    if args.format == "csv":
        return _csv([["t", "theta"]] + [[" ".join(map(str, r["t"])), " ".join(map(str, r["theta"]))]
                                        for r in rows]), EXIT_OK
    lines = [f"{tuple(r['t'])} -> {r['theta']}" for r in rows]
    if orient:
        lines.append(f"orientation: {orient['order_orientation']} (evidence n={orient['evidence_n']})")
    return "\n".join(lines) + "\n", EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catcat", description="Computations with the Catalan monoid "
                                "and its categorification on the linear quiver.",
                                epilog=_suite_table(), formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
        sp.add_argument("--output", help="write here (atomically) instead of stdout")

    e = sub.add_parser("enumerate", help="list the elements of C_n")
    common(e)
    e.add_argument("--paths", action="store_true", help="include lattice-path heights")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="run a verification suite", epilog=_suite_table(),
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    common(v)
    v.add_argument("--suite", required=True)
    v.add_argument("--max-word-len", type=int, default=None)
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("matrix", help="a generator matrix, or the matrix of a functor word")
    common(m)
    m.add_argument("--i", type=int)
    m.add_argument("--word")
    m.add_argument("--basis", default="injective", help="injective, simple or projective")
    m.add_argument("--weights", help="comma-separated positive weights (injective basis)")
    m.set_defaults(func=cmd_matrix)

    f = sub.add_parser("functor", help="apply a functor word to a module")
    common(f)
    f.add_argument("--word", required=True, help="letters, leftmost applied last; '' for identity")
    f.add_argument("--module", required=True, help="L3, P2, I1, [a,b], a JSON representation, or @file")
    f.set_defaults(func=cmd_functor)

    t = sub.add_parser("theta", help="the tuple-to-map table with the order orientation")
    common(t)
    t.set_defaults(func=cmd_theta)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except ConfigError as exc:
        print(f"catcat: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Inconclusive as exc:
        print(f"catcat: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except OSError as exc:
        print(f"catcat: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    _emit(text, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
