"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 a brute-force cap was exceeded,
4 two independent methods disagreed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__, binarycuts, bounds, codesim, spheres
from ._accel import BACKEND
from .core import (
    CapExceeded,
    Multipermutation,
    UlamError,
    brute_max_n,
    identity_multipermutation,
    min_translocation_count,
    omega_multipermutation,
    ulam_distance,
)

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_MISMATCH = 0, 2, 3, 4


class Mismatch(Exception):
    pass


@dataclass
class CommandResult:
    command: str
    params: dict
    outputs: dict = field(default_factory=dict)
    methods: list = field(default_factory=list)
    cross_check: str = "not-run"
    rows: list | None = None
    columns: list | None = None

    def as_dict(self) -> dict:
        out = {
            "command": self.command,
            "params": _encode(self.params),
            "outputs": _encode(self.outputs),
            "methods": list(self.methods),
            "cross_check": self.cross_check,
        }
        if self.rows is not None:
            out["columns"] = list(self.columns)
            out["rows"] = [[_fmt(v) for v in row] for row in self.rows]
        return out


def _fmt(v):
    if v is None:
        return "none"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _encode(obj):
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return _fmt(obj)


def render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.as_dict(), sort_keys=True, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if result.rows is not None:
            writer.writerow(result.columns)
            writer.writerows([[_fmt(v) for v in row] for row in result.rows])
        else:
            flat = _flatten(result.outputs)
            writer.writerow(list(flat))
            writer.writerow([_fmt(v) for v in flat.values()])
        return buf.getvalue().rstrip("\n")
    lines = []
    if result.rows is not None:
        cells = [result.columns] + [[_fmt(v) for v in row] for row in result.rows]
        widths = [max(len(r[k]) for r in cells) for k in range(len(result.columns))]
        for row in cells:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)))
    for key, value in _flatten(result.outputs).items():
        lines.append(f"{key}: {_fmt(value)}")
    if result.methods:
        lines.append(f"method: {', '.join(result.methods)}")
    lines.append(f"cross-check: {result.cross_check}")
    return "\n".join(lines)


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, (list, tuple)):
            out[key] = " ".join(_fmt(x) for x in v)
        else:
            out[key] = v
    return out


# Input helpers

def _read_word(text: str, r: int | None) -> Multipermutation:
    return Multipermutation.parse(text.replace(",", " "), r)


def _read_word_file(path: str, r: int | None) -> Multipermutation:
    p = Path(path)
    if not p.is_file():
        raise UlamError(f"{path}: no such file")
    rows = [ln for ln in p.read_text().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if len(rows) != 1:
        raise UlamError(f"{path}: expected exactly one line of symbols, found {len(rows)}")
    return _read_word(rows[0], r)


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# Subcommands

def cmd_distance(args, cap: int) -> CommandResult:
    x = _read_word(args.x, args.r)
    y = _read_word(args.y, x.r)
    d = ulam_distance(x, y)
    res = CommandResult("distance", {"x": str(x), "y": str(y), "r": x.r},
                        {"distance": d, "lcs": x.n - d}, ["lcs"])
    if x.n <= min(cap, args.bfs_max_n):
        bfs = min_translocation_count(x, y, max_n=args.bfs_max_n)
        res.outputs["translocations"] = bfs
        res.methods.append("bfs")
        _agree(res, d == bfs, f"LCS distance {d} vs BFS {bfs}")
    return res


def _agree(res: CommandResult, ok: bool, detail: str):
    if ok:
        if res.cross_check in ("not-run", "ok"):
            res.cross_check = "ok"
        return
    res.cross_check = f"MISMATCH: {detail}"
    raise Mismatch(res)


def _center(spec: str, n: int, r: int) -> tuple[Multipermutation, str]:
    if spec == "identity":
        return identity_multipermutation(n, r), "identity"
    if spec == "omega":
        return omega_multipermutation(n, r), "omega"
    m = _read_word_file(spec, r)
    if m.n != n:
        raise UlamError(f"centre in {spec} has length {m.n}, expected n={n}")
    return m, str(m)


def _closed_form(n: int, r: int, t: int, tag: str) -> int | None:
    if t == 0:
        return 1
    if r == 1 and t in (1, 2, 3) and n > 2 * t - 1:
        return spheres.sphere_size_perm_closed(n, t)
    if t == 1 and tag == "identity":
        return 1 + (n - 1) * (n // r - 1)
    if t == 1 and tag == "omega" and n // r > 2:
        return 1 + (n - 1) ** 2 - (r - 1) * n
    return None


def cmd_sphere(args, cap: int) -> CommandResult:
    n, r, t = args.n, args.r, args.t
    center, tag = _center(args.center, n, r)
    if not 0 <= t <= n - r:
        raise UlamError(f"radius t={t} outside 0..{n - r}")
    is_identity = tag == "identity" or r == 1
    brute_ok = t <= 1 and n <= spheres.RADIUS_ONE_MAX_N or n <= cap

    def tableaux():
        if not is_identity:
            raise UlamError("the tableaux sum applies to the identity centre (or r = 1)")
        return spheres.sphere_size_identity(n, r, t)

    def ballcalc():
        if t != 1:
            raise UlamError("ballcalc gives radius-1 spheres only")
        return spheres.sphere_size_radius1(center).size

    def brute():
        return spheres.sphere_enumerate_size(center, t, max_n=cap)

    runners = {"tableaux": tableaux, "ballcalc": ballcalc, "brute": brute}
    method = args.method
    if method == "auto":
        if is_identity:
            method = "tableaux"
        elif t == 1:
            method = "ballcalc"
        else:
            method = "brute"
    size = runners[method]()
    res = CommandResult("sphere", {"n": n, "r": r, "t": t, "center": tag},
                        {"size": size}, [method])
    checks = []
    if is_identity and method != "tableaux":
        checks.append(("tableaux", tableaux))
    if t == 1 and method != "ballcalc":
        checks.append(("ballcalc", ballcalc))
    if brute_ok and method != "brute":
        checks.append(("brute", brute))
    closed = _closed_form(n, r, t, tag)
    if closed is not None:
        checks.append(("closed-form", lambda: closed))
    for name, fn in checks:
        other = fn()
        res.methods.append(name)
        res.outputs[f"check.{name}"] = other
        _agree(res, other == size, f"{method} {size} vs {name} {other}")
    if t == 1:
        known = spheres.KNOWN_MISPRINTS.get(center.symbols)
        if known:
            res.outputs["note"] = known[1]
    return res


def cmd_dupsets(args, cap: int) -> CommandResult:
    m = _read_word_file(args.m, args.r)
    rep = spheres.sphere_size_radius1(m)
    runs = [(a, b) for a, b in spheres.maximal_alternating_runs(m) if b - a + 1 >= 4]
    res = CommandResult("dupsets", {"m": str(m), "n": m.n, "r": m.r}, {
        "T_n": rep.components["T_n"], "SD": rep.components["SD"], "AD": rep.components["AD"],
        "sphere_radius1": rep.size,
        "alternating_runs": [f"[{a},{b}] len {b - a + 1} psi {spheres.psi(b - a + 1)}"
                             for a, b in runs],
    }, ["ballcalc"])
    if m.n <= spheres.RADIUS_ONE_MAX_N:
        brute = spheres.sphere_enumerate_size(m, 1)
        res.outputs["check.brute"] = brute
        res.methods.append("brute")
        _agree(res, brute == rep.size, f"ballcalc {rep.size} vs enumeration {brute}")
    for note in rep.notes:
        res.outputs["note"] = note
    return res


def cmd_maxsphere(args, cap: int) -> CommandResult:
    r = args.r
    rep = binarycuts.max_sphere_binary(r)
    out = {"n": 2 * r, "max_sphere": rep.size, **rep.components,
           "center": str(rep.center), "U": binarycuts.upper_envelope_U(r)}
    if r >= 2:
        out["L"] = binarycuts.lower_envelope_L(r)
    res = CommandResult("maxsphere", {"r": r}, out, ["closed-form"])
    via_ballcalc = spheres.sphere_size_radius1(rep.center).size
    res.methods.append("ballcalc")
    _agree(res, via_ballcalc == rep.size, f"closed form {rep.size} vs ballcalc {via_ballcalc}")
    if 2 * r <= args.enumerate_max_n:
        brute = spheres.sphere_enumerate_size(rep.center, 1)
        res.methods.append("brute")
        _agree(res, brute == rep.size, f"closed form {rep.size} vs enumeration {brute}")
    return res


def cmd_table5(args, cap: int) -> CommandResult:
    rows = bounds.table5(args.tmax)
    return CommandResult("table5", {"tmax": args.tmax}, {}, ["exact-rational-scan"],
                         rows=[list(row) for row in rows], columns=["t", "min_n"])


def cmd_table6(args, cap: int) -> CommandResult:
    rows = bounds.table6(args.r_list)
    return CommandResult("table6", {"r_list": args.r_list}, {}, ["closed-form"],
                         rows=[list(row) for row in rows], columns=["r", "max_sphere", "U", "ratio"])


def cmd_bounds(args, cap: int) -> CommandResult:
    n, r, d = args.n, args.r, args.d
    reports = []
    if r == 1 and 1 <= d <= n - 1:
        reports.append(bounds.singleton_upper(n, d))
    reports.append(bounds.sphere_packing_upper(n, r))
    if n == 2 * r:
        reports.append(bounds.binary_perfect_lower(r))
        reports.append(bounds.binary_gv_lower(r, d))
    else:
        reports.append(bounds.perfect_lower(n, r))
        reports.append(bounds.gv_lower(n, r, d))
    out = {rep.kind: {"value": rep.value, "raw": rep.raw} for rep in reports}
    return CommandResult("bounds", {"n": n, "r": r, "d": d}, out, [rep.kind for rep in reports])


def cmd_feasible(args, cap: int) -> CommandResult:
    v = bounds.perfect_code_feasibility(args.n, args.t)
    out = {"verdict": v.verdict, "witness": v.witness}
    if args.n >= 2 * args.t:
        out["F"] = bounds.overlapping_F(args.n, args.t)
    return CommandResult("feasible", {"n": args.n, "t": args.t}, out, [v.verdict])


def cmd_greedy(args, cap: int) -> CommandResult:
    code = codesim.greedy_code(args.n, args.r, args.d, max_n=args.max_n)
    ok, bad = codesim.verify_min_distance(code)
    out = {"size": len(code)}
    if args.n != args.r:
        out["gv_lower"] = bounds.applicable_gv_lower(args.n, args.r, args.d).value
    if args.out:
        code.save(args.out)
        out["written"] = args.out
    res = CommandResult("greedy", {"n": args.n, "r": args.r, "d": args.d}, out,
                        ["lexicographic-greedy"])
    detail = "" if ok else f"codewords {bad.i} and {bad.j} at distance {bad.distance}"
    _agree(res, ok, detail)
    return res


def cmd_simulate(args, cap: int) -> CommandResult:
    code = codesim.Codebook.load(args.code)
    run = codesim.simulate_channel(code, args.t, args.trials, args.seed, workers=args.workers)
    res = CommandResult("simulate", {"code": args.code, "t": args.t, "trials": args.trials,
                                     "seed": args.seed, "workers": args.workers},
                        run.as_dict(), ["nearest-codeword"])
    if code.d >= 2 * args.t + 1:
        _agree(res, run.failures == 0, f"{run.failures} decoding failures with d >= 2t+1")
    return res


COMMANDS = {
    "distance": cmd_distance, "sphere": cmd_sphere, "dupsets": cmd_dupsets,
    "maxsphere": cmd_maxsphere, "table5": cmd_table5, "table6": cmd_table6,
    "bounds": cmd_bounds, "feasible": cmd_feasible, "greedy": cmd_greedy,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json",
                     help="emit JSON (stable key order)")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="emit CSV")
    common.add_argument("--max-brute-n", type=int, default=None,
                        help="brute-force size cap (default: $ULAM_MAX_BRUTE_N or 8)")

    p = argparse.ArgumentParser(prog="ulamcodes", description=__doc__.splitlines()[0],
                                parents=[common])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("distance", parents=[common], help="Ulam distance between two words")
    s.add_argument("x", help='symbols, e.g. "6 2 8 5 4 1 3 9 7" or 6,2,8,...')
    s.add_argument("y")
    s.add_argument("--r", type=int, default=None, help="multiplicity (inferred when omitted)")
    s.add_argument("--bfs-max-n", type=int, default=8,
                   help="cross-check with breadth-first search up to this n (default 8)")

    s = sub.add_parser("sphere", parents=[common], help="size of an Ulam sphere")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--center", default="identity", help="FILE, identity or omega")
    s.add_argument("--method", choices=["auto", "tableaux", "ballcalc", "brute"], default="auto")

    s = sub.add_parser("dupsets", parents=[common], help="duplication-set sizes for a word")
    s.add_argument("--m", required=True, help="file holding one line of symbols")
    s.add_argument("--r", type=int, default=None)

    s = sub.add_parser("maxsphere", parents=[common], help="largest binary radius-1 sphere")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--enumerate-max-n", type=int, default=64,
                   help="cross-check by radius-1 enumeration when n = 2r is at most this")

    s = sub.add_parser("table5", parents=[common], help="least n with F(n, t) > 1")
    s.add_argument("--tmax", type=int, default=10)

    s = sub.add_parser("table6", parents=[common], help="binary maximum sphere vs U(r)")
    s.add_argument("--r-list", type=_int_list, default=[10, 100, 1000])

    s = sub.add_parser("bounds", parents=[common], help="code-size bounds")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int, required=True)

    s = sub.add_parser("feasible", parents=[common], help="perfect-code feasibility verdict")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--t", type=int, required=True)

    s = sub.add_parser("greedy", parents=[common], help="lexicographic greedy code")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--out", default=None, help="write the codebook here")
    s.add_argument("--max-n", type=int, default=codesim.GREEDY_MAX_N)

    s = sub.add_parser("simulate", parents=[common], help="seeded translocation channel")
    s.add_argument("--code", required=True, help="codebook file")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--workers", type=int, default=1)
    return p


def run(argv=None, stdout=None, stderr=None) -> tuple[CommandResult | None, int]:
    """Parse *argv*, execute, print, and return ``(result, exit_code)``."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return None, EXIT_OK if exc.code == 0 else EXIT_USAGE
    fmt = args.fmt or "text"
    try:
        cap = args.max_brute_n if args.max_brute_n is not None else brute_max_n()
        result = COMMANDS[args.command](args, cap)
    except Mismatch as exc:
        result = exc.args[0]
        print(render(result, fmt), file=stdout)
        print(f"error: cross-check failed: {result.cross_check}", file=stderr)
        return result, EXIT_MISMATCH
    except CapExceeded as exc:
        print(f"error: {exc} (raise the cap with --max-brute-n or ULAM_MAX_BRUTE_N)", file=stderr)
        return None, EXIT_CAP
    except (UlamError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return None, EXIT_USAGE
    print(render(result, fmt), file=stdout)
    return result, EXIT_OK


def main(argv=None) -> int:
    _, code = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
