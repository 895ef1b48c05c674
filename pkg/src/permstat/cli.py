"""Command line interface: ``permstat <command> [options]``.

Every command emits one record::

    {"command": ..., "parameters": {...}, "results": ..., "formula": ..., "real_digits": 12}

Exact values are strings (``"9/2"``, ``"6"``); reals are strings with 12
significant digits.  ``--format`` (or ``$PERMSTAT_FORMAT``) picks ``json``,
``csv`` or ``table``.  Exit status: 0 ok, 1 domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from . import ensembles, occupancy, thermo
from .exactnum import factorial, format_exact
from .folsym import (BoundedCheckWarning, Signature, check_equivalence, check_total_symmetry, parse,
                     satisfiable_cardinalities, symmetrize, to_text)
from .occupancy import CellUnit, Level, LevelSpec, MacrostateConstraint, StatisticsKind

REAL_DIGITS = 12
FORMAT_ENV = "PERMSTAT_FORMAT"
FORMATS = ("json", "csv", "table")


class LevelFileError(ValueError):
    pass


class UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# --- value rendering ----------------------------------------------------------


def format_real(x: float) -> str:
    if x == 0:
        return "0"
    return format(x, f".{REAL_DIGITS}g")


def _exact_str(v) -> Any:
    if isinstance(v, bool):
        return v
    if isinstance(v, (int, Fraction)):
        return format_exact(v)
    if isinstance(v, float):
        return format_real(v)
    if isinstance(v, dict):
        return {k: _exact_str(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_exact_str(x) for x in v]
    return v


def _table_str(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{format_exact(v)} (~{format_real(float(v))})"
    if isinstance(v, (int, Fraction)):
        return format_exact(v)
    if isinstance(v, float):
        return format_real(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_table_str(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_table_str(x)}" for k, x in v.items()) + "}"
    return str(v)


@dataclass
class Record:
    command: str
    parameters: Dict[str, Any]
    results: Any   # dict of values, or list of row dicts
    formula: str

    def to_json_obj(self) -> dict:
        return {
            "command": self.command,
            "parameters": _exact_str(self.parameters),
            "results": _exact_str(self.results),
            "formula": self.formula,
            "real_digits": REAL_DIGITS,
        }


def emit(record: Record, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.to_json_obj(), indent=2) + "\n"
    rows = record.results if isinstance(record.results, list) else None
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if rows is not None:
            header = list(rows[0]) if rows else []
            w.writerow(header)
            for r in rows:
                w.writerow([_csv_cell(r[k]) for k in header])
        else:
            w.writerow(["key", "value"])
            for k, v in record.results.items():
                w.writerow([k, _csv_cell(v)])
        return buf.getvalue()
    # table
    lines = [f"# {record.command}: {record.formula}"]
    params = ", ".join(f"{k}={_table_str(v)}" for k, v in record.parameters.items())
    lines.append(f"# parameters: {params}")
    if rows is not None:
        if rows:
            header = list(rows[0])
            cells = [[_table_str(r[k]) for k in header] for r in rows]
            widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
            lines.append("  ".join(h.ljust(wd) for h, wd in zip(header, widths)).rstrip())
            for c in cells:
                lines.append("  ".join(x.ljust(wd) for x, wd in zip(c, widths)).rstrip())
    else:
        width = max((len(k) for k in record.results), default=0)
        for k, v in record.results.items():
            lines.append(f"{k.ljust(width)}  {_table_str(v)}")
    return "\n".join(lines) + "\n"


def _csv_cell(v) -> str:
    v = _exact_str(v)
    if isinstance(v, (list, dict)):
        return json.dumps(v, separators=(",", ":"))
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


# --- argument helpers -----------------------------------------------------------


def parse_range(text: str) -> List[int]:
    """``"10,100,1000"``, ``"1:10"`` or ``"10:100:10"`` (inclusive)."""
    out: List[int] = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        m = re.fullmatch(r"(\d+)(?::(\d+)(?::(\d+))?)?", chunk)
        if not m:
            raise UsageError(f"bad range item {chunk!r}; use N, A:B or A:B:STEP")
        a = int(m.group(1))
        if m.group(2) is None:
            out.append(a)
            continue
        b, step = int(m.group(2)), int(m.group(3) or 1)
        if step < 1 or b < a:
            raise UsageError(f"bad range {chunk!r}")
        out.extend(range(a, b + 1, step))
    return out


def parse_counts(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _statistics(text: str) -> StatisticsKind:
    try:
        return StatisticsKind.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


_LEVEL_LINE = re.compile(r"energy\s*=\s*(\S+)\s+degeneracy\s*=\s*(\S+)")


def parse_level_file(text: str) -> LevelSpec:
    """One level per line, ``energy=<p/q> degeneracy=<int>``; ``#`` starts a comment."""
    levels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LEVEL_LINE.fullmatch(line)
        if not m:
            raise LevelFileError(f"line {lineno}: expected 'energy=<p/q> degeneracy=<int>', got {raw.strip()!r}")
        try:
            energy = Fraction(m.group(1))
            degeneracy = int(m.group(2))
        except (ValueError, ZeroDivisionError):
            raise LevelFileError(f"line {lineno}: bad number in {raw.strip()!r}") from None
        if degeneracy < 1:
            raise LevelFileError(f"line {lineno}: degeneracy must be >= 1")
        levels.append(Level(energy, degeneracy))
    if not levels:
        raise LevelFileError("level file lists no levels")
    return LevelSpec(tuple(levels))


def _read_levels(path: str) -> LevelSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_level_file(fh.read())
    except OSError as e:
        raise LevelFileError(f"cannot read level file {path}: {e.strerror}") from None


# --- commands ---------------------------------------------------------------------

_COUNT_FORMULA = {
    StatisticsKind.DISTINGUISHABLE: "W = C^N",
    StatisticsKind.REDUCED_CLASSICAL: "W = (N+C-1)!/(N!(C-1)!)",
    StatisticsKind.BOSE_EINSTEIN: "W = (N+C-1)!/(N!(C-1)!)",
    StatisticsKind.FERMI_DIRAC: "W = C!/(N!(C-N)!)",
}


def cmd_count(a, _stdin) -> Record:
    w = occupancy.count_arrangements(a.cells, a.particles, a.statistics)
    return Record("count", {"cells": a.cells, "particles": a.particles, "statistics": a.statistics.value},
                  {"arrangements": w}, _COUNT_FORMULA[a.statistics])


def cmd_enumerate(a, _stdin) -> Record:
    vectors = occupancy.enumerate_occupations(a.cells, a.particles, a.statistics)
    rows = [{"occupation": list(v), "weight": occupancy.arrangement_weight(v, a.statistics)} for v in vectors]
    return Record("enumerate", {"cells": a.cells, "particles": a.particles, "statistics": a.statistics.value},
                  rows, "occupation vectors n_1..n_C with sum N, lexicographically descending")


def cmd_dist(a, _stdin) -> Record:
    dist = ensembles.distribution(a.cells, a.particles, a.statistics)
    rows = [{"occupation": list(v), "probability": p} for v, p in dist]
    return Record("dist", {"cells": a.cells, "particles": a.particles, "statistics": a.statistics.value},
                  rows, "P(n) = weight(n) / sum of weights")


def cmd_coins(a, _stdin) -> Record:
    probs = ensembles.coins(a.statistics)
    order = ("HT", "HH", "TT")
    return Record("coins", {"statistics": a.statistics.value}, {k: probs[k] for k in order},
                  "two coins, faces H/T: P({H,T}), P({H,H}), P({T,T})")


def cmd_dims(a, _stdin) -> Record:
    d = ensembles.hilbert_dimensions(a.cells, a.particles)
    return Record("dims", {"cells": a.cells, "particles": a.particles},
                  {"full": d.full, "symmetric": d.symmetric, "antisymmetric": d.antisymmetric,
                   "mixed_symmetry": d.mixed_symmetry},
                  "C^N; (N+C-1)!/(N!(C-1)!); C!/(N!(C-N)!)")


def cmd_labels(a, _stdin) -> Record:
    r = ensembles.stable_label_reduction(ensembles.LabeledSystem(a.base_cells, a.labels))
    return Record("labels", {"base_cells": a.base_cells, "labels": a.labels},
                  {"composite_cells": r.composite_cells, "reduced_count": r.reduced_count,
                   "accessible_count": r.accessible_count},
                  "cells = phases x labels; accessible = vectors carrying each label once = base^N")


def _constraint(a) -> MacrostateConstraint:
    if a.n_total is None or a.e_total is None:
        raise UsageError("--levels needs --n-total and --e-total")
    return MacrostateConstraint(a.n_total, a.e_total)


def cmd_macro(a, _stdin) -> Record:
    c = _constraint(a)
    spec = _read_levels(a.levels)
    unit = CellUnit(a.tau)
    states = occupancy.enumerate_macrostates(spec, c)
    w_d = occupancy.count_W_D(spec, c)
    volume = occupancy.reduced_volume_constrained(spec, c, unit)
    results = {
        "macrostates": [list(s) for s in states],
        "W_D": w_d,
        "W_I": occupancy.count_W_I(spec, c),
        "reduced_volume": volume,
        "W_D_over_N_factorial": Fraction(w_d, factorial(c.n_total)),
    }
    params = {"levels": [{"energy": lv.energy, "degeneracy": lv.degeneracy} for lv in spec.levels],
              "n_total": c.n_total, "e_total": c.e_total, "tau": unit.tau}
    return Record("macro", params, results,
                  "W_D = sum N!/prod N_k! prod C_k^N_k; W_I = sum prod (N_k+C_k-1)!/(N_k!(C_k-1)!); "
                  "volume = sum prod (C_k tau)^N_k/N_k!")


def cmd_volume(a, _stdin) -> Record:
    unit = CellUnit(a.tau)
    if a.levels:
        c = _constraint(a)
        spec = _read_levels(a.levels)
        v = occupancy.reduced_volume_constrained(spec, c, unit)
        params = {"levels": a.levels, "n_total": c.n_total, "e_total": c.e_total, "tau": unit.tau}
        return Record("volume", params, {"reduced_volume": v}, "sum over macrostates of prod (C_k tau)^N_k/N_k!")
    if a.cells is None or a.particles is None:
        raise UsageError("volume needs --cells and --particles, or --levels")
    v = occupancy.reduced_volume(a.cells, a.particles, unit)
    return Record("volume", {"cells": a.cells, "particles": a.particles, "tau": unit.tau},
                  {"unreduced_volume": (a.cells * unit.tau) ** a.particles, "reduced_volume": v},
                  "(C tau)^N / N!")


def cmd_limit(a, _stdin) -> Record:
    rows = [{"cells": c, "ratio": occupancy.limit_ratio(c, a.particles)} for c in parse_range(a.cells)]
    return Record("limit", {"cells": a.cells, "particles": a.particles}, rows,
                  "[(N+C-1)!/(N!(C-1)!)] / [C^N/N!]")


def cmd_entropy(a, _stdin) -> Record:
    rep = thermo.entropy_report(thermo.GasSample(a.particles, a.cells))
    return Record("entropy", {"cells": a.cells, "particles": a.particles},
                  {"uncorrected": rep.uncorrected, "corrected": rep.corrected}, "S = ln C^N ; S = ln(C^N/N!)")


def cmd_mix(a, _stdin) -> Record:
    corrected = not a.uncorrected
    species_b = "other" if a.different_species else "gas"
    if a.halves:
        rows = []
        for n in parse_range(a.halves):
            s_a = thermo.GasSample(n, n * a.cells_per_particle)
            s_b = thermo.GasSample(n, n * a.cells_per_particle, species_b)
            s = thermo.mixing_entropy(s_a, s_b, corrected)
            rows.append({"particles_per_half": n, "mixing_entropy": s,
                         "per_particle": s / (2 * n) if n else 0.0})
        params = {"halves": a.halves, "cells_per_particle": a.cells_per_particle,
                  "different_species": a.different_species, "corrected": corrected}
        return Record("mix", params, rows, "S(pooled) - S(a) - S(b), equal halves at fixed density")
    needed = (a.cells_a, a.particles_a, a.cells_b, a.particles_b)
    if any(x is None for x in needed):
        raise UsageError("mix needs --cells-a --particles-a --cells-b --particles-b, or --halves")
    s_a = thermo.GasSample(a.particles_a, a.cells_a)
    s_b = thermo.GasSample(a.particles_b, a.cells_b, species_b)
    s = thermo.mixing_entropy(s_a, s_b, corrected)
    n = a.particles_a + a.particles_b
    params = {"cells_a": a.cells_a, "particles_a": a.particles_a, "cells_b": a.cells_b,
              "particles_b": a.particles_b, "different_species": a.different_species, "corrected": corrected}
    return Record("mix", params, {"mixing_entropy": s, "per_particle": s / n if n else 0.0},
                  "S(pooled) - S(a) - S(b)")


def cmd_extensivity(a, _stdin) -> Record:
    sample = thermo.GasSample(a.particles, a.cells)
    corrected = not a.uncorrected
    d = thermo.extensivity_defect(sample, a.scale, corrected)
    return Record("extensivity", {"cells": a.cells, "particles": a.particles, "scale": a.scale,
                                  "corrected": corrected},
                  {"defect": d, "per_particle": d / (a.scale * a.particles) if a.particles else 0.0},
                  "S(mN, mC) - m S(N, C)")


def cmd_grand(a, _stdin) -> Record:
    sizes = parse_range(a.reservoir)
    ratios = thermo.grand_canonical_limit(a.particles, sizes)
    rows = [{"reservoir": n, "ratio": r} for n, r in zip(sizes, ratios)]
    return Record("grand", {"particles": a.particles, "reservoir": a.reservoir}, rows,
                  "binomial(N*, N) N! / N*^N")


def cmd_et(a, _stdin) -> Record:
    counts = parse_counts(a.counts)
    v = thermo.ehrenfest_trkal_correction(counts, a.atoms)
    return Record("et-correction", {"counts": counts, "atoms": a.atoms}, {"correction": v},
                  "ln(N*! / (N! N'! ...))")


def _formula_text(value: str, stdin: TextIO) -> str:
    return stdin.read() if value == "-" else value


def _sig(a) -> Optional[Signature]:
    return Signature.parse(a.sig) if a.sig else None


def cmd_symmetrize(a, stdin) -> Record:
    sig = _sig(a)
    t = parse(_formula_text(a.formula, stdin), sig)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", BoundedCheckWarning)
        r = symmetrize(t, a.n, check_max_size=a.check_max_size, sig=sig)
    results = {"sentence": to_text(t), "prenex": to_text(r.prenex.to_formula()), "G": to_text(r.g),
               "T_S": to_text(r.t_s)}
    if a.check_max_size:
        eq = check_equivalence(t, r.t_s, a.check_max_size, sig)
        sym = check_total_symmetry(r.g, a.n, a.check_max_size, sig)
        results["cardinalities"] = sorted(r.cardinalities)
        results["equivalence"] = eq.to_dict()
        results["symmetry"] = sym.to_dict()
        results["verdict"] = "equivalent" if eq.ok and sym.ok else "failed"
        results["warnings"] = [str(w.message) for w in caught]
    params = {"n": a.n, "check_max_size": a.check_max_size, "sig": a.sig}
    return Record("symmetrize", params, results, "T_S = exists x1..xN (G^(n)[a:=x] & distinct & total)")


def cmd_check_equiv(a, stdin) -> Record:
    sig = _sig(a)
    t1 = parse(_formula_text(a.formula1, stdin), sig)
    t2 = parse(_formula_text(a.formula2, stdin), sig)
    v = check_equivalence(t1, t2, a.max_size, sig)
    results = {"left": to_text(t1), "right": to_text(t2),
               "verdict": "equivalent" if v.ok else "counterexample", **v.to_dict()}
    return Record("check-equiv", {"max_size": a.max_size, "sig": a.sig}, results,
                  "t1 <-> t2 in every model of size 1..max_size")


def cmd_cardinalities(a, stdin) -> Record:
    sig = _sig(a)
    t = parse(_formula_text(a.formula, stdin), sig)
    sizes = sorted(satisfiable_cardinalities(t, a.max_size, sig))
    return Record("cardinalities", {"max_size": a.max_size, "sig": a.sig},
                  {"sentence": to_text(t), "sizes": sizes},
                  "sizes 1..max_size with a model")


# --- parser ---------------------------------------------------------------------------


def _add_format(p):
    p.add_argument("--format", choices=FORMATS, default=None,
                   help=f"output format (default ${FORMAT_ENV} or table)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgParser(prog="permstat", description="Exact particle statistics and symmetric rewriting of sentences.")
    sub = parser.add_subparsers(dest="command", parser_class=_ArgParser)
    sub.required = True

    def add(name: str, fn: Callable, help: str):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        _add_format(p)
        return p

    def cp(p, stats=True):
        p.add_argument("--cells", type=int, required=True)
        p.add_argument("--particles", type=int, required=True)
        if stats:
            p.add_argument("--statistics", type=_statistics, required=True,
                           help="distinguishable|reduced-classical|be|fd")

    cp(add("count", cmd_count, "number of arrangements"))
    cp(add("enumerate", cmd_enumerate, "list occupation vectors"))
    cp(add("dist", cmd_dist, "probability of each occupation vector"))
    p = add("coins", cmd_coins, "two-coin example")
    p.add_argument("--statistics", type=_statistics, required=True)
    cp(add("dims", cmd_dims, "Hilbert space dimensions"), stats=False)
    p = add("labels", cmd_labels, "stable labels restore distinguishable counting")
    p.add_argument("--base-cells", type=int, required=True)
    p.add_argument("--labels", type=int, required=True)

    def level_args(p, required):
        p.add_argument("--levels", required=required, metavar="FILE")
        p.add_argument("--n-total", type=int)
        p.add_argument("--e-total", type=_fraction)
        p.add_argument("--tau", type=_fraction, default=Fraction(1))

    level_args(add("macro", cmd_macro, "energy-constrained counts"), True)
    p = add("volume", cmd_volume, "reduced phase-space volume")
    p.add_argument("--cells", type=int)
    p.add_argument("--particles", type=int)
    level_args(p, False)
    p = add("limit", cmd_limit, "Bose-Einstein count over C^N/N! (series)")
    p.add_argument("--cells", required=True, help="range, e.g. 10,100,1000 or 1:50")
    p.add_argument("--particles", type=int, required=True)
    cp(add("entropy", cmd_entropy, "entropy with and without ln N!"), stats=False)
    p = add("mix", cmd_mix, "entropy of mixing")
    for flag in ("--cells-a", "--particles-a", "--cells-b", "--particles-b"):
        p.add_argument(flag, type=int)
    p.add_argument("--halves", help="range of particles per half (series mode)")
    p.add_argument("--cells-per-particle", type=int, default=10)
    p.add_argument("--different-species", action="store_true")
    p.add_argument("--uncorrected", action="store_true")
    p = add("extensivity", cmd_extensivity, "S(mN, mC) - m S(N, C)")
    cp(p, stats=False)
    p.add_argument("--scale", type=int, default=2)
    p.add_argument("--uncorrected", action="store_true")
    p = add("grand", cmd_grand, "binomial(N*,N) N!/N*^N (series)")
    p.add_argument("--particles", type=int, required=True)
    p.add_argument("--reservoir", required=True, help="range of N*")
    p = add("et-correction", cmd_et, "ln(N*!/(N! N'! ...))")
    p.add_argument("--counts", required=True, help="comma-separated molecule counts")
    p.add_argument("--atoms", type=int, required=True)

    def sig_arg(p):
        p.add_argument("--sig", help="signature, e.g. 'F/2, P/1'")

    p = add("symmetrize", cmd_symmetrize, "rewrite as exists x1..xN G with G symmetric")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--formula", required=True, help="sentence text, or - for stdin")
    p.add_argument("--check-max-size", type=int)
    sig_arg(p)
    p = add("check-equiv", cmd_check_equiv, "bounded equivalence check")
    p.add_argument("--formula1", required=True)
    p.add_argument("--formula2", required=True)
    p.add_argument("--max-size", type=int, default=3)
    sig_arg(p)
    p = add("cardinalities", cmd_cardinalities, "sizes with a model")
    p.add_argument("--formula", required=True)
    p.add_argument("--max-size", type=int, default=4)
    sig_arg(p)
    return parser


def run(argv: Sequence[str], stdin: Optional[TextIO] = None,
        env: Optional[Dict[str, str]] = None) -> Tuple[int, str, str]:
    """Run one command; returns ``(status, stdout, stderr)``."""
    env = os.environ if env is None else env
    stdin = stdin if stdin is not None else sys.stdin
    try:
        args = build_parser().parse_args(list(argv))
        fmt = args.format or env.get(FORMAT_ENV, "table")
        if fmt not in FORMATS:
            raise UsageError(f"${FORMAT_ENV} must be one of {', '.join(FORMATS)}, got {fmt!r}")
        record = args.fn(args, stdin)
    except UsageError as e:
        return 2, "", f"usage error: {e}\n"
    except (ValueError, LookupError, ArithmeticError) as e:
        return 1, "", f"error: {e}\n"
    return 0, emit(record, fmt), ""


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if any(a in ("-h", "--help") for a in argv):
        build_parser().parse_args(list(argv))
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
