"""Command-line front end: list built-in banks, elevate, verify, render.

Bank references are either a family spec (``haar``, ``cdf:4,4``, ``db:4``)
or a path to a bank JSON file. Exit codes: 0 success, 2 bad input or
inadmissible elevation, 3 verification failure.
"""

import argparse
import json
import os
import sys
import warnings

from . import families
from .cascade import cascade_scaling, cascade_wavelet
from .errors import (
    DegenerateDualWarning,
    NoConvergence,
    NotDivisible,
    TooShort,
    UnsupportedFilter,
    WaveToolError,
)
from .filters import (
    Filter,
    FilterBank,
    elevate,
    root_multiplicity,
    support,
    symmetry_type,
)
from .spectral import orthonormality_deviation, pr_residual, riesz_profile

PR_TOL = 1e-9


# ---------------------------------------------------------------------------
# bank JSON (fixed layout, %.17g coefficients: byte-identical round trips)

def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def dumps_bank(bank: FilterBank) -> str:
    def filter_obj(f: Filter) -> str:
        coeffs = ", ".join(_fmt(c) for c in f.coeffs)
        return f'{{"offset": {f.offset}, "coeffs": [{coeffs}]}}'

    return (
        "{\n"
        f'  "name": {json.dumps(bank.name)},\n'
        '  "convention": {"lowpass_sum": 1},\n'
        f'  "primal": {filter_obj(bank.primal)},\n'
        f'  "dual": {filter_obj(bank.dual)}\n'
        "}\n"
    )


def save_bank(bank: FilterBank, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_bank(bank))


def load_bank(path: str) -> FilterBank:
    with open(path) as fh:
        doc = json.load(fh)
    return FilterBank(
        str(doc["name"]),
        Filter(int(doc["primal"]["offset"]), doc["primal"]["coeffs"]),
        Filter(int(doc["dual"]["offset"]), doc["dual"]["coeffs"]),
    )


def resolve_bank(ref: str) -> FilterBank:
    if ref.endswith(".json") or os.path.exists(ref):
        return load_bank(ref)
    return families.from_spec(ref)


# ---------------------------------------------------------------------------
# verification report

def build_report(bank: FilterBank, gridsize: int = 1024) -> dict:
    def riesz_entry(f: Filter):
        profile = riesz_profile(f, gridsize)
        if profile.non_riesz:
            return "NonRiesz"
        return [profile.lower, profile.upper]

    def symmetry_entry(f: Filter):
        sym = symmetry_type(f)
        return {"kind": sym.kind, "center": sym.center}

    report = {
        "name": bank.name,
        "pr_residual": pr_residual(bank, gridsize),
        "primal_multiplicity": root_multiplicity(bank.primal, -1),
        "dual_multiplicity": root_multiplicity(bank.dual, -1),
        "primal_support": list(support(bank.primal)),
        "dual_support": list(support(bank.dual)),
        "symmetry": {
            "primal": symmetry_entry(bank.primal),
            "dual": symmetry_entry(bank.dual),
        },
        "riesz_primal": riesz_entry(bank.primal),
        "riesz_dual": riesz_entry(bank.dual),
        "orthonormal_deviation": orthonormality_deviation(bank.primal, gridsize),
        "warnings": [],
    }
    if len(bank.primal) == 1 or len(bank.dual) == 1:
        report["warnings"].append("DegenerateDual")
    return report


def report_passes(report: dict) -> bool:
    return (
        report["pr_residual"] < PR_TOL
        and report["riesz_primal"] != "NonRiesz"
        and report["riesz_dual"] != "NonRiesz"
    )


# ---------------------------------------------------------------------------
# commands

def cmd_list() -> int:
    for name in families.family_names():
        print(name)
    return 0


def cmd_elevate(ref: str, s: int, output: str) -> int:
    try:
        bank = resolve_bank(ref)
    except (WaveToolError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", DegenerateDualWarning)
        try:
            elevated = elevate(bank, s)
        except (NotDivisible, TooShort) as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return 2
        except WaveToolError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    for item in caught:
        print(f"warning: {item.message}", file=sys.stderr)
    save_bank(elevated, output)
    return 0


def cmd_verify(ref: str) -> int:
    try:
        bank = resolve_bank(ref)
    except (WaveToolError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = build_report(bank)
    print(json.dumps(report, indent=2))
    return 0 if report_passes(report) else 3


def cmd_render(ref: str, J: int, output: str) -> int:
    try:
        bank = resolve_bank(ref)
    except (WaveToolError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    def scaling_column(side):
        f = bank.primal if side == "primal" else bank.dual
        if len(f) == 1:
            return None
        try:
            return cascade_scaling(f, J)
        except NoConvergence:
            # no continuous limit; draw the resolution-J refinement instead
            print(
                f"warning: {side} scaling cascade does not converge, "
                f"rendering the {J}-round refinement",
                file=sys.stderr,
            )
            return cascade_scaling(f, J, iterations=max(J, 1), check_convergence=False)

    def wavelet_column(side):
        if len(bank.primal if side == "primal" else bank.dual) == 1:
            return None
        try:
            return cascade_wavelet(bank, side, J)
        except NoConvergence:
            return cascade_wavelet(
                bank, side, J, iterations=max(J, 1), check_convergence=False
            )
        except UnsupportedFilter:
            return None

    columns = {
        "phi": scaling_column("primal"),
        "phi_dual": scaling_column("dual"),
        "psi": wavelet_column("primal"),
        "psi_dual": wavelet_column("dual"),
    }
    step = 2.0**-J
    present = [c for c in columns.values() if c is not None]
    x0 = min(c.origin for c in present)
    x1 = max(c.support()[1] for c in present)
    n = int(round((x1 - x0) / step)) + 1

    lines = ["x,phi,phi_dual,psi,psi_dual"]
    cells = {name: [""] * n for name in columns}
    for name, c in columns.items():
        if c is None:
            continue
        start = int(round((c.origin - x0) / step))
        for i, v in enumerate(c.values):
            cells[name][start + i] = _fmt(v)
    for i in range(n):
        x = x0 + i * step
        lines.append(
            ",".join(
                [_fmt(x)]
                + [cells[name][i] for name in ("phi", "phi_dual", "psi", "psi_dual")]
            )
        )
    with open(output, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="wavetool",
        description="Elevate biorthogonal wavelet filter banks and verify them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print available family specs")

    p_elev = sub.add_parser("elevate", help="elevate a bank and write it as JSON")
    p_elev.add_argument("bank", help="family spec (haar, cdf:4,4, db:4) or JSON path")
    p_elev.add_argument("-s", "--order", type=int, required=True)
    p_elev.add_argument("-o", "--output", required=True)

    p_ver = sub.add_parser("verify", help="print a verification report as JSON")
    p_ver.add_argument("bank")

    p_ren = sub.add_parser("render", help="write plot-ready CSV samples")
    p_ren.add_argument("bank")
    p_ren.add_argument("-J", "--resolution", type=int, default=8)
    p_ren.add_argument("-o", "--output", required=True)

    args = parser.parse_args(argv)
    if args.command == "list":
        return cmd_list()
    if args.command == "elevate":
        return cmd_elevate(args.bank, args.order, args.output)
    if args.command == "verify":
        return cmd_verify(args.bank)
    if args.command == "render":
        return cmd_render(args.bank, args.resolution, args.output)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
