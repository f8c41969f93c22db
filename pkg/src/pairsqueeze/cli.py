"""Command-line front end.

Three subcommands: ``analyze`` reports the full squeezing summary of one
state, ``scan`` sweeps the amplitude grid into a CSV, and ``verify`` runs
the Fock-oracle agreement checks.  All output is deterministic: identical
flags produce byte-identical bytes.

Exit codes: 0 ok, 1 verification failure, 2 domain/usage error, 3 numeric
overflow, 4 I/O error.
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

import numpy as np

from .errors import DomainError, SeriesOverflowError
from .fock import (
    default_ncut,
    numeric_first_moments,
    numeric_photons,
    numeric_variance,
    pair_state,
    quadrature_ops,
)
from .linalg import max_abs, sym_eigen
from .pair_coherent import (
    PairParams,
    analytic_spectrum,
    heterodyne_minimizer,
    is_squeezed,
    photon_numbers,
    squeeze_report,
    variance_matrix,
)

CSV_HEADER = "abs_zeta,arg_zeta,q,n1,n2,e_down,e_up,squeezed"

#: Oracle-agreement tolerances applied by ``verify``.
VERIFY_TOLS = {
    "tail_bound": 1e-12,
    "variance": 1e-8,
    "photon_numbers": 1e-10,
    "first_moments": 1e-10,
}

_VERIFY_MODULI = (0.1, 0.5, 1.0, 2.0, 4.0)
_VERIFY_PHASES = (0.0, 0.5 * math.pi, math.pi, 1.5 * math.pi)


def _fmt(x: float) -> str:
    """Decimal rendering with 12 significant digits (trailing zeros trimmed)."""
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(float(x), ".12g")


def _bool(x: bool) -> str:
    return "true" if x else "false"


def _analyze_record(params: PairParams) -> dict:
    rep = squeeze_report(params)
    v = variance_matrix(params)
    spectrum = sym_eigen(v)
    consistent = abs(float(spectrum.values[0]) - rep.e_down) <= 1e-10
    return {
        "zeta_re": params.zeta.real,
        "zeta_im": params.zeta.imag,
        "q": params.q,
        "n1": rep.n1,
        "n2": rep.n2,
        "variance": [[float(x) for x in row] for row in v],
        "e_down": rep.e_down,
        "e_up": rep.e_up,
        "theta": rep.theta,
        "phi": rep.phi,
        "psi_star": rep.psi_star,
        "squeezed": rep.squeezed,
        "consistent": consistent,
    }


def _render_value(value) -> object:
    """Round-trip floats through the 12-digit rendering for JSON output."""
    if isinstance(value, bool) or isinstance(value, int):
        return value
    if isinstance(value, float):
        if math.isnan(value):
            return None
        return float(_fmt(value))
    if isinstance(value, list):
        return [_render_value(v) for v in value]
    return value


def cmd_analyze(args) -> int:
    params = PairParams(complex(args.re, args.im), args.q)
    record = _analyze_record(params)
    if args.json:
        print(json.dumps({k: _render_value(v) for k, v in record.items()}))
        return 0
    for key, value in record.items():
        if key == "variance":
            for i, row in enumerate(value):
                print(f"variance[{i}]  " + " ".join(_fmt(x) for x in row))
        elif isinstance(value, bool):
            print(f"{key:<12}{_bool(value)}")
        elif isinstance(value, int):
            print(f"{key:<12}{value}")
        else:
            print(f"{key:<12}{'nan' if math.isnan(value) else _fmt(value)}")
    return 0


def _parse_q_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"bad q list {text!r}: {exc}") from exc
    if not values:
        raise DomainError("q list is empty")
    if any(v < 0 for v in values):
        raise DomainError("q values must be nonnegative")
    return sorted(set(values))


def cmd_scan(args) -> int:
    q_list = _parse_q_list(args.q)
    if args.steps < 2:
        raise DomainError(f"steps must be >= 2, got {args.steps}")
    if args.zeta_min < 0:
        raise DomainError("zeta-min must be >= 0")
    if args.zeta_max <= args.zeta_min:
        raise DomainError("zeta-max must exceed zeta-min")
    if args.phase_sweep < 0:
        raise DomainError("phase-sweep must be >= 0")
    grid = np.linspace(args.zeta_min, args.zeta_max, args.steps)
    if args.phase_sweep > 0:
        phases = [2.0 * math.pi * k / args.phase_sweep for k in range(args.phase_sweep)]
    else:
        phases = [args.phase]

    lines = [CSV_HEADER]
    for q in q_list:
        for x in grid:
            for phase in phases:
                params = PairParams(x * cmath.exp(1j * phase), q)
                n1, n2 = photon_numbers(params)
                e_down, e_up = analytic_spectrum(params)
                lines.append(
                    ",".join(
                        (
                            _fmt(x),
                            _fmt(phase),
                            str(q),
                            _fmt(n1),
                            _fmt(n2),
                            _fmt(e_down),
                            _fmt(e_up),
                            _bool(is_squeezed(params)),
                        )
                    )
                )
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    if not (0 <= args.q_max <= 6):
        raise DomainError(f"q-max must lie in [0, 6], got {args.q_max}")
    if not (0 < args.zeta_max <= 5):
        raise DomainError(f"zeta-max must lie in (0, 5], got {args.zeta_max}")
    moduli = [x for x in _VERIFY_MODULI if x <= args.zeta_max] or [args.zeta_max]
    q_values = list(range(args.q_max + 1))

    print(f"grid: q in 0..{args.q_max}, |zeta| in {{{', '.join(_fmt(x) for x in moduli)}}}, "
          f"{len(_VERIFY_PHASES)} phases")
    worst = {name: 0.0 for name in VERIFY_TOLS}
    offsets = []
    for q in q_values:
        for x in moduli:
            ncut = default_ncut(PairParams(complex(x, 0.0), q))
            ops = quadrature_ops(q, ncut)
            for phase in _VERIFY_PHASES:
                params = PairParams(x * cmath.exp(1j * phase), q)
                state = pair_state(params, ncut)
                worst["tail_bound"] = max(worst["tail_bound"], state.tail_bound)
                v_num = numeric_variance(state, ops)
                v_ana = variance_matrix(params)
                worst["variance"] = max(worst["variance"], max_abs(v_num - v_ana))
                n_num = numeric_photons(state)
                n_ana = photon_numbers(params)
                worst["photon_numbers"] = max(
                    worst["photon_numbers"],
                    abs(n_num[0] - n_ana[0]),
                    abs(n_num[1] - n_ana[1]),
                )
                worst["first_moments"] = max(
                    worst["first_moments"],
                    float(np.max(np.abs(numeric_first_moments(state, ops)))),
                )
                psi_star = heterodyne_minimizer(params)[0]
                offset = (psi_star - cmath.phase(params.zeta)) % (2.0 * math.pi)
                offsets.append((q, x, phase, offset))

    print("mixer offset psi* - arg(zeta) (mod 2pi) per grid point:")
    for q, x, phase, offset in offsets:
        print(f"  q={q} |zeta|={_fmt(x)} phase={_fmt(phase)}: {_fmt(offset)}")

    ok = True
    for name, tol in VERIFY_TOLS.items():
        passed = worst[name] <= tol
        ok = ok and passed
        print(
            f"check {name:<16} max {worst[name]:.3e}  tol {tol:.0e}  "
            f"{'pass' if passed else 'FAIL'}"
        )
    print(f"verify: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pairsqueeze",
        description="Squeezing analysis of two-mode pair coherent states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="report one state")
    p_analyze.add_argument("--re", type=float, default=0.0, help="Re zeta")
    p_analyze.add_argument("--im", type=float, default=0.0, help="Im zeta")
    p_analyze.add_argument(
        "--q",
        type=int,
        required=True,
        help="photon-number difference (>= 0; a negative difference is the "
        "same state with the mode labels swapped)",
    )
    p_analyze.add_argument("--json", action="store_true", help="emit one JSON object")
    p_analyze.set_defaults(func=cmd_analyze)

    p_scan = sub.add_parser("scan", help="amplitude sweep to CSV")
    p_scan.add_argument("--q", required=True, help="comma-separated q values")
    p_scan.add_argument("--zeta-min", type=float, required=True, dest="zeta_min")
    p_scan.add_argument("--zeta-max", type=float, required=True, dest="zeta_max")
    p_scan.add_argument("--steps", type=int, required=True, help="grid points (>= 2)")
    p_scan.add_argument("--phase", type=float, default=0.0, help="arg zeta (constant)")
    p_scan.add_argument(
        "--phase-sweep",
        type=int,
        default=0,
        dest="phase_sweep",
        help="evaluate N equally spaced phases instead of --phase "
        "(spectrum columns are phase-independent; for invariance testing)",
    )
    p_scan.add_argument("--out", required=True, help="output CSV path")
    p_scan.set_defaults(func=cmd_scan)

    p_verify = sub.add_parser("verify", help="Fock-oracle agreement checks")
    p_verify.add_argument("--q-max", type=int, required=True, dest="q_max")
    p_verify.add_argument("--zeta-max", type=float, required=True, dest="zeta_max")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SeriesOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
