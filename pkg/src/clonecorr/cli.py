"""Command-line surface: parameter sweeps, the separability reference table,
single-point reports, and a self-test property suite.

Output files are plot-ready CSV or JSON with floats at 12 significant
digits and deterministic row order, so identical configurations produce
byte-identical files.

Exit codes: 0 success, 2 configuration error, 3 reference-table mismatch,
4 I/O error (1 for self-test failures).
"""

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from . import hermat
from .cloner import (InputState, build_output_state, check_machine_constraints,
                     clone_fidelity, valid_j_range)
from .discord import (MeasurementBasis, conditional_entropy_curve, discord_at,
                      discord_min, discord_surface, mutual_info_i, mutual_info_j)
from .errors import DomainError
from .separability import classify, scan_grid, separable_intervals, w3_closed, w4_closed

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_MISMATCH = 3
EXIT_IO = 4

CSV_HEADER = "alpha,j,t,discord,w3,w4,min_ppt_eig,physical,classification"

# Separability windows the table1 command checks against, per input alpha;
# None marks rows with no separable machine parameter at all.
REFERENCE_INTERVALS = {
    0.1: None, 0.2: None, 0.3: None, 0.4: None, 0.5: None,
    0.6: (0.196, 0.238),
    0.7: (0.191, 0.250),
    0.8: (0.196, 0.238),
    0.9: None,
}
REFERENCE_TOL = 0.002

DISCORD_BANNER = (
    "*** DISCORDANT BUT SEPARABLE: nonclassical correlation without entanglement ***")


class ConfigError(ValueError):
    """Bad run configuration (flags, config file, or grids)."""


@dataclass
class RunConfig:
    alpha_list: list = field(default_factory=lambda: [round(0.1 * k, 1) for k in range(1, 10)])
    j_min: float = 0.01
    j_max: float = 0.50
    j_step: float = 0.005
    t_points: int = 91
    scan_phase: bool = False
    output_format: str = "csv"
    output_path: str | None = None
    enforce_psd: bool = False
    seed: int = 0

    def validate(self):
        if not self.alpha_list:
            raise ConfigError("alpha_list is empty")
        for a in self.alpha_list:
            if not 0.0 <= a <= 1.0:
                raise ConfigError(f"alpha {a} outside [0, 1]")
        if not (0.0 <= self.j_min <= self.j_max <= 0.5):
            raise ConfigError(
                f"need 0 <= j_min <= j_max <= 0.5, got [{self.j_min}, {self.j_max}]")
        if self.j_step <= 0:
            raise ConfigError(f"j_step must be positive, got {self.j_step}")
        if self.t_points < 1:
            raise ConfigError(f"t_points must be >= 1, got {self.t_points}")
        if self.output_format not in ("csv", "json"):
            raise ConfigError(f"output format must be csv or json, got {self.output_format!r}")
        return self

    def j_grid(self):
        js = np.round(np.arange(self.j_min, self.j_max + self.j_step / 2, self.j_step), 12)
        return js[(js >= 0.0) & (js <= 0.5)]

    def t_grid(self):
        return np.linspace(0.0, np.pi / 2, self.t_points)


def _parse_bool(text):
    low = text.lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


def load_config_file(path):
    """Flat key=value config; '#' starts a comment, keys mirror RunConfig fields."""
    parsers = {
        "alpha_list": lambda v: [float(x) for x in v.replace(",", " ").split()],
        "j_min": float, "j_max": float, "j_step": float,
        "t_points": int, "seed": int,
        "scan_phase": _parse_bool, "enforce_psd": _parse_bool,
        "output_format": str, "output_path": str,
    }
    out = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if not eq or not key:
                raise ConfigError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
            if key not in parsers:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            try:
                out[key] = parsers[key](value)
            except ConfigError:
                raise
            except ValueError as exc:
                raise ConfigError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return out


def build_config(args):
    """Defaults, then config file, then explicit flags."""
    cfg = RunConfig()
    if getattr(args, "config", None):
        for key, value in load_config_file(args.config).items():
            setattr(cfg, key, value)
    overrides = {
        "alpha_list": getattr(args, "alpha", None),
        "j_min": getattr(args, "j_min", None),
        "j_max": getattr(args, "j_max", None),
        "j_step": getattr(args, "j_step", None),
        "t_points": getattr(args, "t_points", None),
        "scan_phase": getattr(args, "scan_phase", None),
        "output_format": getattr(args, "format", None),
        "output_path": getattr(args, "out", None),
        "enforce_psd": getattr(args, "enforce_psd", None),
        "seed": getattr(args, "seed", None),
    }
    for key, value in overrides.items():
        if value is not None:
            setattr(cfg, key, value)
    return cfg.validate()


def _fmt(x):
    """12 significant digits; empty string for missing values."""
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, str):
        return x
    return format(x, ".12g")


def _jnum(x):
    return None if x is None else float(format(x, ".12g"))


@dataclass(frozen=True)
class SweepRecord:
    """One serialized grid sample; fields are recomputable from (alpha, j, t)."""
    alpha: float
    j: float
    t: float | None
    discord: float
    w3: float
    w4: float
    min_ppt_eig: float
    physical: bool
    classification: str


def records_to_csv(records):
    lines = [CSV_HEADER]
    for r in records:
        lines.append(",".join([
            _fmt(r.alpha), _fmt(r.j), _fmt(r.t), _fmt(r.discord),
            _fmt(r.w3), _fmt(r.w4), _fmt(r.min_ppt_eig),
            _fmt(r.physical), r.classification,
        ]))
    return "\n".join(lines) + "\n"


def records_to_json(records):
    payload = [{
        "alpha": _jnum(r.alpha), "j": _jnum(r.j), "t": _jnum(r.t),
        "discord": _jnum(r.discord), "w3": _jnum(r.w3), "w4": _jnum(r.w4),
        "min_ppt_eig": _jnum(r.min_ppt_eig), "physical": r.physical,
        "classification": r.classification,
    } for r in records]
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def surface_records(alpha, cfg):
    """SweepRecords for one alpha over the configured (j, t) grid, sorted."""
    state = InputState.from_alpha(alpha)
    j_grid = cfg.j_grid()
    if j_grid.size == 0:
        raise ConfigError("empty j grid")
    rows = discord_surface(state, j_grid, cfg.t_grid())
    # per-j separability data, shared across the t rows
    per_j = {}
    for j in j_grid:
        rho = build_output_state(state, float(j))
        sigma = hermat.partial_transpose_b(rho)
        min_ppt = float(hermat.eig_sym4(sigma)[-1])
        w3 = hermat.principal_minor(sigma, 3)
        w4 = hermat.principal_minor(sigma, 4)
        per_j[float(j)] = (w3, w4, min_ppt)
    records = []
    for row in rows:
        if cfg.enforce_psd and not row.physical:
            continue
        w3, w4, min_ppt = per_j[row.j]
        if not row.physical:
            classification = "Unphysical"
        else:
            classification = "Separable" if min_ppt >= hermat.STATE_EIG_FLOOR else "Entangled"
        records.append(SweepRecord(
            alpha=alpha, j=row.j, t=row.t, discord=row.discord,
            w3=w3, w4=w4, min_ppt_eig=min_ppt,
            physical=row.physical, classification=classification,
        ))
    return records


def run_surface(cfg, out_stream=None):
    out_stream = out_stream if out_stream is not None else sys.stdout
    out_dir = cfg.output_path or "surface_out"
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for alpha in cfg.alpha_list:
        records = surface_records(alpha, cfg)
        text = records_to_csv(records) if cfg.output_format == "csv" else records_to_json(records)
        path = os.path.join(out_dir, f"surface_alpha{_fmt(alpha)}.{cfg.output_format}")
        with open(path, "w") as fh:
            fh.write(text)
        written.append((alpha, path, len(records)))
        print(f"alpha={_fmt(alpha)}: wrote {len(records)} rows -> {path}", file=out_stream)
    return written


def reference_for(alpha):
    """(key_found, expected interval or None) for a table1 row."""
    for key, expected in REFERENCE_INTERVALS.items():
        if abs(alpha - key) < 1e-9:
            return True, expected
    return False, None


def table1_rows(cfg):
    """Computed separable intervals per alpha with reference comparison.

    Returns (rows, any_mismatch); each row is a dict with keys alpha,
    intervals, classification, expected, match (match is None for alphas
    outside the reference table).
    """
    rows = []
    any_mismatch = False
    for alpha in cfg.alpha_list:
        intervals = separable_intervals(alpha)
        has_ref, expected = reference_for(alpha)
        match = None
        if has_ref:
            if expected is None:
                match = len(intervals) == 0
            else:
                match = (len(intervals) == 1
                         and abs(intervals[0].lo - expected[0]) <= REFERENCE_TOL + 1e-12
                         and abs(intervals[0].hi - expected[1]) <= REFERENCE_TOL + 1e-12)
            if not match:
                any_mismatch = True
        rows.append({
            "alpha": alpha,
            "intervals": intervals,
            "classification": "Separable" if intervals else "Inseparable",
            "expected": expected if has_ref else None,
            "has_reference": has_ref,
            "match": match,
        })
    return rows, any_mismatch


def _format_interval(iv):
    return f"[{iv.lo:.3f}, {iv.hi:.3f}]"


def run_table1(cfg, out_stream=None):
    out_stream = out_stream if out_stream is not None else sys.stdout
    rows, any_mismatch = table1_rows(cfg)
    print(f"{'alpha':>6}  {'separable j':<22} {'verdict':<12} {'reference':<18} match",
          file=out_stream)
    for row in rows:
        ivs = ", ".join(_format_interval(iv) for iv in row["intervals"]) or "(none)"
        if not row["has_reference"]:
            ref, mark = "-", "-"
        elif row["expected"] is None:
            ref, mark = "(none)", "ok" if row["match"] else "MISMATCH"
        else:
            ref = f"[{row['expected'][0]:.3f}, {row['expected'][1]:.3f}]"
            mark = "ok" if row["match"] else "MISMATCH"
        print(f"{_fmt(row['alpha']):>6}  {ivs:<22} {row['classification']:<12} {ref:<18} {mark}",
              file=out_stream)

    if cfg.output_path:
        if cfg.output_format == "json":
            payload = [{
                "alpha": _jnum(row["alpha"]),
                "intervals": [[_jnum(iv.lo), _jnum(iv.hi)] for iv in row["intervals"]],
                "classification": row["classification"],
                "reference": (list(row["expected"]) if row["expected"] else None),
                "match": row["match"],
            } for row in rows]
            text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
        else:
            lines = ["alpha,lo,hi,classification,reference_lo,reference_hi,match"]
            for row in rows:
                ref_lo = row["expected"][0] if row["expected"] else None
                ref_hi = row["expected"][1] if row["expected"] else None
                if row["intervals"]:
                    for iv in row["intervals"]:
                        lines.append(",".join([
                            _fmt(row["alpha"]), _fmt(iv.lo), _fmt(iv.hi),
                            row["classification"], _fmt(ref_lo), _fmt(ref_hi),
                            _fmt(row["match"]) if row["match"] is not None else "-",
                        ]))
                else:
                    lines.append(",".join([
                        _fmt(row["alpha"]), "", "", row["classification"],
                        _fmt(ref_lo), _fmt(ref_hi),
                        _fmt(row["match"]) if row["match"] is not None else "-",
                    ]))
            text = "\n".join(lines) + "\n"
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
        print(f"wrote {cfg.output_path}", file=out_stream)

    return EXIT_MISMATCH if any_mismatch else EXIT_OK


def point_report(alpha, j, scan_phase=False):
    """All single-point quantities as a plain dict (JSON-ready)."""
    state = InputState.from_alpha(alpha)
    window = valid_j_range(state)
    rho = build_output_state(state, j)
    min_eig = float(hermat.eig_sym4(rho)[-1])
    if min_eig < hermat.STATE_EIG_FLOOR:
        window_text = f"[{window[0]:.6f}, {window[1]:.6f}]" if window else "(empty)"
        exc = DomainError(
            f"output state unphysical at alpha={alpha}, j={j} "
            f"(minimum eigenvalue {min_eig:.6e}); physical j range for "
            f"alpha={alpha} is {window_text}")
        exc.min_eigenvalue = min_eig
        raise exc
    result = discord_min(rho, scan_phase=scan_phase)
    verdict = classify(state, j)
    constraints = check_machine_constraints(j)
    return {
        "alpha": alpha,
        "j": j,
        "physical": True,
        "min_eigenvalue": min_eig,
        "valid_j_range": list(window) if window else None,
        "fidelity": clone_fidelity(state, j),
        "machine_constraints_satisfied": constraints.satisfied,
        "discord": {
            "discord": result.discord,
            "optimal_t": result.optimal_t,
            "optimal_phi": result.optimal_phi,
            "entropy_joint": result.entropy_joint,
            "entropy_a": result.entropy_a,
            "entropy_b": result.entropy_b,
            "conditional_entropy": result.conditional_entropy,
            "mutual_info_j": result.mutual_info_j,
            "mutual_info_i": result.mutual_info_i,
        },
        "separability": {
            "classification": verdict.classification,
            "w3": verdict.w3,
            "w4": verdict.w4,
            "min_ppt_eigenvalue": verdict.min_ppt_eigenvalue,
            "agreement": verdict.agreement,
        },
        "discordant_but_separable": (
            verdict.classification == "Separable" and result.discord > 1e-6),
    }


def run_point(alpha, j, output_format="text", scan_phase=False, out_stream=None):
    out_stream = out_stream if out_stream is not None else sys.stdout
    report = point_report(alpha, j, scan_phase=scan_phase)
    if output_format == "json":
        def walk(x):
            if isinstance(x, dict):
                return {k: walk(v) for k, v in x.items()}
            if isinstance(x, list):
                return [walk(v) for v in x]
            if isinstance(x, float):
                return _jnum(x)
            return x
        print(json.dumps(walk(report), indent=2, sort_keys=True), file=out_stream)
        return EXIT_OK

    d = report["discord"]
    s = report["separability"]
    print(f"point alpha={_fmt(alpha)} j={_fmt(j)}", file=out_stream)
    print(f"  physical:            yes (min eigenvalue {report['min_eigenvalue']:.3e})",
          file=out_stream)
    lo, hi = report["valid_j_range"]
    print(f"  physical j range:    [{lo:.6f}, {hi:.6f}]", file=out_stream)
    print(f"  clone fidelity:      {report['fidelity']:.12g}", file=out_stream)
    print(f"  discord (min):       {d['discord']:.12g} bits at t={d['optimal_t']:.9f}"
          + (f", phi={d['optimal_phi']:.9f}" if scan_phase else ""), file=out_stream)
    print(f"  entropies (bits):    H(a)={d['entropy_a']:.9f} H(b)={d['entropy_b']:.9f} "
          f"H(ab)={d['entropy_joint']:.9f} H(a|b)={d['conditional_entropy']:.9f}",
          file=out_stream)
    print(f"  mutual information:  J={d['mutual_info_j']:.9f} I={d['mutual_info_i']:.9f}",
          file=out_stream)
    print(f"  separability:        {s['classification']} "
          f"(W3={s['w3']:.6g}, W4={s['w4']:.6g}, min PPT eig={s['min_ppt_eigenvalue']:.6g}, "
          f"tests agree: {s['agreement']})", file=out_stream)
    if report["discordant_but_separable"]:
        print(f"  {DISCORD_BANNER}", file=out_stream)
    return EXIT_OK


def run_selftest(cfg, out_stream=None):
    """Property suite over randomized inputs; one PASS/FAIL line per property."""
    out_stream = out_stream if out_stream is not None else sys.stdout
    rng = np.random.default_rng(cfg.seed)
    failures = 0

    def check(name, ok):
        nonlocal failures
        if ok:
            print(f"[PASS] {name}", file=out_stream)
        else:
            failures += 1
            print(f"[FAIL] {name}", file=out_stream)

    def random_sym4():
        m = rng.standard_normal((4, 4))
        return (m + m.T) / 2

    def random_herm2():
        d = rng.standard_normal(2)
        off = rng.standard_normal() + 1j * rng.standard_normal()
        return np.array([[d[0], off], [np.conj(off), d[1]]])

    def random_state_pair():
        alpha = rng.uniform(0.0, 1.0)
        j = rng.uniform(0.0, 0.5)
        return alpha, j

    ok = True
    for _ in range(200):
        m = random_sym4()
        ev = hermat.eig_sym4(m)
        ok &= abs(ev.sum() - np.trace(m)) < 1e-12
        ok &= abs((ev ** 2).sum() - (m ** 2).sum()) < 1e-10
        m2 = random_herm2()
        ev2 = hermat.eig_herm2(m2)
        ok &= abs(ev2.sum() - np.trace(m2).real) < 1e-12
        ok &= abs((ev2 ** 2).sum() - (np.abs(m2) ** 2).sum()) < 1e-10
    check("eigenvalues reconstruct trace and Frobenius norm", bool(ok))

    ok = True
    for _ in range(100):
        m = random_sym4()
        s = hermat.partial_transpose_b(m)
        ok &= np.array_equal(hermat.partial_transpose_b(s), m)
        ok &= np.abs(hermat.partial_trace(s, "a") - hermat.partial_trace(m, "a")).max() <= 1e-14
        ok &= abs(hermat.principal_minor(m, 4) - np.prod(hermat.eig_sym4(m))) < 1e-10
    check("partial transpose involution, reduced-state and determinant identities", bool(ok))

    ok = True
    singlet = np.array([0.0, 1.0, -1.0, 0.0]) / np.sqrt(2.0)
    for _ in range(100):
        alpha, j = random_state_pair()
        rho = build_output_state(alpha, j)
        ok &= abs(np.trace(rho) - 1.0) <= 1e-15
        ok &= np.abs(rho @ singlet).max() <= 1e-14
        ok &= np.array_equal(hermat.swap_qubits(rho), rho)
        ok &= abs(clone_fidelity(alpha, j) - (1.0 - j)) <= 1e-12
    check("output-state structure (trace, singlet zero mode, swap, fidelity law)", bool(ok))

    ok = True
    for _ in range(100):
        alpha = rng.uniform(0.0, 1.0)
        j = rng.uniform(1.0 / 6.0, 0.5)
        rho = build_output_state(alpha, j)
        t = rng.uniform(0.0, np.pi)
        phi = rng.uniform(0.0, np.pi)
        basis = MeasurementBasis(t, phi)
        lhs = discord_at(rho, basis)
        rhs = mutual_info_j(rho) - mutual_info_i(rho, basis)
        ok &= abs(lhs - rhs) <= 1e-12
        curve = conditional_entropy_curve(rho, [t, t + np.pi / 2], phi)
        ok &= abs(curve[0] - curve[1]) <= 1e-12
    check("discord identity D = J - I and conditional-entropy period pi/2", bool(ok))

    ok = True
    for _ in range(20):
        blochs = rng.uniform(-1, 1, size=(2, 2))
        blochs /= np.maximum(1.0, np.linalg.norm(blochs, axis=1))[:, None]
        singles = [np.array([[1 + b[1], b[0]], [b[0], 1 - b[1]]]) / 2 for b in blochs]
        rho = np.kron(singles[0], singles[1])
        ok &= abs(discord_min(rho, grid_points=181).discord) <= 1e-9
    check("product states carry zero discord", bool(ok))

    ok = True
    for _ in range(500):
        alpha, j = random_state_pair()
        rho = build_output_state(alpha, j)
        w3d, w4d = (hermat.principal_minor(hermat.partial_transpose_b(rho), k) for k in (3, 4))
        ok &= abs(w3_closed(alpha, j) - w3d) <= 1e-12
        ok &= abs(w4_closed(alpha, j) - w4d) <= 1e-12
    check("closed-form determinants match direct minors", bool(ok))

    ok = True
    for alpha in np.arange(0.15, 0.96, 0.1):
        js, w3s, w4s, min_ppt = scan_grid(alpha, scan_step=2e-3)
        det_sep = (w3s >= 0.0) & (w4s >= 0.0)
        ppt_sep = min_ppt >= hermat.STATE_EIG_FLOOR
        ok &= bool(np.array_equal(det_sep, ppt_sep))
    check("determinant and PPT classifications agree on the scan grid", bool(ok))

    print(f"{'FAILED' if failures else 'OK'}: "
          f"{7 - failures} of 7 property groups passed", file=out_stream)
    return 1 if failures else EXIT_OK


def _add_common_flags(p):
    p.add_argument("--config", help="flat key=value config file; flags override it")
    p.add_argument("--alpha", type=_alpha_list, dest="alpha",
                   help="comma-separated input amplitudes (default 0.1..0.9)")
    p.add_argument("--j-min", type=float, dest="j_min")
    p.add_argument("--j-max", type=float, dest="j_max")
    p.add_argument("--j-step", type=float, dest="j_step")
    p.add_argument("--t-points", type=int, dest="t_points")
    p.add_argument("--scan-phase", action="store_true", default=None, dest="scan_phase")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--out", help="output directory (surface) or file (table1)")
    p.add_argument("--enforce-psd", action="store_true", default=None, dest="enforce_psd",
                   help="drop rows where the state is not positive semidefinite")
    p.add_argument("--seed", type=int)


def _alpha_list(text):
    return [float(x) for x in text.replace(",", " ").split()]


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="clonecorr",
        description="Discord and separability of Buzek-Hillery copier output states.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_surface = sub.add_parser("surface", help="discord surface over (j, t) per alpha")
    _add_common_flags(p_surface)

    p_table = sub.add_parser("table1", help="separable j intervals vs the reference table")
    _add_common_flags(p_table)

    p_point = sub.add_parser("point", help="full report for a single (alpha, j)")
    p_point.add_argument("alpha", type=float)
    p_point.add_argument("j", type=float)
    p_point.add_argument("--format", choices=("text", "json"), default="text")
    p_point.add_argument("--scan-phase", action="store_true", default=False,
                         dest="scan_phase")

    p_self = sub.add_parser("selftest", help="run the randomized property suites")
    _add_common_flags(p_self)

    args = parser.parse_args(argv)

    try:
        if args.command == "surface":
            cfg = build_config(args)
            run_surface(cfg)
            return EXIT_OK
        if args.command == "table1":
            cfg = build_config(args)
            return run_table1(cfg)
        if args.command == "point":
            return run_point(args.alpha, args.j, output_format=args.format,
                             scan_phase=args.scan_phase)
        if args.command == "selftest":
            cfg = build_config(args)
            return run_selftest(cfg)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
