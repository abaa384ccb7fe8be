"""Command-line front end.

Subcommands: list, describe, sample (CSV), verify (claims + JSON report),
export (OBJ mesh), oracle (dual-engine agreement sweep).

Exit codes: 0 all claims matched their expected verdicts with none FLAGGED;
1 any unexpected verdict; 2 FLAGGED verdicts only; 3 usage or constraint
errors.  Negative-control claims are expected to FAIL and do not trip exit
code 1 on their own.

Range arguments use lo:hi:n.  For a periodic angular coordinate the n
samples cover [lo, hi) (hi excluded); otherwise both ends are included.
The default tolerance 1e-8 can be overridden by SURFREV_DEFAULT_TOL, and
the --tol flag wins over the environment.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import catalog, claims, oracle, report
from .errors import GeometryError
from .geometry import sweep

CSV_HEADER = ("s,t,E,F,G,e,f,g,H,K,KII,k,residual,"
              "N1_re,N1_im,N2_re,N2_im,N3_re,N3_im")


def _parse_params(text: str | None) -> dict | None:
    if not text:
        return None
    out = {}
    for piece in text.split(","):
        if "=" not in piece:
            raise ValueError(f"bad parameter {piece!r}, expected name=value")
        name, val = piece.split("=", 1)
        out[name.strip()] = float(val)
    return out


def _parse_range(text: str, periodic: bool) -> np.ndarray:
    lo, hi, n = text.split(":")
    lo, hi, n = float(lo), float(hi), int(n)
    if n < 2:
        raise ValueError("range needs at least 2 samples")
    return np.linspace(lo, hi, n, endpoint=not periodic)


def _parse_grid(text: str) -> tuple[int, int]:
    ns, nt = text.lower().split("x")
    return int(ns), int(nt)


def _num(x: float) -> str:
    return format(float(x), ".17g")


def _default_ranges(entry, patch, n_s: int, n_t: int):
    s0, s1, t0, t1 = entry.grid_domain(patch.params)
    if patch.periodic_s:
        s = np.linspace(s0, s1, n_s, endpoint=False)
    else:
        ms = 0.02 * (s1 - s0)
        s = np.linspace(s0 + ms, s1 - ms, n_s)
    mt = 0.02 * (t1 - t0)
    t = np.linspace(t0 + mt, t1 - mt, n_t)
    return s, t


def _sample_rows(patch, s_vals, t_vals) -> list[str]:
    S, T = np.meshgrid(s_vals, t_vals)
    sw = sweep(patch, S, T, with_kii=True)
    n = sw["N"]
    rows = []
    flat = {k: np.asarray(sw[k]).ravel() for k in
            ("E", "F", "G", "e", "f", "g", "H", "K", "K_II", "k", "residual")}
    n1, n2, n3 = (np.asarray(c).ravel() for c in n.components())
    Sf, Tf = S.ravel(), T.ravel()
    for i in range(Sf.size):
        cells = [_num(Sf[i]), _num(Tf[i])]
        for key in ("E", "F", "G", "e", "f", "g", "H", "K", "K_II", "k", "residual"):
            cells.append(_num(flat[key][i].real))
        for comp in (n1, n2, n3):
            cells.append(_num(comp[i].real))
            cells.append(_num(comp[i].imag))
        rows.append(",".join(cells))
    return rows


def _cmd_list(args) -> int:
    for entry in catalog.list_entries():
        defaults = ",".join(f"{k}={v:g}" for k, v in sorted(entry.default_params.items()))
        print(f"{entry.id:15s} {entry.source}  [defaults: {defaults}]")
    return 0


def _cmd_describe(args) -> int:
    entry = catalog.get_entry(args.surface)
    patch = catalog.build(args.surface)
    s0, s1, t0, t1 = entry.grid_domain(entry.default_params)
    print(f"id:            {entry.id}")
    print(f"family:        {entry.source}")
    print(f"parameters:    {', '.join(entry.param_names)}")
    print(f"defaults:      {', '.join(f'{k}={v:g}' for k, v in sorted(entry.default_params.items()))}")
    for c in entry.constraint_text:
        print(f"constraint:    {c}")
    print(f"norm mode:     {entry.norm_mode.value}")
    print(f"orientation:   sign {entry.sign:+d} against the raw cross product")
    (bs, bt), nref = entry.reference_sign(entry.default_params)
    print(f"reference N:   at (s={bs:g}, t={bt:g}): "
          + ", ".join(f"{complex(c):g}" if complex(c).imag else f"{complex(c).real:g}"
                      for c in nref))
    print(f"default grid:  s in [{s0:g}, {s1:g}]"
          + (" (periodic)" if patch.periodic_s else "") + f", t in [{t0:g}, {t1:g}]")
    print(f"feasible rect: s in [{patch.domain[0]:g}, {patch.domain[1]:g}], "
          f"t in [{patch.domain[2]:g}, {patch.domain[3]:g}]")
    print(f"claims:        pointwise 1-type: {'claimed' if entry.one_type_claimed else 'control'},"
          f" minimal/maximal: {'claimed' if entry.minimal_claimed else 'control'}")
    if entry.has_ruling:
        print("ruling:        x(s,t) = alpha(s) + t*beta(s) decomposition available")
    return 0


def _cmd_sample(args) -> int:
    params = _parse_params(args.params)
    patch = catalog.build(args.surface, params)
    entry = catalog.get_entry(args.surface)
    if args.s_range:
        s_vals = _parse_range(args.s_range, patch.periodic_s)
    else:
        s_vals = _default_ranges(entry, patch, 64, 64)[0]
    if args.t_range:
        t_vals = _parse_range(args.t_range, False)
    else:
        t_vals = _default_ranges(entry, patch, 64, 64)[1]
    rows = _sample_rows(patch, s_vals, t_vals)
    text = CSV_HEADER + "\n" + "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    params = _parse_params(args.params)
    grid = _parse_grid(args.grid) if args.grid else (64, 64)
    tol = args.tol  # None defers to per-claim registry/env defaults
    target = args.claim
    if target == "all":
        ids = claims.BUNDLES["all"]
    elif target in claims.BUNDLES:
        ids = claims.BUNDLES[target]
    elif target in claims.REGISTRY:
        ids = [target]
    else:
        known = ", ".join(list(claims.BUNDLES) + claims.claim_ids())
        print(f"unknown claim {target!r}; known: {known}", file=sys.stderr)
        return 3
    results = claims.run_claims(ids, params=params, grid=grid, tol=tol,
                                seed=args.seed)
    doc = report.report_document(results, grid, args.seed,
                                 tol if tol is not None else claims.default_tolerance())
    text = report.dumps(doc) + "\n"
    if args.json:
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", newline="") as fh:
                fh.write(text)
    for r in results:
        expected = r.details.get("expected", "")
        suffix = "" if r.verdict == expected else f"  [expected {expected}]"
        print(f"{r.verdict:8s} {r.claim_id}  max_residual={r.max_residual:.3e} "
              f"engines={r.engine_agreement:.2e}{suffix}")
    counts = report.summary_counts(results)
    print(f"summary: {counts['PASS']} PASS, {counts['FAIL']} FAIL, "
          f"{counts['FLAGGED']} FLAGGED, {counts['unexpected']} unexpected")
    if counts["unexpected"]:
        return 1
    if counts["FLAGGED"]:
        return 2
    return 0


def _cmd_export(args) -> int:
    params = _parse_params(args.params)
    patch = catalog.build(args.surface, params)
    entry = catalog.get_entry(args.surface)
    s_vals = (_parse_range(args.s_range, patch.periodic_s) if args.s_range
              else _default_ranges(entry, patch, 48, 48)[0])
    t_vals = (_parse_range(args.t_range, False) if args.t_range
              else _default_ranges(entry, patch, 48, 48)[1])
    S, T = np.meshgrid(s_vals, t_vals)
    pts = patch.point(S, T)
    comps = [np.asarray(c) for c in pts.components()]
    max_imag = max(float(np.max(np.abs(c.imag))) for c in comps)
    complex_chart = max_imag > 1e-9
    if complex_chart and not args.real_part:
        print(f"{args.surface}: chart has imaginary components "
              f"(max |imag| = {max_imag:.3g}); pass --real-part to export "
              "the real parts", file=sys.stderr)
        return 3
    n_t, n_s = S.shape
    lines = [f"# surfrev mesh: {patch.label}"]
    lines.append(f"# params: {', '.join(f'{k}={v:g}' for k, v in sorted(patch.params.items()))}")
    if complex_chart:
        lines.append("# complex chart: vertex coordinates are componentwise real parts")
    for i in range(n_t):
        for j in range(n_s):
            lines.append("v " + " ".join(_num(c[i, j].real) for c in comps))
    for i in range(n_t - 1):
        for j in range(n_s - 1):
            a = i * n_s + j + 1
            b = i * n_s + j + 2
            c = (i + 1) * n_s + j + 2
            d = (i + 1) * n_s + j + 1
            lines.append(f"f {a} {b} {c} {d}")
    with open(args.obj, "w", newline="") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {n_t * n_s} vertices, {(n_t - 1) * (n_s - 1)} faces to {args.obj}")
    return 0


def _cmd_oracle(args) -> int:
    params = _parse_params(args.params)
    entry = catalog.get_entry(args.surface)
    patch = catalog.build(args.surface, params)
    p = dict(entry.default_params)
    if params:
        p.update(params)
    (slo, shi), (tlo, thi) = entry.oracle_ranges(p)
    rng = np.random.default_rng(args.seed)
    s = rng.uniform(slo, shi, args.points)
    t = rng.uniform(tlo, thi, args.points)
    jq = sweep(patch, s, t, with_kii=True)
    fq = oracle.all_quantities_fd(patch, s, t, with_kii=True)

    def normdiff(a, b):
        a, b = np.asarray(a), np.asarray(b)
        return float(np.max(np.abs(a - b) / (1.0 + np.maximum(np.abs(a), np.abs(b)))))

    worst = 0.0
    print(f"dual-engine agreement for {patch.label} at {args.points} points "
          f"(seed {args.seed}):")
    for q in ("E", "F", "G", "e", "f", "g", "H", "K", "K_int", "K_II", "k"):
        d = normdiff(jq[q], fq[q])
        worst = max(worst, d)
        print(f"  {q:6s} {d:.3e}")
    for name in ("N", "dN"):
        for c in range(3):
            d = normdiff(jq[name].components()[c], fq[name].components()[c])
            worst = max(worst, d)
            print(f"  {name}{c + 1:d}{'':3s} {d:.3e}")
    print(f"worst: {worst:.3e} (tolerance {claims.ORACLE_TOL:g})")
    return 0 if worst <= claims.ORACLE_TOL else 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="surfrev",
        description="Verification toolkit for minimal/maximal revolution "
                    "surfaces and helicoids in Minkowski 3-space")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog surfaces")

    d = sub.add_parser("describe", help="describe one catalog surface")
    d.add_argument("surface")

    s = sub.add_parser("sample", help="sample geometric quantities to CSV")
    s.add_argument("surface")
    s.add_argument("--params")
    s.add_argument("--s", dest="s_range", metavar="lo:hi:n")
    s.add_argument("--t", dest="t_range", metavar="lo:hi:n")
    s.add_argument("--out")

    v = sub.add_parser("verify", help="run claims and emit a JSON report")
    v.add_argument("claim", help="claim id, bundle name, or 'all'")
    v.add_argument("--params")
    v.add_argument("--grid", metavar="NxM")
    v.add_argument("--tol", type=float, default=None)
    v.add_argument("--json", metavar="PATH", help="report path ('-' for stdout)")
    v.add_argument("--seed", type=int, default=42)

    e = sub.add_parser("export", help="export the chart as an OBJ mesh")
    e.add_argument("surface")
    e.add_argument("--obj", required=True)
    e.add_argument("--params")
    e.add_argument("--s", dest="s_range", metavar="lo:hi:n")
    e.add_argument("--t", dest="t_range", metavar="lo:hi:n")
    e.add_argument("--real-part", action="store_true",
                   help="export real parts of complexified charts")

    o = sub.add_parser("oracle", help="dual-engine agreement sweep")
    o.add_argument("surface")
    o.add_argument("--points", type=int, default=100)
    o.add_argument("--seed", type=int, default=42)
    o.add_argument("--params")

    return ap


_COMMANDS = {
    "list": _cmd_list,
    "describe": _cmd_describe,
    "sample": _cmd_sample,
    "verify": _cmd_verify,
    "export": _cmd_export,
    "oracle": _cmd_oracle,
}


def run(argv=None) -> int:
    """Entry point returning the exit code (0 ok, 1 fail, 2 flagged, 3 usage)."""
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 3 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except GeometryError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except (ValueError, KeyError) as exc:
        print(str(exc), file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
