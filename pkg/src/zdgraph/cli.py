"""``zdg`` command-line front end.

Exit codes: 0 success, 2 invalid input, 3 size cap exceeded, 4 a
mathematical check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import checks, graph, indices, refute, spectra
from .errors import DomainError, NumericError, ParameterError, SizeError, TheoremViolation
from .ring import check_prime, is_prime

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_VERIFY = 0, 2, 3, 4
FORMATS = ("text", "json", "csv", "dot", "svg")
SWEEP_QUANTITIES = ("energy", "lower", "upper", "f", "g", "h", "M1", "M2")
DEFAULT_ALPHAS = (-0.5, 1.0)
INDEX_TOL = 1e-9


class VerificationFailed(Exception):
    """A command completed but one of its checks did not hold."""


@dataclass
class RunConfig:
    command: str
    p: int | None = None
    k: int = 4
    fmt: str = "text"
    out: str | None = None
    cap: int | None = None
    dense_cap: int = spectra.DENSE_CAP
    tol: float | None = None
    alphas: tuple[float, ...] = DEFAULT_ALPHAS
    primes: tuple[int, ...] = ()
    quantity: str = "f"
    dense: bool = False
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.p is not None:
            self.p = check_prime(self.p)
        if self.k < 2:
            raise ParameterError(f"k must be at least 2, got {self.k}")
        if self.tol is not None and not self.tol > 0:
            raise ParameterError(f"tolerance must be positive, got {self.tol}")
        if self.cap is not None and self.cap < 1:
            raise ParameterError(f"cap must be positive, got {self.cap}")


def num(x) -> str:
    """Fixed 9-significant-digit rendering; ints stay exact."""
    if isinstance(x, bool) or x is None:
        return str(x).lower() if isinstance(x, bool) else ""
    if isinstance(x, int):
        return str(x)
    return f"{spectra.sig9(x) + 0.0:.9g}"


def _j(x):
    return None if x is None else (x if isinstance(x, int) else spectra.sig9(x) + 0.0)


def parse_primes(text: str) -> tuple[int, ...]:
    """``"2,3,5"`` lists primes explicitly; ``"2..13"`` takes every prime in range."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            try:
                lo_i, hi_i = int(lo), int(hi)
            except ValueError:
                raise ParameterError(f"bad prime range {part!r}") from None
            if lo_i > hi_i:
                raise ParameterError(f"empty prime range {part!r}")
            out += [q for q in range(lo_i, hi_i + 1) if is_prime(q)]
        else:
            try:
                out.append(check_prime(int(part)))
            except ValueError as exc:
                if isinstance(exc, ParameterError):
                    raise
                raise ParameterError(f"{part!r} is not an integer") from None
    if not out:
        raise ParameterError(f"no primes in {text!r}")
    return tuple(dict.fromkeys(out))


def _require_k4(cfg: RunConfig):
    if cfg.k != 4:
        raise ParameterError(f"closed forms are only available for k=4, got k={cfg.k}")


def _require_p(cfg: RunConfig) -> int:
    if cfg.p is None:
        raise ParameterError(f"{cfg.command} needs --p")
    return cfg.p


def _check_format(cfg: RunConfig, allowed):
    if cfg.fmt not in allowed:
        raise ParameterError(f"{cfg.command} does not support --format {cfg.fmt}; use one of {', '.join(allowed)}")


def _csv(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _table(rows, header) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()  # noqa: E731
    lines = [fmt(header), fmt(["-" * w for w in widths])]
    lines += [fmt(r) for r in rows]
    return "\n".join(lines) + "\n"


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ---------------------------------------------------------------- commands


def cmd_graph(cfg: RunConfig) -> str:
    _check_format(cfg, ("text", "json", "csv", "dot"))
    g = graph.build(_require_p(cfg), cfg.k, cap=cfg.cap)
    if cfg.fmt != "text":
        return graph.export(g, cfg.fmt).decode()
    part = graph.edge_partition(g)
    sizes = g.class_sizes()
    degs = graph.degrees(g)
    lines = [
        f"Gamma(Z_{g.p}[x]/<x^{g.k}>)",
        f"n = {g.n}",
        f"m = {g.m}",
        "classes: " + ", ".join(f"{t}={sizes[t]}" for t in sorted(sizes)),
        "class degrees: " + ", ".join(
            f"{t}={sorted({degs[i] for i in g.class_indices(t)})}" for t in sorted(sizes)),
        "edge partition: " + ", ".join(f"{key}={part[key]}" for key in part),
    ]
    return "\n".join(lines) + "\n"


def cmd_spectrum(cfg: RunConfig) -> str:
    _check_format(cfg, ("text", "json", "csv"))
    _require_k4(cfg)
    p = _require_p(cfg)
    tol = 1e-6 if cfg.tol is None else cfg.tol
    closed = spectra.closed_form_spectrum(p)
    report = spectra.classify_energy(p, closed)
    g = graph.build(p, cap=cfg.cap)
    dense = None
    if g.n <= cfg.dense_cap:
        dense = spectra.dense_spectrum(g, cap=cfg.dense_cap)
    else:
        cfg.notes.append(f"dense spectrum skipped: n={g.n} above dense cap {cfg.dense_cap}")
    agree = None if dense is None else spectra.same_multiset(closed, dense, tol)
    roots = spectra.quotient_eigenvalues(p)

    if cfg.fmt == "json":
        body = _dumps({
            "p": p,
            "n": g.n,
            "closed_form": spectra.spectrum_json(closed),
            "dense": None if dense is None else spectra.spectrum_json(dense),
            "agree": agree,
            "cubic_roots": [_j(r) for r in roots],
            "energy": _j(report.energy),
            "bounds": [_j(report.lower_bound), _j(report.upper_bound)],
            "flags": report.flags,
        })
    else:
        rows = []
        dense_pairs = list(dense.pairs) if dense else []
        for v, mult in closed.pairs:
            match = next((d for d in dense_pairs if abs(d[0] - v) <= tol * max(1.0, abs(v))), None)
            if match:
                dense_pairs.remove(match)
            rows.append([num(v), mult, "" if match is None else num(match[0]),
                         "" if match is None else match[1]])
        rows += [["", "", num(v), mult] for v, mult in dense_pairs]
        header = ["closed_value", "closed_mult", "dense_value", "dense_mult"]
        if cfg.fmt == "csv":
            body = _csv(rows, header)
        else:
            flags = ", ".join(f"{k}={num(v)}" for k, v in report.flags.items())
            body = (
                f"spectrum of Gamma(Z_{p}[x]/<x^4>), n = {g.n}\n"
                + _table(rows, header)
                + f"cubic roots: {', '.join(num(r) for r in roots)}\n"
                + f"energy: {num(report.energy)}"
                + ("" if dense is None else f" (dense {num(spectra.energy(dense))})") + "\n"
                + f"bounds: [{num(report.lower_bound)}, {num(report.upper_bound)}]\n"
                + f"flags: {flags}\n"
                + f"sources agree: {'skipped' if agree is None else num(agree)}\n"
            )
    if agree is False:
        raise VerificationFailed(body + "closed-form and dense spectra disagree")
    return body


def _conjecture_note(p: int, alpha: float) -> str:
    right = indices.corollary_form(p, "randic", alpha)
    printed = indices.corollary_form(p, "randic", alpha, printed=True)
    return (
        "note: the A-C term of the general-index formulas uses degrees (d_u, d_w); "
        f"the printed (d_v, d_w) variant gives randic(alpha={num(alpha)}) = {num(printed)} "
        f"instead of {num(right)} at p={p}"
    )


def cmd_indices(cfg: RunConfig) -> str:
    _check_format(cfg, ("text", "json", "csv"))
    _require_k4(cfg)
    p = _require_p(cfg)
    tol = INDEX_TOL if cfg.tol is None else cfg.tol
    g = graph.build(p, cap=cfg.cap)
    rows = indices.fixed_indices(p, g)
    for alpha in cfg.alphas:
        rows += indices.named_indices(p, alpha, g)
    m1, m2 = indices.zagreb(p)
    hv = indices.hansen_vukicevic_check(p, m1=m1, m2=m2, n=g.n, m=g.m)
    note = _conjecture_note(p, next((a for a in cfg.alphas if a != 0), 1.0))
    bad = [r for r in rows if r.rel_error is not None and r.rel_error > tol]

    table = [[r.index_name, num(r.alpha), num(r.closed_form), num(r.brute_force), f"{r.rel_error:.3g}"]
             for r in rows]
    header = ["index_name", "alpha", "closed_form", "brute_force", "rel_error"]
    if cfg.fmt == "json":
        body = _dumps({
            "p": p,
            "rows": [
                {"index_name": r.index_name, "alpha": _j(r.alpha), "closed_form": _j(r.closed_form),
                 "brute_force": _j(r.brute_force), "rel_error": _j(r.rel_error)}
                for r in rows
            ],
            "zagreb": {"M1": m1, "M2": m2},
            "conjecture": {"holds": hv.holds, "lhs": str(hv.lhs), "rhs": str(hv.rhs), "margin": hv.margin},
            "note": note,
        })
    elif cfg.fmt == "csv":
        body = _csv(table, header)
        cfg.notes.append(note)
    else:
        body = (
            f"indices of Gamma(Z_{p}[x]/<x^4>)\n" + _table(table, header)
            + f"M1 = {m1}\nM2 = {m2}\n"
            + f"M2/m = {hv.lhs} >= M1/n = {hv.rhs}: {'holds' if hv.holds else 'FAILS'} "
            + f"(n*M2 - m*M1 = {hv.margin})\n" + note + "\n"
        )
    if bad:
        first = bad[0]
        raise VerificationFailed(
            body + f"closed form and brute force disagree for {first.index_name}"
            f"(alpha={num(first.alpha)}): rel_error {first.rel_error:.3g}")
    if not hv.holds:
        raise VerificationFailed(body + f"Hansen-Vukicevic inequality fails at p={p}")
    return body


def cmd_verify(cfg: RunConfig) -> str:
    _check_format(cfg, ("text", "json"))
    _require_k4(cfg)
    primes = cfg.primes or ((cfg.p,) if cfg.p else ())
    if not primes:
        raise ParameterError("verify needs --primes or --p")
    cap = graph.default_cap() if cfg.cap is None else cfg.cap
    for p in primes:
        if p**3 - 1 > cap:
            raise SizeError(f"p={p} gives n={p**3 - 1} vertices, above the cap of {cap}")
    tol = 1e-6 if cfg.tol is None else cfg.tol
    results = []
    for p in primes:
        results += checks.run_invariants(p, dense_cap=cfg.dense_cap, cap=cap, tol=tol)
    for r in results:
        if r.status == "skip":
            cfg.notes.append(f"notice: p={r.p} {r.name} skipped ({r.detail})")
    failed = [r for r in results if r.status == "fail"]
    if cfg.fmt == "json":
        body = _dumps({
            "passed": not failed,
            "results": [{"p": r.p, "module": r.module, "name": r.name, "status": r.status,
                         "detail": r.detail} for r in results],
        })
    else:
        rows = [[r.p, r.module, r.status, r.name, r.detail] for r in results]
        counts = {s: sum(r.status == s for r in results) for s in ("pass", "fail", "skip")}
        body = _table(rows, ["p", "module", "status", "check", "detail"]) + (
            f"{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped\n")
    if failed:
        r = failed[0]
        raise VerificationFailed(body + f"first failing invariant: p={r.p} {r.module}: {r.name} {r.detail}".rstrip())
    return body


def cmd_refute(cfg: RunConfig) -> str:
    _check_format(cfg, ("text", "json"))
    _require_k4(cfg)
    p = cfg.p or 3
    prior = refute.prior_charpoly(p)
    prior_spec = prior.spectrum()
    reports = refute.refutation_report(p)
    if cfg.fmt == "json":
        return _dumps({
            "p": p,
            "prior_charpoly": prior.describe(),
            "prior_roots": [[_j(v), m] for v, m in prior_spec.pairs],
            "assumption": refute.ROOT_ASSUMPTION,
            "reports": [
                {"quantity": r.quantity, "claimed": _j(r.claimed), "computed": _j(r.computed),
                 "verdict": r.verdict, "violated_facts": list(r.violated_facts), "notes": list(r.notes)}
                for r in reports
            ],
        })
    roots = ", ".join(num(v) if m == 1 else f"{num(v)}^{m}" for v, m in prior_spec.pairs)
    rows = [[r.quantity, num(r.claimed), num(r.computed), r.verdict, ",".join(r.violated_facts)]
            for r in reports]
    notes = sorted({n for r in reports for n in r.notes})
    return (
        f"prior characteristic polynomial at p={p}:\n  {prior.describe()}\n"
        f"roots: {roots}\n"
        + _table(rows, ["quantity", "claimed", "computed", "verdict", "violated_facts"])
        + "".join(f"note: {n}\n" for n in notes)
    )


def sweep_rows(primes, dense: bool = False, dense_cap: int = spectra.DENSE_CAP, cap=None) -> list[dict]:
    rows = []
    for p in primes:
        rep = spectra.classify_energy(p)
        m1, m2 = indices.zagreb(p)
        row = {
            "p": p, "energy": rep.energy, "lower": rep.lower_bound, "upper": rep.upper_bound,
            "f": spectra.hyper_witness(p), "g": spectra.hypo_witness(p), "h": indices.hv_polynomial(p),
            "M1": m1, "M2": m2,
        }
        if dense:
            n = p**3 - 1
            row["dense_energy"] = (
                spectra.energy(spectra.dense_spectrum(graph.build(p, cap=cap), cap=dense_cap))
                if n <= dense_cap else None
            )
        rows.append(row)
    return rows


def svg_chart(xs, ys, title: str, width: int = 640, height: int = 400) -> str:
    """Minimal polyline chart with labelled axis extremes."""
    pad = 60
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    sx = (width - 2 * pad) / ((x1 - x0) or 1)
    sy = (height - 2 * pad) / ((y1 - y0) or 1)
    pts = [(pad + (x - x0) * sx, height - pad - (y - y0) * sy) for x, y in zip(xs, ys)]
    poly = " ".join(f"{x:.2f},{y:.2f}" for x, y in pts)
    dots = "".join(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="3"/>' for x, y in pts)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'font-family="sans-serif" font-size="12">\n'
        f'<text x="{width / 2}" y="20" text-anchor="middle">{title}</text>\n'
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>\n'
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>\n'
        f'<text x="{pad}" y="{height - pad + 18}" text-anchor="middle">{num(x0)}</text>\n'
        f'<text x="{width - pad}" y="{height - pad + 18}" text-anchor="middle">{num(x1)}</text>\n'
        f'<text x="{pad - 6}" y="{height - pad}" text-anchor="end">{num(y0)}</text>\n'
        f'<text x="{pad - 6}" y="{pad}" text-anchor="end">{num(y1)}</text>\n'
        f'<polyline fill="none" stroke="steelblue" stroke-width="2" points="{poly}"/>\n'
        f'<g fill="steelblue">{dots}</g>\n</svg>\n'
    )


def cmd_sweep(cfg: RunConfig) -> str:
    _check_format(cfg, ("text", "csv", "json", "svg"))
    _require_k4(cfg)
    primes = cfg.primes or parse_primes("2..13")
    rows = sweep_rows(primes, cfg.dense, cfg.dense_cap, cfg.cap)
    if cfg.fmt == "svg":
        if cfg.quantity not in SWEEP_QUANTITIES:
            raise ParameterError(f"unknown quantity {cfg.quantity!r}; choose from {SWEEP_QUANTITIES}")
        return svg_chart([r["p"] for r in rows], [r[cfg.quantity] for r in rows],
                         f"{cfg.quantity} against p")
    if cfg.fmt == "json":
        return _dumps([{k: _j(v) for k, v in r.items()} for r in rows])
    header = list(rows[0])
    return _csv([[num(r[h]) for h in header] for r in rows], header)


COMMANDS = {
    "graph": cmd_graph,
    "spectrum": cmd_spectrum,
    "indices": cmd_indices,
    "verify": cmd_verify,
    "refute": cmd_refute,
    "sweep": cmd_sweep,
}


def _alphas(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(a) for a in text.split(",") if a.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad alpha list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="prime modulus")
    common.add_argument("--k", type=int, default=4, help="ring is Z_p[x]/<x^k> (default 4)")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--cap", type=int, help="vertex-count cap (default: $ZDG_CAP or 25000)")
    common.add_argument("--dense-cap", type=int, default=spectra.DENSE_CAP,
                        help="largest n for the dense eigensolver")
    common.add_argument("--tol", type=float, help="comparison tolerance override")

    parser = argparse.ArgumentParser(prog="zdg", description="Zero-divisor graphs of Z_p[x]/<x^4>.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("graph", parents=[common], help="build and export the graph")
    sub.add_parser("spectrum", parents=[common], help="closed-form and dense spectra, energy")
    ind = sub.add_parser("indices", parents=[common], help="degree-based topological indices")
    ind.add_argument("--alpha", type=_alphas, default=DEFAULT_ALPHAS,
                     help="comma-separated exponents (default -0.5,1)")
    ver = sub.add_parser("verify", parents=[common], help="run the invariant suite")
    ver.add_argument("--primes", help='e.g. "2,3,5" or "2..13"')
    sub.add_parser("refute", parents=[common], help="reproduce the prior-formula discrepancies")
    sw = sub.add_parser("sweep", parents=[common], help="tabulate quantities over primes")
    sw.add_argument("--primes", help='e.g. "2..13" (default)')
    sw.add_argument("--quantity", default="f", help=f"column plotted by --format svg: {', '.join(SWEEP_QUANTITIES)}")
    sw.add_argument("--dense", action="store_true", help="add a dense_energy column")
    return parser


def _config(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        p=args.p,
        k=args.k,
        fmt=args.fmt,
        out=args.out,
        cap=args.cap,
        dense_cap=args.dense_cap,
        tol=args.tol,
        alphas=getattr(args, "alpha", DEFAULT_ALPHAS) or DEFAULT_ALPHAS,
        primes=parse_primes(args.primes) if getattr(args, "primes", None) else (),
        quantity=getattr(args, "quantity", "f"),
        dense=getattr(args, "dense", False),
    )


def _emit(cfg: RunConfig, text: str, stdout):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = None
    try:
        cfg = _config(args)
        text = COMMANDS[cfg.command](cfg)
        code = EXIT_OK
    except VerificationFailed as exc:
        text, _, reason = str(exc).rpartition("\n")
        stderr.write(f"verification failed: {reason}\n")
        code = EXIT_VERIFY
    except (TheoremViolation, NumericError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_VERIFY
    except SizeError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except (ParameterError, DomainError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    for note in cfg.notes:
        stderr.write(note + "\n")
    if text:
        _emit(cfg, text if text.endswith("\n") else text + "\n", stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
