"""Command line front end: ``symmetrize run|list|body|plot-data``."""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, errors
from .constructions import CONSTRUCTIONS
from .report import FORMATS, emit, plot_csv
from .scalar import Approx, APPROX, EXACT, parse_scalar
from .scenarios import PLOT_COLUMNS, SCENARIOS, list_scenarios, plot_rows, run_scenario

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_INT_PARAMS = {"n", "k", "m", "seed"}


def _key_values(items) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise errors.BadParams(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def _write(text: str, path) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _run_one(job):
    name, params, backend, tol, seed, timing = job
    return run_scenario(name, params, backend=backend, tol=tol, seed=seed, timing=timing)


def cmd_run(args) -> int:
    names = []
    for item in args.scenarios:
        names.extend(sorted(SCENARIOS) if item == "all" else [item])
    for n in names:
        if n not in SCENARIOS:
            raise errors.UnknownScenario(f"unknown scenario {n!r}; see 'symmetrize list'")
    names = sorted(set(names))
    params = _key_values(args.param)
    jobs = []
    for n in names:
        # with several scenarios, each takes only the parameters it declares
        mine = params if len(names) == 1 else {k: v for k, v in params.items() if k in SCENARIOS[n].params}
        jobs.append((n, mine, args.backend, args.tol, args.seed, args.timing))
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    _write(emit(reports, args.format), args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_list(args) -> int:
    rows = list_scenarios()
    width = max(len(n) for n, _, _ in rows)
    lines = [f"{n.ljust(width)}  {label}: {summary}" for n, label, summary in rows]
    _write("\n".join(lines) + "\n", None)
    return EXIT_OK


def _construction_args(name, raw: dict, backend_name, tol):
    func = CONSTRUCTIONS[name]
    sig = inspect.signature(func)
    backend = sig.parameters["backend"].default
    if backend_name == "exact":
        backend = EXACT
    elif backend_name == "approx":
        backend = Approx(tol) if tol is not None else APPROX
    kwargs = {}
    for key, text in raw.items():
        if key not in sig.parameters or key == "backend":
            raise errors.BadParams(f"{name} takes no parameter {key!r}")
        try:
            if key in _INT_PARAMS:
                kwargs[key] = int(text)
            else:
                value = parse_scalar(text)
                kwargs[key] = value if backend.exact else float(value)
        except (ValueError, ArithmeticError) as exc:
            raise errors.BadParams(f"bad value for {key}: {text!r}") from exc
    missing = [
        p for p, spec in sig.parameters.items()
        if spec.default is inspect.Parameter.empty and p not in kwargs
    ]
    if missing:
        raise errors.BadParams(f"{name} needs {', '.join(missing)}")
    return func, kwargs, backend


def cmd_body(args) -> int:
    spec = args.construction
    name, _, inline = spec.partition(":")
    if name not in CONSTRUCTIONS:
        raise errors.BadParams(f"unknown construction {name!r}; choose from {', '.join(sorted(CONSTRUCTIONS))}")
    raw = _key_values([x for x in inline.split(",") if x] if inline else [])
    raw.update(_key_values(args.param))
    func, kwargs, backend = _construction_args(name, raw, args.backend, args.tol)
    P = func(**kwargs, backend=backend)
    text = json.dumps(P.to_json(args.representation), indent=2) + "\n"
    _write(text, args.out)
    return EXIT_OK


def cmd_plot_data(args) -> int:
    grid = [parse_scalar(x) for x in args.grid.split(",") if x.strip()]
    backend = {"exact": EXACT, "approx": APPROX, None: None}[args.backend]
    if backend is APPROX:
        grid = [float(s) for s in grid]
    rows = plot_rows(args.n, grid, backend)
    _write(plot_csv(rows, PLOT_COLUMNS), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symmetrize", description="Check containment claims about symmetrizations of polytopes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="run scenarios and emit a report")
    r.add_argument("scenarios", nargs="+", help="scenario names, or 'all'")
    r.add_argument("--param", action="append", metavar="K=V", help="scenario parameter (repeatable)")
    r.add_argument("--backend", choices=("exact", "approx"), help="override the default arithmetic")
    r.add_argument("--tol", type=float, help="approx tolerance (default 1e-9)")
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--format", choices=FORMATS, default="text")
    r.add_argument("--out", help="output file (default stdout)")
    r.add_argument("--jobs", type=int, default=1, help="run scenarios in N processes")
    r.add_argument("--timing", action="store_true", help="include wall time in the report")
    r.set_defaults(func=cmd_run)

    ls = sub.add_parser("list", help="list scenarios")
    ls.set_defaults(func=cmd_list)

    b = sub.add_parser("body", help="dump a construction as polytope JSON")
    b.add_argument("construction", help="name, optionally with inline parameters: simplex_cap:n=2,s=3/2")
    b.add_argument("--param", action="append", metavar="K=V")
    b.add_argument("--backend", choices=("exact", "approx"))
    b.add_argument("--tol", type=float)
    b.add_argument("--representation", choices=("vertices", "halfspaces"), default="vertices")
    b.add_argument("--out")
    b.set_defaults(func=cmd_body)

    pd = sub.add_parser("plot-data", help="CSV of alpha/beta bounds and measured factors")
    pd.add_argument("--n", type=int, default=2)
    pd.add_argument("--grid", default="1,1.1,1.2,1.3,1.4,1.5,1.6,1.65,5/3,1.7,1.8,1.9,2")
    pd.add_argument("--backend", choices=("exact", "approx"))
    pd.add_argument("--out")
    pd.set_defaults(func=cmd_plot_data)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except errors.GeometryError as exc:
        print(f"symmetrize: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"symmetrize: cannot write output: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
