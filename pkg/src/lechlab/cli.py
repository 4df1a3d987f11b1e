"""``lech`` command-line interface.

Exit codes: 0 when every check passes, 1 on a bound violation or a rejected
hypothesis, 2 on input errors.  Errors are printed as JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .closure import integral_closure, m_full_certificate, newton_polyhedron
from .errors import HypothesisNotMet, LechError
from .formats import (
    load_run_config,
    load_tgraded,
    parse_ideal,
    report_rows,
    rows_to_csv,
    rows_to_json,
    to_jsonable,
)
from .ideals import MonomialIdeal, format_ideal
from .inequalities import BOUND_ALIASES, evaluate
from .multiplicity import multiplicity_oracle, newton_area_2d, newton_multiplicity_2d
from .rings import parse_ring
from .search import EnumerationSpec, enumerate_ideals, sup_ratio_curve
from .tgraded import (
    bracket_power_experiment,
    double_graded_decomposition_check,
    mumford_chain_check,
    t_length,
    t_min_gens,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _emit(payload) -> None:
    print(json.dumps(to_jsonable(payload), indent=2))


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _bound_list(text: str) -> list[str]:
    names = [x.strip() for x in text.split(",") if x.strip()]
    bad = [n for n in names if n not in BOUND_ALIASES]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown bounds {bad}; choose from {sorted(BOUND_ALIASES)}")
    return names


def cmd_mult(args) -> int:
    ring = parse_ring(args.ring)
    I = parse_ideal(args.ideal, ring)
    out = {"ring": ring.spec(), "ideal": format_ideal(I), "method": args.method}
    values = []
    if args.method in ("oracle", "both"):
        tr = multiplicity_oracle(I, args.n_max)
        out["oracle"] = {"e": tr.e_value, "lengths": tr.lengths, "stabilized_at": tr.stabilized_at}
        values.append(tr.e_value)
    if args.method in ("newton", "both"):
        e = newton_multiplicity_2d(I)
        out["newton"] = {"e": e, "area": newton_area_2d(I), "covolume": ring.covolume}
        values.append(e)
    out["e"] = values[0]
    if args.method == "both":
        out["methods_agree"] = values[0] == values[1]
        return _done(out, out["methods_agree"])
    return _done(out, True)


def cmd_closure(args) -> int:
    ring = parse_ring(args.ring)
    I = parse_ideal(args.ideal, ring)
    NP = newton_polyhedron(I)
    closed = integral_closure(I)
    cert = m_full_certificate(I)
    _emit({
        "ring": ring.spec(),
        "ideal": format_ideal(I),
        "closure": format_ideal(closed),
        "integrally_closed": closed == I,
        "newton_polyhedron": NP.describe(),
        "halfspaces": [list(a) + [c] for a, c in NP.halfspaces],
        "certificate": {"status": cert.status, "witness": cert.witness},
    })
    return EXIT_OK


def _evaluate_task(task):
    ring_spec, gens, bounds, n_max = task
    ring = parse_ring(ring_spec)
    return report_rows(evaluate(MonomialIdeal(ring, gens), bounds, n_max))


def _evaluate_all(ideals, bounds, n_max, jobs):
    tasks = [(I.ambient.spec(), I.gens, bounds, n_max) for I in ideals]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_evaluate_task, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        chunks = [_evaluate_task(t) for t in tasks]
    return [row for chunk in chunks for row in chunk]


def _summary(rows):
    return {
        "violations": sum(1 for r in rows if r["hypothesis_met"] and not r["satisfied"]),
        "rejections": sum(1 for r in rows if not r["hypothesis_met"]),
    }


def cmd_verify(args) -> int:
    ring = parse_ring(args.ring)
    I = parse_ideal(args.ideal, ring)
    report = evaluate(I, args.bounds, args.n_max)
    s = report.stats
    out = {
        "ring": ring.spec(),
        "ideal": format_ideal(I),
        "e": s.e,
        "colength": s.ell,
        "mu": s.mu,
        "e_R": s.e_R,
        "ratio": s.ratio,
        "bounds": [
            {
                "name": b.name,
                "constant": b.constant,
                "bound": b.bound_value(s),
                "hypothesis_met": b.hypothesis_met,
                "satisfied": b.satisfied,
                "tight": b.tight,
                "note": b.note,
            }
            for b in report.bounds
        ],
        "violations": [b.name for b in report.violations],
        "rejections": [b.name for b in report.rejections],
    }
    return _done(out, not report.violations and not report.rejections)


def _write_rows(rows, fmt, path, **meta):
    text = rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows, **meta)
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_search(args) -> int:
    ring = parse_ring(args.ring)
    spec = EnumerationSpec(ring, max_colength=args.max_colength,
                           filter="integrally_closed" if args.closed_only else "all")
    rows = _evaluate_all(list(enumerate_ideals(spec)), ["lech"], args.n_max, args.jobs)
    _write_rows(rows, args.format, args.out, ring=ring.spec(), max_colength=args.max_colength,
                closed_only=args.closed_only)
    return _finish_rows(rows, args.out)


def cmd_sup_curve(args) -> int:
    ring = parse_ring(args.ring)
    spec = EnumerationSpec(ring, filter="integrally_closed" if args.closed_only else "all")
    rows = sup_ratio_curve(spec, args.cutoffs, args.n_max)
    _emit({"ring": ring.spec(), "closed_only": args.closed_only, "curve": rows})
    return EXIT_OK


def cmd_tgraded(args) -> int:
    spec = load_tgraded(Path(args.spec).read_text())
    I = spec.ideal
    out = {"ideal": str(I), "K": I.K, "t_length": t_length(I), "check": args.check}
    if args.check == "mumford":
        r = mumford_chain_check(I, args.n_max)
        out.update(e=r.e, length=r.length, component_e=r.component_e,
                   component_lengths=r.component_lengths, lhs=r.lhs, mid=r.mid, rhs=r.rhs, holds=r.holds)
    elif args.check == "mingens":
        r = t_min_gens(I)
        out.update(mu=r.mu, bound=r.bound, holds=r.holds, tight=r.tight)
    else:
        r = double_graded_decomposition_check(I, args.n_max)
        out.update(component_sum=r.component_sum, model_colength=r.model_colength, e=r.e,
                   closure_t_length=r.closure_t_length, closure_e=r.closure_e,
                   lengths_match=r.lengths_match, holds=r.holds)
    return _done(out, out["holds"])


def cmd_bracket(args) -> int:
    spec = load_tgraded(Path(args.spec).read_text())
    tr = bracket_power_experiment(spec.ideal, spec.generators, args.q)
    out = {
        "ideal": str(spec.ideal),
        "generators": [list(a) + [j] for a, j in tr.generators],
        "N": tr.N,
        "q": tr.q_values,
        "lengths": tr.lengths,
        "formula_lengths": tr.formula_lengths,
        "identity_holds": tr.identity_holds,
        "surjection": tr.surjection,
        "ratios": tr.ratios,
        "limit_estimate": tr.limit_estimate,
        "target": tr.target,
        "e_J": tr.e_J,
        "lower_bound": tr.lower_bound,
        "frq_bound": tr.frq_bound,
        "holds": tr.holds,
        "note": tr.note,
    }
    return _done(out, tr.holds)


def cmd_run(args) -> int:
    cfg = load_run_config(Path(args.config).read_text())
    ideals = list(enumerate_ideals(cfg.enumeration_spec()))
    rows = _evaluate_all(ideals, cfg.bounds, cfg.n_max, cfg.jobs)
    _write_rows(rows, cfg.format, cfg.out, ring=cfg.ring.spec())
    return _finish_rows(rows, cfg.out)


def _finish_rows(rows, out) -> int:
    s = _summary(rows)
    if out:
        _emit({"out": out, "rows": len(rows), **s})
    return EXIT_FAIL if s["violations"] or s["rejections"] else EXIT_OK


def _done(payload, ok) -> int:
    _emit(payload)
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lech", description="Lech-type inequality laboratory for monomial ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    def ring_ideal(sp):
        sp.add_argument("--ring", required=True, help="poly:<d> or semigroup:[[..],..]")
        sp.add_argument("--ideal", required=True, help='e.g. "x^3, x*y, y^3" or "[[3,0],[1,1],[0,3]]"')

    def n_max(sp):
        sp.add_argument("--n-max", type=int, default=None, dest="n_max")

    sp = sub.add_parser("mult", help="Hilbert-Samuel multiplicity")
    ring_ideal(sp)
    sp.add_argument("--method", choices=["oracle", "newton", "both"], default="oracle")
    n_max(sp)
    sp.set_defaults(func=cmd_mult)

    sp = sub.add_parser("closure", help="integral closure and Newton polyhedron")
    ring_ideal(sp)
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("verify", help="check named bounds on one ideal")
    ring_ideal(sp)
    sp.add_argument("--bounds", type=_bound_list, default=["lech"])
    n_max(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("search", help="enumerate ideals by colength and check Lech")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--max-colength", type=int, required=True, dest="max_colength")
    sp.add_argument("--closed-only", action="store_true", dest="closed_only")
    sp.add_argument("--out", default=None)
    sp.add_argument("--format", choices=["csv", "json"], default="json")
    sp.add_argument("--jobs", type=int, default=1)
    n_max(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("sup-curve", help="maximal ratios per colength cutoff")
    sp.add_argument("--ring", required=True)
    sp.add_argument("--cutoffs", type=_int_list, required=True)
    sp.add_argument("--closed-only", action="store_true", dest="closed_only")
    n_max(sp)
    sp.set_defaults(func=cmd_sup_curve)

    sp = sub.add_parser("tgraded", help="checks on a T-graded ideal")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--check", choices=["mumford", "mingens", "doublegraded"], required=True)
    n_max(sp)
    sp.set_defaults(func=cmd_tgraded)

    sp = sub.add_parser("bracket", help="bracket-power experiment over a 1-dimensional base")
    sp.add_argument("--spec", required=True)
    sp.add_argument("--q", type=_int_list, default=[2, 4, 8, 16, 32])
    sp.set_defaults(func=cmd_bracket)

    sp = sub.add_parser("run", help="batch run from a JSON configuration")
    sp.add_argument("--config", required=True)
    sp.set_defaults(func=cmd_run)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) < 1:
        print(json.dumps({"error": "InvalidArgument", "message": "--jobs must be >= 1"}), file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except HypothesisNotMet as exc:
        print(json.dumps(exc.to_dict()), file=sys.stderr)
        return EXIT_FAIL
    except LechError as exc:
        print(json.dumps(exc.to_dict()), file=sys.stderr)
        return EXIT_INPUT
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
