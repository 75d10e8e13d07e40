"""Command-line surface: build lattices, print characteristic polynomials
and series, run the verification suite, browse the catalog.

Exit codes: 0 success, 1 verification failure, 2 input or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .errors import CoxlatError, NotAStarLattice
from .exact import poly_to_string, series_from_rational
from .lattice import Lattice, char_poly, coxeter_matrix
from .series import RootedLattice, hilbert_P, hilbert_Q, poincare_direct
from .star import (
    SingularityKind,
    build,
    catalog,
    catalog_names,
    fuchsian_invariants,
    invariants_from_json,
    invariants_from_star,
    kleinian_invariants,
    lattices_from_minus,
    validate,
)
from .verify import (
    DEFAULT_ORDER,
    DEFAULT_RANDOM_COUNT,
    DEFAULT_SEED,
    VerificationReport,
    run_suite,
    verify_lattices,
)


def _parse_alphas(text: str):
    try:
        alphas = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise CoxlatError(f"could not parse ramification indices from {text!r}")
    if not alphas:
        raise CoxlatError("expected a comma-separated list of ramification indices")
    return alphas


def _add_input_options(sub, with_gram=True):
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--kleinian", metavar="A,A,...",
                       help="ramification indices, Kleinian pattern (b=2, beta=alpha-1)")
    group.add_argument("--fuchsian", metavar="A,A,...",
                       help="ramification indices, genus-0 Fuchsian pattern (b=r-2, beta=1)")
    group.add_argument("--name", metavar="NAME", help="catalog entry, e.g. E8 or D5")
    group.add_argument("--invariants", metavar="FILE",
                       help="JSON file with orbit invariants")
    if with_gram:
        group.add_argument("--gram", metavar="FILE",
                           help="JSON file with a lattice ({labels, gram})")
    return group


def _load_invariants(args):
    if getattr(args, "kleinian", None):
        return kleinian_invariants(_parse_alphas(args.kleinian))
    if getattr(args, "fuchsian", None):
        return fuchsian_invariants(_parse_alphas(args.fuchsian))
    if getattr(args, "name", None):
        return catalog(args.name)
    if getattr(args, "invariants", None):
        with open(args.invariants, encoding="utf-8") as handle:
            return invariants_from_json(json.load(handle))
    return None


def _load_lattice(path: str) -> Lattice:
    with open(path, encoding="utf-8") as handle:
        return Lattice.from_json(json.load(handle))


def _star_lattices(args):
    """Resolve any input choice to StarLattices (decoding a Gram if needed)."""
    inv = _load_invariants(args)
    if inv is not None:
        return build(inv)
    lat = _load_lattice(args.gram)
    inv, kind, arms = invariants_from_star(lat)
    return lattices_from_minus(lat, inv, kind, arms, lat.rank - 1)


def _emit_json(obj):
    print(json.dumps(obj))


def _print_lattice(title: str, lat: Lattice):
    print(f"{title}  (rank {lat.rank})")
    print("  basis:", " ".join(lat.labels))
    width = max(len(str(x)) for row in lat.gram for x in row)
    for row in lat.gram:
        print("  " + " ".join(f"{x:>{width}}" for x in row))


# ---------------------------------------------------------------------------
# subcommands


def cmd_build(args) -> int:
    lats = build(_load_invariants(args))
    if args.format == "json":
        _emit_json({"minus": lats.minus.to_json(),
                    "zero": lats.zero.to_json(),
                    "plus": lats.plus.to_json()})
    else:
        print(f"{lats.kind.value} {lats.invariants.describe()}")
        for title, lat in (("V_minus", lats.minus), ("V_zero", lats.zero), ("V_plus", lats.plus)):
            _print_lattice(title, lat)
    return 0


def cmd_charpoly(args) -> int:
    if getattr(args, "gram", None):
        lat = _load_lattice(args.gram)
        delta = char_poly(coxeter_matrix(lat))
        if args.format == "json":
            _emit_json({"charpoly": delta})
        else:
            print(f"charpoly: {poly_to_string(delta)}")
        return 0
    lats = build(_load_invariants(args))
    deltas = {which: char_poly(coxeter_matrix(getattr(lats, which)))
              for which in ("minus", "zero", "plus")}
    if args.format == "json":
        _emit_json(deltas)
    else:
        for which, delta in deltas.items():
            print(f"{which:<5}: {poly_to_string(delta)}")
    return 0


def cmd_poincare(args) -> int:
    lats = _star_lattices(args)
    rows = {}
    if args.route in ("direct", "both"):
        rows["direct"] = poincare_direct(lats.invariants, lats.kind, args.order)
    if args.route in ("quotient", "both"):
        top = lats.minus if lats.kind is SingularityKind.KLEINIAN else lats.plus
        rows["quotient"] = series_from_rational(
            char_poly(coxeter_matrix(top)),
            char_poly(coxeter_matrix(lats.zero)),
            args.order,
        )
    if args.format == "json":
        _emit_json({key: s.to_json() for key, s in rows.items()})
    else:
        for key, s in rows.items():
            print(f"{key:<8}: {s}")
    return 0


def cmd_hilbert(args) -> int:
    if getattr(args, "gram", None):
        lat = _load_lattice(args.gram)
        root_index = lat.rank - 1 if args.root is None else args.root
        if not 0 <= root_index < lat.rank:
            raise CoxlatError(f"--root {root_index} out of range for rank {lat.rank}")
        rl = RootedLattice.at_basis_index(lat, root_index)
    else:
        lats = build(_load_invariants(args))
        rl = RootedLattice.at_basis_index(lats.zero, lats.center)
    rows = {}
    if args.series in ("P", "both"):
        rows["P"] = hilbert_P(rl, args.order)
    if args.series in ("Q", "both"):
        rows["Q"] = hilbert_Q(rl, args.order)
    if args.format == "json":
        _emit_json({key: s.to_json() for key, s in rows.items()})
    else:
        for key, s in rows.items():
            print(f"{key}: {s}")
    return 0


def _emit_reports(reports, fmt: str) -> int:
    failures = [r for r in reports if not r.passed]
    if fmt == "json":
        for report in reports:
            _emit_json(report.to_json())
    else:
        for report in reports:
            print(report.row())
        total = len(reports)
        if failures:
            print(f"{len(failures)} of {total} checks FAILED")
        else:
            print(f"all {total} checks passed")
    return 1 if failures else 0


def cmd_verify(args) -> int:
    if args.all:
        if args.format == "json":
            _emit_json({"check": "suite-config", "status": "info", "order": args.order,
                        "seed": args.seed, "random_inputs": args.random})
        else:
            print(f"# catalog + {args.random} random Fuchsian inputs, "
                  f"order {args.order}, seed {args.seed}")
        reports = run_suite(order=args.order, n_random=args.random, seed=args.seed)
        return _emit_reports(reports, args.format)
    if getattr(args, "gram", None):
        lat = _load_lattice(args.gram)
        started = time.perf_counter()
        try:
            inv, kind, arms = invariants_from_star(lat)
        except NotAStarLattice as exc:
            report = VerificationReport(
                check="star-structure",
                subject=f"gram:{Path(args.gram).name}",
                passed=False,
                order=0,
                witness={"identity": "Gram decodes as a star configuration",
                         "index": exc.index, "expected": "chain attached to center",
                         "got": str(exc)},
                elapsed=time.perf_counter() - started,
            )
            return _emit_reports([report], args.format)
        lats = lattices_from_minus(lat, inv, kind, arms, lat.rank - 1)
        reports = verify_lattices(lats, args.order, subject=f"gram:{Path(args.gram).name}")
        return _emit_reports(reports, args.format)
    inv = _load_invariants(args)
    reports = verify_lattices(build(inv), args.order)
    return _emit_reports(reports, args.format)


def cmd_catalog(args) -> int:
    entries = []
    for name in catalog_names():
        inv = catalog(name)
        kind = validate(inv)
        entries.append({"name": name, "kind": kind.value,
                        "alpha": list(inv.alphas), "b": inv.b,
                        "pairs": [list(p) for p in inv.pairs]})
    if args.format == "json":
        _emit_json({"entries": entries})
    else:
        for entry in entries:
            alphas = ",".join(str(a) for a in entry["alpha"])
            print(f"{entry['name']:<5} {entry['kind']:<9} alpha=({alphas}) b={entry['b']}")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxlat",
        description="Exact star-lattice Coxeter elements and Poincare series",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def common(sub):
        sub.add_argument("--format", choices=("text", "json"), default="text")

    sub = subparsers.add_parser("build", help="print the three star lattices")
    _add_input_options(sub, with_gram=False)
    common(sub)
    sub.set_defaults(handler=cmd_build)

    sub = subparsers.add_parser("charpoly", help="characteristic polynomials of the Coxeter elements")
    _add_input_options(sub)
    common(sub)
    sub.set_defaults(handler=cmd_charpoly)

    sub = subparsers.add_parser("poincare", help="Poincare series by either route")
    _add_input_options(sub)
    sub.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sub.add_argument("--route", choices=("direct", "quotient", "both"), default="both")
    common(sub)
    sub.set_defaults(handler=cmd_poincare)

    sub = subparsers.add_parser("hilbert", help="orbit series P and Q of (V_zero, E)")
    _add_input_options(sub)
    sub.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sub.add_argument("--series", choices=("P", "Q", "both"), default="both")
    sub.add_argument("--root", type=int, default=None,
                     help="basis index of the distinguished root (gram input only)")
    common(sub)
    sub.set_defaults(handler=cmd_hilbert)

    sub = subparsers.add_parser("verify", help="run the identity checks")
    group = _add_input_options(sub)
    group.add_argument("--all", action="store_true",
                       help="whole catalog plus seeded random Fuchsian tuples")
    sub.add_argument("--order", type=int, default=DEFAULT_ORDER)
    sub.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_argument("--random", type=int, default=DEFAULT_RANDOM_COUNT,
                     metavar="N", help="number of random Fuchsian inputs for --all")
    common(sub)
    sub.set_defaults(handler=cmd_verify)

    sub = subparsers.add_parser("catalog", help="list the named entries")
    common(sub)
    sub.set_defaults(handler=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CoxlatError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
