"""Command-line surface: invariant reports, family verdicts, catalog.

Exit codes: 0 success (including negative verdicts), 1 usage/parse errors,
2 mathematical rejection (finiteness proxy failure).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

import sympy as sp

from .catalog import ENTRIES, entry_names, get_entry
from .config import AnalysisConfig, load_config_file, parse_samples
from .errors import MapGermError, NotFinitelyDetermined, ParseError, SpecError
from .family import FamilyVerdict, family_verdict
from .gb import INFINITE
from .germ import Unfolding, validate_map_germ
from .invariants import InvariantReport, invariant_report
from .parser import load_germ_file, load_germ_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2


def _jsonify(value):
    if value is INFINITE:
        return "infinite"
    if isinstance(value, sp.Rational):
        return str(value)
    return value


def report_to_json(report: InvariantReport) -> dict:
    return {
        "C": _jsonify(report.crosscaps),
        "T": _jsonify(report.triple_points),
        "mu_D2": _jsonify(report.mu_d2),
        "mu_D2tilde": _jsonify(report.mu_d2tilde),
        "mu_D2tilde_mod_S2": _jsonify(report.mu_d2tilde_mod_s2),
        "mu_image": _jsonify(report.mu_image),
        "euler": _jsonify(report.euler),
        "m0": _jsonify(report.m0),
        "finitely_determined_proxy": report.finitely_determined_proxy,
        "consistent": report.consistent,
        "identity_checks": [
            {
                "name": c.name,
                "lhs": _jsonify(c.lhs),
                "rhs": _jsonify(c.rhs),
                "passed": c.passed,
                "note": c.note,
            }
            for c in report.identity_checks
        ],
        "provenance": dict(report.provenance),
        "warnings": list(report.warnings),
        "verdicts": {},
    }


def verdict_to_json(v: FamilyVerdict) -> dict:
    return {
        "generic": report_to_json(v.report_generic),
        "special": report_to_json(v.report_special),
        "samples": [
            {"t": _jsonify(t0), "report": report_to_json(rep)}
            for t0, rep in v.sample_reports
        ],
        "verdicts": {
            "mu_constant": v.mu_constant,
            "topologically_trivial": v.topologically_trivial,
            "whitney_equisingular": v.whitney_equisingular,
            "bilipschitz_trivial": v.bilipschitz_trivial,
            "excellent": v.excellent,
            "m0_constant": v.m0_constant,
        },
        "equivalent_conditions": [
            {
                "name": c.name,
                "holds": c.holds,
                "pairs": [
                    {"invariant": n, "generic": _jsonify(g), "special": _jsonify(s)}
                    for n, g, s in c.pairs
                ],
            }
            for c in v.equivalent_conditions
        ],
        "diagnostics": list(v.diagnostics),
    }


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def render_report_text(report: InvariantReport) -> str:
    return _doc_report_text(report_to_json(report))


def render_verdict_text(v: FamilyVerdict) -> str:
    return _doc_verdict_text(verdict_to_json(v))


def _build_config(args) -> AnalysisConfig:
    cfg = AnalysisConfig()
    if getattr(args, "config", None):
        cfg = cfg.with_overrides(**load_config_file(args.config))
    overrides = {}
    if getattr(args, "truncation_ceiling", None) is not None:
        overrides["truncation_ceiling"] = args.truncation_ceiling
    if getattr(args, "seed", None) is not None:
        overrides["seed"] = args.seed
    if getattr(args, "samples", None):
        overrides["t_samples"] = parse_samples(args.samples)
    if getattr(args, "no_crosscheck", False):
        overrides["crosscheck"] = False
    if getattr(args, "cache_dir", None):
        overrides["cache_dir"] = args.cache_dir
    return cfg.with_overrides(**overrides)


def _cache_key(spec: dict, cfg: AnalysisConfig, kind: str) -> str:
    payload = json.dumps(
        {
            "kind": kind,
            "spec": spec,
            "config": {
                "truncation_ceiling": cfg.truncation_ceiling,
                "seed": cfg.seed,
                "m0_samples": cfg.m0_samples,
                "t_samples": [str(v) for v in cfg.t_samples],
                "crosscheck": cfg.crosscheck,
            },
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _cache_get(cfg: AnalysisConfig, key: str):
    if not cfg.cache_dir:
        return None
    path = os.path.join(cfg.cache_dir, key + ".json")
    if os.path.exists(path):
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return None


def _cache_put(cfg: AnalysisConfig, key: str, doc: dict):
    if not cfg.cache_dir:
        return
    os.makedirs(cfg.cache_dir, exist_ok=True)
    path = os.path.join(cfg.cache_dir, key + ".json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=False)


def _spec_dict(spec) -> dict:
    out = {"components": list(spec.components)}
    if spec.name:
        out["name"] = spec.name
    if spec.parameter is not None:
        out["parameter"] = "t"
    return out


def _germ_report_doc(spec, cfg: AnalysisConfig) -> dict:
    key = _cache_key(_spec_dict(spec), cfg, "invariants")
    cached = _cache_get(cfg, key)
    if cached is not None:
        return cached
    g = validate_map_germ(spec)
    report = invariant_report(g, cfg)
    doc = report_to_json(report)
    _cache_put(cfg, key, doc)
    return doc


def _family_verdict_doc(spec, cfg: AnalysisConfig) -> dict:
    key = _cache_key(_spec_dict(spec), cfg, "family")
    cached = _cache_get(cfg, key)
    if cached is not None:
        return cached
    u = validate_map_germ(spec)
    if not isinstance(u, Unfolding):
        raise SpecError("not an unfolding: no parameter declared")
    verdict = family_verdict(u, cfg)
    doc = verdict_to_json(verdict)
    _cache_put(cfg, key, doc)
    return doc


def _doc_report_text(doc: dict) -> str:
    rows = [
        ("C (cross-caps)", doc["C"]),
        ("T (triple points)", doc["T"]),
        ("mu(D2)", doc["mu_D2"]),
        ("mu(D2~)", doc["mu_D2tilde"]),
        ("mu(D2~/S2)", doc["mu_D2tilde_mod_S2"]),
        ("mu_image", doc["mu_image"]),
        ("euler(disentanglement)", doc["euler"]),
        ("m0 (multiplicity)", doc["m0"]),
        ("finitely determined (proxy)", doc["finitely_determined_proxy"]),
        ("consistent", doc["consistent"]),
    ]
    width = max(len(r[0]) for r in rows)
    lines = [f"{name:<{width}}  {value}" for name, value in rows]
    for c in doc["identity_checks"]:
        status = "ok" if c["passed"] else "FAIL"
        lines.append(f"check {c['name']}: {status} ({c['lhs']} vs {c['rhs']})")
    for w in doc["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _doc_verdict_text(doc: dict) -> str:
    yn = lambda b: "yes" if b else "no"
    v = doc["verdicts"]
    lines = [
        f"mu-constant: {yn(v['mu_constant'])} => topologically trivial <=> "
        f"Whitney equisingular <=> bilipschitz trivial: {yn(v['topologically_trivial'])}",
        f"excellent unfolding: {yn(v['excellent'])}",
        f"m0 constant: {yn(v['m0_constant'])}",
        "",
        "generic fiber:",
        _doc_report_text(doc["generic"]),
        "",
        "special fiber (t = 0):",
        _doc_report_text(doc["special"]),
    ]
    for c in doc["equivalent_conditions"]:
        lines.append(f"condition [{c['name']}]: {yn(c['holds'])}")
    for d in doc["diagnostics"]:
        lines.append(f"note: {d}")
    return "\n".join(lines)


def cmd_invariants(args) -> int:
    try:
        spec = load_germ_file(args.path)
    except FileNotFoundError:
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return EXIT_USAGE
    except (SpecError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cfg = _build_config(args)
    try:
        doc = _germ_report_doc(spec, cfg)
    except MapGermError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    print(render_json(doc) if args.json else _doc_report_text(doc))
    if not doc["finitely_determined_proxy"]:
        print("rejected: finiteness proxy failed (non-finite colength)", file=sys.stderr)
        return EXIT_REJECTED
    return EXIT_OK


def cmd_family(args) -> int:
    try:
        spec = load_germ_file(args.path)
    except FileNotFoundError:
        print(f"error: no such file: {args.path}", file=sys.stderr)
        return EXIT_USAGE
    except (SpecError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if spec.parameter is None:
        print("error: not an unfolding (no parameter declared)", file=sys.stderr)
        return EXIT_USAGE
    cfg = _build_config(args)
    try:
        doc = _family_verdict_doc(spec, cfg)
    except NotFinitelyDetermined as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except MapGermError as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    print(render_json(doc) if args.json else _doc_verdict_text(doc))
    return EXIT_OK


def cmd_catalog(args) -> int:
    cfg = _build_config(args)
    if args.action == "list":
        for name in entry_names():
            print(name)
        return EXIT_OK
    if args.action == "show":
        try:
            entry = get_entry(args.name)
        except KeyError:
            print(f"error: unknown catalog entry {args.name!r}", file=sys.stderr)
            return EXIT_USAGE
        print(render_json(entry.spec))
        return EXIT_OK
    if args.action == "selftest":
        failures = []
        for entry in ENTRIES:
            spec = load_germ_spec(entry.spec)
            if entry.kind == "germ":
                doc = _germ_report_doc(spec, cfg)
                observed = {
                    "C": doc["C"], "T": doc["T"], "mu_D2": doc["mu_D2"],
                    "mu_D2tilde": doc["mu_D2tilde"],
                    "mu_D2tilde_mod_S2": doc["mu_D2tilde_mod_S2"],
                    "mu_image": doc["mu_image"], "euler": doc["euler"],
                    "m0": doc["m0"],
                }
                ok = all(observed.get(k) == v for k, v in entry.expected.items())
                ok = ok and doc["consistent"] and all(
                    c["passed"] for c in doc["identity_checks"]
                )
            else:
                doc = _family_verdict_doc(spec, cfg)
                v = doc["verdicts"]
                observed = {
                    "mu_constant": v["mu_constant"],
                    "excellent": v["excellent"],
                    "m0_constant": v["m0_constant"],
                    "mu_D2_generic": doc["generic"]["mu_D2"],
                    "mu_D2_special": doc["special"]["mu_D2"],
                }
                ok = all(observed.get(k) == v2 for k, v2 in entry.expected.items())
            status = "PASS" if ok else "FAIL"
            print(f"{entry.name}: {status}")
            if not ok:
                failures.append((entry.name, observed, entry.expected))
        if failures:
            for name, observed, expected in failures:
                print(f"  {name}: expected {expected}, observed {observed}", file=sys.stderr)
            return EXIT_USAGE
        return EXIT_OK
    print(f"error: unknown catalog action {args.action!r}", file=sys.stderr)
    return EXIT_USAGE


def _add_common(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--truncation-ceiling", type=int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=None, metavar="S")
    p.add_argument("--samples", default=None, metavar="LIST", help='e.g. "1,-1/2,1/3"')
    p.add_argument("--no-crosscheck", action="store_true")
    p.add_argument("--cache-dir", default=None, metavar="PATH")
    p.add_argument("--config", default=None, metavar="PATH", help="JSON config file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapgerm",
        description="Invariants and equisingularity verdicts for map germs "
        "(C^2,0) -> (C^3,0)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariant report for a germ file")
    p_inv.add_argument("path")
    _add_common(p_inv)
    p_inv.set_defaults(func=cmd_invariants)

    p_fam = sub.add_parser("family", help="equisingularity verdict for an unfolding file")
    p_fam.add_argument("path")
    _add_common(p_fam)
    p_fam.set_defaults(func=cmd_family)

    p_cat = sub.add_parser("catalog", help="catalog of classical germs")
    p_cat.add_argument("action", choices=("list", "show", "selftest"))
    p_cat.add_argument("name", nargs="?")
    _add_common(p_cat)
    p_cat.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "catalog" and args.action == "show" and not args.name:
        print("error: catalog show needs a name", file=sys.stderr)
        return EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
