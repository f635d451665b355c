"""hopfkit command line: suite runner, evaluator, pairing, matrix dumps.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

from .coiso import galilei_subgroup, homogeneous_space, homogeneous_space_report, subgroup_report
from .errors import ConfigError, HopfkitError, UnknownSuite
from .hopf import BUILTIN_NAMES, builtin, verify_hopf
from .induce import (
    GalileiVector,
    galilei_rep,
    ind_generic_report,
    intertwiner_report,
    jform_report,
    mirror_right_report,
    relations_report,
    unitarity_report,
)
from .parser import parse, print_element
from .pairing import engine, pairing_report
from .quasiinv import (
    cocycle_check,
    coboundary_vanishing_report,
    essential_invariance_decide,
    galilei_weight,
    nu_w_functional,
    quasi_invariance_check,
    recurrence_report,
)
from .report import CheckReport

CONFIG_KEYS = ("window", "degree", "preset", "suites", "output")


def _merge(reports, suite_name, params):
    out = CheckReport(suite_name, params=params)
    for rep in reports:
        prefix = rep.preset or rep.suite
        for c in rep.checks:
            c.id = f"{prefix}::{c.id}"
            out.checks.append(c)
        out.params.update({f"{prefix}.{k}": v for k, v in rep.params.items()})
    return out.finalize()


def _suite_hopf_axioms(cfg):
    degree = cfg.get("degree", 4)
    names = [cfg["preset"]] if cfg.get("preset") in ("uq-g1", "fq-g1", "fq-j") \
        else ["uq-g1", "fq-g1", "fq-j"]
    return _merge([verify_hopf(builtin(n), degree) for n in names],
                  "hopf-axioms", {"degree": degree})


def _suite_pairing(cfg):
    return pairing_report(law_degree=cfg.get("degree", 1))


def _suite_homogeneous_space(cfg):
    return homogeneous_space_report(galilei_subgroup(),
                                    cfg.get("degree", 4),
                                    cfg.get("side", "left"))


def _suite_coisotropic(cfg):
    return subgroup_report(galilei_subgroup(), cfg.get("degree", 3))


def _suite_functional(form):
    def run(cfg):
        return quasi_invariance_check(nu_w_functional(), galilei_weight(),
                                      degree=cfg.get("degree", 2),
                                      window=cfg.get("window", 5),
                                      form=form, side=cfg.get("side", "left"))
    return run


def _suite_cocycle(cfg):
    rep = cocycle_check(galilei_weight(), cfg.get("degree", 2),
                        side=cfg.get("side", "left"))
    recurrence_report(8, rep)
    return _merge([rep, coboundary_vanishing_report(degree=1)],
                  "cocycle", dict(rep.params))


def _suite_essential_invariance(cfg):
    window = cfg.get("window", 8)
    rep = CheckReport("essential-invariance", preset="galilei",
                      params={"window": window})
    for wl in range(1, window + 1):
        res = essential_invariance_decide(galilei_weight(), wl)
        rep.record(f"refuted[{wl}]", res.status == "refuted",
                   law="no invertible coboundary xi exists",
                   witness=res.status)
        if res.certificate and wl == window:
            rep.params["certificate"] = res.certificate
    return rep.finalize()


def _suite_relations(cfg):
    return relations_report(cfg.get("window", 5))


def _suite_unitarity(cfg):
    return unitarity_report(cfg.get("window", 5))


def _suite_jform(cfg):
    return jform_report(cfg.get("window", 5))


def _suite_intertwiner(cfg):
    return intertwiner_report(cfg.get("window", 4))


def _suite_ind_generic(cfg):
    return ind_generic_report(galilei_subgroup(), cfg.get("degree", 3))


def _suite_mirror_right(cfg):
    sub = galilei_subgroup()
    reports = [
        mirror_right_report(sub, cfg.get("degree", 3)),
        cocycle_check(galilei_weight(), cfg.get("degree", 2), side="right"),
        quasi_invariance_check(nu_w_functional(), galilei_weight(),
                               degree=cfg.get("degree", 2),
                               window=cfg.get("window", 4),
                               form="def", side="right"),
        quasi_invariance_check(nu_w_functional(), galilei_weight(),
                               degree=cfg.get("degree", 2),
                               window=cfg.get("window", 4),
                               form="lemma", side="right"),
    ]
    return _merge(reports, "mirror-right", {"degree": cfg.get("degree", 3)})


SUITES = {
    "hopf-axioms": _suite_hopf_axioms,
    "pairing": _suite_pairing,
    "homogeneous-space": _suite_homogeneous_space,
    "coisotropic": _suite_coisotropic,
    "functional-def": _suite_functional("def"),
    "functional-lemma": _suite_functional("lemma"),
    "cocycle": _suite_cocycle,
    "essential-invariance": _suite_essential_invariance,
    "relations": _suite_relations,
    "unitarity": _suite_unitarity,
    "jform": _suite_jform,
    "intertwiner": _suite_intertwiner,
    "ind-generic": _suite_ind_generic,
    "mirror-right": _suite_mirror_right,
}


def run_suite(name: str, config: dict | None = None) -> CheckReport:
    """Run one registered verification suite with the given configuration."""
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; choose from "
                           + ", ".join(sorted(SUITES)))
    return SUITES[name](dict(config or {}))


def load_config(path: str) -> dict:
    cfg = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path}:{lineno}: expected key=value")
                key, _, value = line.partition("=")
                key, value = key.strip(), value.strip()
                if key not in CONFIG_KEYS:
                    raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
                cfg[key] = value
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    for key in ("window", "degree"):
        if key in cfg:
            try:
                cfg[key] = int(cfg[key])
            except ValueError as exc:
                raise ConfigError(f"{key} must be an integer") from exc
    return cfg


def _emit(payload: dict, out_path: str | None):
    payload = dict(payload)
    payload["generated_at"] = datetime.now(timezone.utc).isoformat()
    text = json.dumps(payload, indent=2)
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _cmd_verify(args) -> int:
    cfg = load_config(args.config) if args.config else {}
    for key in ("degree", "window", "preset", "side"):
        value = getattr(args, key, None)
        if value is not None:
            cfg[key] = value
    names = [args.suite]
    if args.suite == "all":
        names = sorted(SUITES)
    elif "suites" in cfg and args.suite == "config":
        names = [s.strip() for s in cfg["suites"].split(",") if s.strip()]
    status = 0
    for name in names:
        rep = run_suite(name, cfg)
        _emit(rep.to_dict(), args.out or cfg.get("output"))
        if not rep.passed:
            status = 1
    return status


def _cmd_eval(args) -> int:
    e = parse(args.expr, args.algebra)
    print(print_element(e))
    return 0


def _cmd_pair(args) -> int:
    X = parse(args.xexpr, "uq-g1")
    a = parse(args.aexpr, "fq-g1")
    print(engine().pair(X, a))
    return 0


def _cmd_matrix(args) -> int:
    window = args.window
    basis = list(range(-window, window + 1))
    cols = []
    for l in basis:
        image = galilei_rep(args.op, GalileiVector.basis(l))
        cols.append({out: str(c) for out, c in sorted(image.coeffs.items())})
    matrix = [[cols[j].get(out, "0") for j in range(len(basis))]
              for out in basis]
    _emit({
        "operator": args.op,
        "window": window,
        "basis": [f"phi*chi^{l}" for l in basis],
        "matrix": matrix,
    }, args.out)
    return 0


def _cmd_homogeneous_space(args) -> int:
    if args.preset != "galilei":
        raise ConfigError(f"unknown preset {args.preset!r}")
    basis = homogeneous_space(galilei_subgroup(), args.degree, args.side)
    for b in basis:
        print(print_element(b))
    return 0


def _cmd_induce(args) -> int:
    cfg = {"window": args.window, "degree": args.degree}
    if args.generic:
        if args.corep != "trivial":
            raise ConfigError(f"unknown corepresentation {args.corep!r}")
        rep = ind_generic_report(galilei_subgroup(), args.degree)
    else:
        if args.preset != "galilei":
            raise ConfigError(f"unknown preset {args.preset!r}")
        if args.suite not in ("relations", "unitarity", "jform", "intertwiner"):
            raise UnknownSuite(f"unknown induce suite {args.suite!r}")
        rep = run_suite(args.suite, cfg)
    _emit(rep.to_dict(), args.out)
    return 0 if rep.passed else 1


def build_arg_parser():
    ap = argparse.ArgumentParser(
        prog="hopfkit",
        description="Exact verification engine for the built-in quantum "
                    "Galilei structures")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="suite name, or 'all'")
    p.add_argument("--degree", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--preset")
    p.add_argument("--side", choices=("left", "right"))
    p.add_argument("--config")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("eval", help="normal-order an expression")
    p.add_argument("--algebra", required=True, choices=BUILTIN_NAMES)
    p.add_argument("expr")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("pair", help="evaluate the duality pairing")
    p.add_argument("xexpr", help="expression in uq-g1")
    p.add_argument("aexpr", help="expression in fq-g1")
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("matrix", help="dump a Galilei operator on a window")
    p.add_argument("--op", required=True,
                   choices=("K", "Kinv", "B", "T", "M"))
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_matrix)

    p = sub.add_parser("homogeneous-space",
                       help="print a basis of the homogeneous-space window")
    p.add_argument("--preset", default="galilei")
    p.add_argument("--degree", type=int, default=4)
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.set_defaults(fn=_cmd_homogeneous_space)

    p = sub.add_parser("induce", help="induced-representation suites")
    p.add_argument("--preset", default="galilei")
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--suite", default="relations")
    p.add_argument("--generic", action="store_true")
    p.add_argument("--corep", default="trivial")
    p.add_argument("--out")
    p.set_defaults(fn=_cmd_induce)

    return ap


def main(argv=None) -> int:
    ap = build_arg_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except (ConfigError, UnknownSuite) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HopfkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
