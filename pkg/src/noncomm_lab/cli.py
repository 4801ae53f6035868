"""Command-line front end.

Subcommands:

* ``group``      -- build a group, print order/center/labels as JSON.
* ``graph``      -- build the noncommuting graph, export DOT/JSON.
* ``constants``  -- print nu_2, omega, omega', and the closed-form constant.
* ``verify``     -- run a campaign of checks, write JSON reports.
* ``chain``      -- run the truncation-chain verifier on random functions.

Exit codes: 0 all asserted checks pass, 1 a check failed numerically,
2 config/spec parse error, 3 abelian group, 4 search budget exceeded.
Recorded-only chain links (the per-level restricted estimates) never affect
the exit code.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import graphs, groups, inequalities, isoperimetry
from .errors import (
    AbelianGroupError,
    BudgetExceededError,
    GroupSpecError,
    NoncommLabError,
    OrderCapExceededError,
)

SCHEMA_VERSION = "1"

KNOWN_CHECKS = ("p_property", "isoperimetric", "sobolev_flat", "dagger", "double_dagger", "chain")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG_ERROR = 2
EXIT_ABELIAN = 3
EXIT_BUDGET = 4


def report_schema_version() -> str:
    return SCHEMA_VERSION


@dataclass
class CampaignConfig:
    group_spec: str
    checks: list = field(default_factory=lambda: list(KNOWN_CHECKS))
    mode: str = "exhaustive"
    seed: int = 0
    count: int = 50
    delta: float = 1.0
    iota: float = 1.0
    R0: float = 1.0
    v0: Optional[float] = None  # default: 1 + mu(V)
    c_variant: str = "gamma_g"
    output: Optional[str] = None

    def validate(self) -> None:
        unknown = [c for c in self.checks if c not in KNOWN_CHECKS]
        if unknown:
            raise GroupSpecError(f"unknown checks: {unknown}")
        if self.mode not in ("exhaustive", "sampled"):
            raise GroupSpecError(f"unknown mode {self.mode!r}")


def parse_campaign_config(text: str) -> CampaignConfig:
    """Parse a key = value config file (one pair per line, # comments)."""
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise GroupSpecError(f"config line {lineno}: expected key = value, got {raw!r}")
        key, val = (s.strip() for s in line.split("=", 1))
        values[key] = val
    if "group" not in values:
        raise GroupSpecError("config is missing the required 'group' key")
    cfg = CampaignConfig(group_spec=values.pop("group"))
    casts = {
        "checks": lambda v: [s.strip() for s in v.split(",") if s.strip()],
        "mode": str,
        "seed": int,
        "count": int,
        "delta": float,
        "iota": float,
        "R0": float,
        "v0": float,
        "c_variant": str,
        "output": str,
    }
    for key, val in values.items():
        if key not in casts:
            raise GroupSpecError(f"unknown config key {key!r}")
        setattr(cfg, key, casts[key](val))
    cfg.validate()
    return cfg


# ---------------------------------------------------------------------------
# campaign runner


def _graph_facts(graph: graphs.WeightedGraph) -> dict:
    return {
        "vertices": graph.vertex_count,
        "edges": graph.edge_count(),
        "degrees": [graph.degree(x) for x in range(graph.vertex_count)],
        "connected": graphs.is_connected(graph),
        "diameter": graphs.diameter(graph),
        "conventions": {"distance": "hop count", "balls": "strict < r"},
    }


def run(config: CampaignConfig) -> tuple[int, dict]:
    """Execute the configured checks; returns (exit_code, reports).

    Reports are also written as JSON files when config.output is set.
    """
    config.validate()
    group = groups.build_group(config.group_spec)
    graph = graphs.noncommuting_graph(group)
    nu2 = isoperimetry.nu(graph, 2.0)
    reports: dict = {
        "summary": {
            "schema_version": SCHEMA_VERSION,
            "group": group.name,
            "group_order": group.order,
            "center_size": len(groups.center(group)),
            "graph": _graph_facts(graph),
            "nu_2": nu2,
            "checks_run": list(config.checks),
            "seed": config.seed,
            "mode": config.mode,
        }
    }
    failures: list[str] = []
    n = config.delta * isoperimetry.nu(graph, config.R0 + 1.0)
    omega = graph.min_vertex_weight()
    omega_prime = graph.min_edge_weight()
    c = isoperimetry.constant_c(omega, omega_prime, nu2, config.iota, n, config.c_variant)
    reports["summary"]["constants"] = {"n": n, "omega": omega, "omega_prime": omega_prime, "c": c}

    if "p_property" in config.checks:
        cert = isoperimetry.check_P(graph, config.delta, config.iota, config.R0)
        reports["p_property"] = cert.to_json_dict()
        if not cert.passed:
            failures.append("p_property")

    if "isoperimetric" in config.checks:
        iso = isoperimetry.verify_isoperimetric(
            graph, c, n, mode=config.mode, sample_count=config.count, seed=config.seed
        )
        reports["isoperimetric"] = iso.to_json_dict()
        if not iso.passed:
            failures.append("isoperimetric")

    family = None
    if {"sobolev_flat", "dagger", "double_dagger"} & set(config.checks):
        family = inequalities.default_family(graph, seed=config.seed, count=config.count)

    if "sobolev_flat" in config.checks:
        p_flat = 2.0
        v0 = config.v0 if config.v0 is not None else 1.0 + graphs.mu_measure(graph, range(graph.vertex_count))
        C_np = inequalities.empirical_C(graph, c, n, p_flat, v0, family)
        checks = [
            inequalities.check_sobolev_flat(graph, f, c, n, p_flat, v0, C_np, label=f"family[{i}]")
            for i, f in enumerate(family)
        ]
        bad = [r.to_json_dict() for r in checks if not r.holds]
        reports["sobolev_flat"] = {
            "C_np": C_np,
            "v0": v0,
            "p": p_flat,
            "family_size": len(family),
            "violations": bad,
        }
        if bad:
            failures.append("sobolev_flat")

    if "dagger" in config.checks:
        A = inequalities.empirical_A(graph, n, family)
        bad = [
            r.to_json_dict()
            for i, f in enumerate(family)
            if not (r := inequalities.check_dagger(graph, f, n, A, label=f"family[{i}]")).holds
        ]
        reports["dagger"] = {"A": A, "family_size": len(family), "violations": bad}
        if bad:
            failures.append("dagger")

    if "double_dagger" in config.checks:
        B = inequalities.empirical_B(graph, n, family)
        bad = [
            r.to_json_dict()
            for i, f in enumerate(family)
            if not (r := inequalities.check_double_dagger(graph, f, n, B, label=f"family[{i}]")).holds
        ]
        reports["double_dagger"] = {"B": B, "family_size": len(family), "violations": bad}
        if bad:
            failures.append("double_dagger")

    if "chain" in config.checks:
        rng = random.Random(config.seed)
        runs = []
        final_failures = 0
        recorded_link_failures = 0
        for i in range(config.count):
            f = inequalities.random_test_function(graph.vertex_count, rng)
            B = inequalities.empirical_B(graph, n, inequalities.chain_family(graph, f, n))
            rep = inequalities.verify_chain(graph, f, n, B, label=f"random[{i}]")
            recorded_link_failures += len(rep.failed_links())
            if not rep.final_holds:
                final_failures += 1
            runs.append(rep.to_json_dict())
        reports["chain"] = {
            "count": config.count,
            "final_failures": final_failures,
            "recorded_link_failures": recorded_link_failures,
            "runs": runs,
        }
        if final_failures:
            failures.append("chain")

    reports["summary"]["failures"] = failures
    reports["summary"]["passed"] = not failures
    if config.output:
        outdir = Path(config.output)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, payload in reports.items():
            payload = dict(payload)
            payload.setdefault("schema_version", SCHEMA_VERSION)
            (outdir / f"{name}.json").write_text(json.dumps(payload, indent=2) + "\n")
    return (EXIT_OK if not failures else EXIT_CHECK_FAILED), reports


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="noncomm-lab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p_group = sub.add_parser("group", help="build a group and print its data")
    p_group.add_argument("--spec", required=True, help="group spec, e.g. Q8 or D4xC2")

    p_graph = sub.add_parser("graph", help="build the noncommuting graph and export it")
    p_graph.add_argument("--group", required=True)
    p_graph.add_argument("--dot", help="write DOT to this path")
    p_graph.add_argument("--json", help="write JSON graph dump to this path")

    p_const = sub.add_parser("constants", help="print nu_2 and the closed-form constant")
    p_const.add_argument("--group", required=True)
    p_const.add_argument("--variant", choices=["general", "gamma_g"], default="gamma_g")
    p_const.add_argument("--delta", type=float, default=1.0)
    p_const.add_argument("--iota", type=float, default=1.0)
    p_const.add_argument("--R0", type=float, default=1.0)

    p_verify = sub.add_parser("verify", help="run verification checks")
    p_verify.add_argument("--group")
    p_verify.add_argument("--config", help="campaign config file (key = value lines)")
    p_verify.add_argument("--all", action="store_true", help="run every known check")
    p_verify.add_argument("--checks", help="comma-separated check names")
    p_verify.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--count", type=int, default=50)
    p_verify.add_argument("--c-variant", choices=["general", "gamma_g"], default="gamma_g")
    p_verify.add_argument("--output", help="directory for JSON reports")

    p_chain = sub.add_parser("chain", help="run the truncation-chain verifier")
    p_chain.add_argument("--group", required=True)
    p_chain.add_argument("--count", type=int, default=10)
    p_chain.add_argument("--seed", type=int, default=0)
    p_chain.add_argument("--output", help="directory for JSON reports")
    return ap


def _cmd_group(args) -> int:
    g = groups.build_group(args.spec)
    z = sorted(groups.center(g))
    print(
        json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "name": g.name,
                "order": g.order,
                "identity": g.identity,
                "labels": list(g.labels),
                "center": z,
                "center_size": len(z),
                "abelian": groups.is_abelian(g),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_graph(args) -> int:
    g = groups.build_group(args.group)
    graph = graphs.noncommuting_graph(g)
    if args.dot:
        Path(args.dot).write_text(graphs.to_dot(graph, name=g.name.replace("x", "_")))
    if args.json:
        Path(args.json).write_text(graphs.to_json(graph) + "\n")
    facts = _graph_facts(graph)
    facts["schema_version"] = SCHEMA_VERSION
    print(json.dumps(facts, indent=2))
    return EXIT_OK


def _cmd_constants(args) -> int:
    g = groups.build_group(args.group)
    graph = graphs.noncommuting_graph(g)
    nu2 = isoperimetry.nu(graph, 2.0)
    n = args.delta * isoperimetry.nu(graph, args.R0 + 1.0)
    c = isoperimetry.constant_c(
        graph.min_vertex_weight(), graph.min_edge_weight(), nu2, args.iota, n, args.variant
    )
    print(
        json.dumps(
            {
                "schema_version": SCHEMA_VERSION,
                "group": g.name,
                "nu_2": nu2,
                "n": n,
                "omega": graph.min_vertex_weight(),
                "omega_prime": graph.min_edge_weight(),
                "variant": args.variant,
                "c": c,
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.config:
        cfg = parse_campaign_config(Path(args.config).read_text())
        if args.output:
            cfg.output = args.output
    else:
        if not args.group:
            raise GroupSpecError("verify needs --group or --config")
        checks = list(KNOWN_CHECKS) if args.all or not args.checks else [
            s.strip() for s in args.checks.split(",") if s.strip()
        ]
        cfg = CampaignConfig(
            group_spec=args.group,
            checks=checks,
            mode=args.mode,
            seed=args.seed,
            count=args.count,
            c_variant=args.c_variant,
            output=args.output,
        )
    code, reports = run(cfg)
    summary = reports["summary"]
    print(f"group {summary['group']}: |V|={summary['graph']['vertices']}, "
          f"|E|={summary['graph']['edges']}, nu_2={summary['nu_2']}, "
          f"c={summary['constants']['c']:.6e}")
    for name in cfg.checks:
        if name in reports:
            status = "FAIL" if name in summary["failures"] else "pass"
            print(f"  {name}: {status}")
    return code


def _cmd_chain(args) -> int:
    cfg = CampaignConfig(
        group_spec=args.group, checks=["chain"], seed=args.seed, count=args.count, output=args.output
    )
    code, reports = run(cfg)
    chain = reports["chain"]
    print(
        f"chain on {reports['summary']['group']}: {chain['count']} functions, "
        f"{chain['final_failures']} final failures, "
        f"{chain['recorded_link_failures']} recorded link discrepancies"
    )
    return code


def main(argv: Optional[list[str]] = None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    handlers = {
        "group": _cmd_group,
        "graph": _cmd_graph,
        "constants": _cmd_constants,
        "verify": _cmd_verify,
        "chain": _cmd_chain,
    }
    try:
        return handlers[args.command](args)
    except (GroupSpecError, OrderCapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG_ERROR
    except AbelianGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ABELIAN
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NoncommLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    raise SystemExit(main())
