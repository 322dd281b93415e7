"""
cli.py
------
Command-line front door: read a graph or configuration, run one analysis,
print a JSON report.

Usage:
    python -m src.cli verify --graph petersen.edges
    python -m src.cli wl --config-json cfg.json
    python -m src.cli analyze-drg --array "{3,2,2;1,1,3}"
    python -m src.cli certify --graph petersen.edges --json
    python -m src.cli generate johnson:7,3 --out j73.edges
    python -m src.cli oracle --family cocktail:4
    python -m src.cli recognize --family johnson:7,3

Inputs: --graph (edge list), --config-json (Configuration JSON) or
--family ("johnson:7,3"; "gnp:12" draws G(12, 1/2) with --seed).

Exit codes: 0=OK, 1=every rule not applicable (or nothing recognized), 2=input error

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional


sys.path.insert(0, str(Path(__file__).parent))

import config
from catalog import generators
from catalog.families import as_configuration, generate, parse_family, recognize
from core.coherence import (CoherenceViolation, StructureConstants, check_identities,
                            classify, structure_constants)
from core.configuration import (Configuration, ConfigurationError, DisconnectedGraphError,
                                verify_configuration)
from core.formats import (InputFormatError, dumps_report, read_configuration, read_edge_list,
                          write_configuration, write_edge_list)
from core.refinement import greedy_distinguishing_set, stabilize_colors
from core.results import NotApplicable, jsonable
from drg.bounds import ParameterError, all_tradeoffs, bipartite_diam3, spectral_gap_estimate
from drg.intersection_array import (IntersectionArray, InvalidArrayError, NotDRG,
                                    diam3_closed_forms_for, extract_intersection_array,
                                    intersection_numbers, parse_array, validate_array)
from drg.spectrum import tridiagonal_spectrum
from geometry.recognition import bang_parameter_check
from motion.certificates import primitive_drg_bound
from motion.certify import all_not_applicable, certify
from oracle.search import OracleLimitError, automorphisms, exact_motion
from rank4.analysis import (constituent_spectral_bound, cubic_residuals, merged_spectral_bound,
                            param_inequalities, route_oriented)

logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s',
)
logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_APPLICABLE = 1
EXIT_INPUT_ERROR = 2

INPUT_ERRORS = (InputFormatError, ParameterError, InvalidArrayError, ConfigurationError,
                DisconnectedGraphError, OracleLimitError, FileNotFoundError)


# =============================================================================
# INPUT
# =============================================================================

def load_input(args: argparse.Namespace, settings: Dict) -> Any:
    """Graph or Configuration named by --graph / --config-json / --family."""
    if args.graph:
        return read_edge_list(args.graph)
    if args.config_json:
        return read_configuration(args.config_json)
    if args.family:
        name, _, rest = args.family.partition(":")
        if name == "gnp":
            try:
                n = int(rest)
            except ValueError:
                raise ParameterError(f"gnp takes one integer parameter, got {rest!r}")
            return generators.random_graph(n, 0.5, settings["seed"])
        return generate(*parse_family(args.family))
    raise ParameterError("one of --graph, --config-json or --family is required")


def load_configuration(args: argparse.Namespace, settings: Dict) -> Configuration:
    return as_configuration(load_input(args, settings))


# =============================================================================
# COMMANDS
# =============================================================================

def cmd_verify(args, settings) -> tuple:
    cfg = load_configuration(args, settings)
    axioms = verify_configuration(cfg)
    report: Dict[str, Any] = {"n": cfg.n, "rank": cfg.rank, "axioms": axioms.to_dict()}
    if not axioms.is_valid():
        return report, EXIT_INPUT_ERROR
    sc = structure_constants(cfg)
    if isinstance(sc, CoherenceViolation):
        report["coherent"] = False
        report["violation"] = sc.to_dict()
    else:
        report["coherent"] = True
        report["identity_failures"] = check_identities(sc)
        report["classification"] = classify(cfg, sc).to_dict()
        report["degrees"] = sc.degrees.tolist()
    return report, EXIT_OK


def cmd_wl(args, settings) -> tuple:
    cfg = load_configuration(args, settings)
    colors, rank, rounds = stabilize_colors(cfg.colors, cfg.rank)
    stable = Configuration(colors)
    distinguishing = greedy_distinguishing_set(stable)
    report = {
        "n": cfg.n,
        "rank_before": cfg.rank,
        "rank_after": rank,
        "rounds": rounds,
        "coherent": isinstance(structure_constants(stable), StructureConstants),
        "configuration": {"colors": stable.colors.astype(int).tolist(), "pairing": list(stable.pairing)},
        "greedy_distinguishing_set": distinguishing,
    }
    return report, EXIT_OK


def _array_from_args(args, settings) -> IntersectionArray:
    if args.array:
        return parse_array(args.array)
    graph = load_input(args, settings)
    if isinstance(graph, Configuration):
        raise ParameterError("analyze-drg needs --array or a graph")
    result = extract_intersection_array(graph)
    if isinstance(result, NotDRG):
        raise ParameterError(f"graph is not distance-regular: {result!r}")
    return result


def cmd_analyze_drg(args, settings) -> tuple:
    array = _array_from_args(args, settings)
    validation = validate_array(array)
    report: Dict[str, Any] = {"array": str(array), "validation": validation.to_dict()}
    if not validation.is_valid():
        return report, EXIT_INPUT_ERROR
    rules: List[Any] = []
    report.update({
        "n": array.n,
        "k_i": list(array.k_i),
        "primitive": array.is_primitive(),
        "bipartite": array.is_bipartite,
        "spectrum": tridiagonal_spectrum(array).to_dict(),
        "intersection_numbers": intersection_numbers(array).to_dict(),
    })
    tradeoffs = all_tradeoffs(array)
    gap = spectral_gap_estimate(array, settings["epsilon"])
    motion = primitive_drg_bound(array)
    bang = bang_parameter_check(array)
    report["tradeoffs"] = tradeoffs
    report["spectral_gap"] = gap
    report["primitive_drg_bound"] = motion
    report["bang"] = bang
    rules.extend([gap, motion, bang])
    rules.extend(tradeoffs)
    if array.d == 3:
        report["diam3_closed_forms"] = diam3_closed_forms_for(array).tolist()
        if array.is_bipartite:
            _, spectrum = bipartite_diam3(array.k, array.mu)
            report["bipartite_diam3_spectrum"] = spectrum.to_dict()
    code = EXIT_NOT_APPLICABLE if all(isinstance(r, NotApplicable) for r in rules) else EXIT_OK
    return report, code


def _rank4_section(cfg: Configuration, sc: StructureConstants, epsilon: float) -> Dict[str, Any]:
    if sc.is_association_scheme:
        return {
            "cubic": [cubic_residuals(cfg, sc, i) for i in sc.off_diagonal_colors],
            "constituent_spectral_bound": constituent_spectral_bound(sc, epsilon),
            "merged_spectral_bound": merged_spectral_bound(sc, epsilon),
            "param_inequalities": param_inequalities(sc, epsilon),
        }
    return {"oriented": route_oriented(cfg)}


def cmd_certify(args, settings) -> tuple:
    cfg = load_configuration(args, settings)
    axioms = verify_configuration(cfg)
    if not axioms.is_valid():
        return {"axioms": axioms.to_dict()}, EXIT_INPUT_ERROR
    certificate = certify(cfg, timeout=settings["timeout_ms"] / 1000)
    report: Dict[str, Any] = {"certificate": certificate.to_dict()}
    sc = structure_constants(cfg)
    if isinstance(sc, StructureConstants) and sc.rank == 4 and sc.is_homogeneous:
        report["rank4"] = _rank4_section(cfg, sc, settings["epsilon"])
    code = EXIT_NOT_APPLICABLE if all_not_applicable(certificate) else EXIT_OK
    return report, code


def cmd_generate(args, settings) -> tuple:
    name, _, rest = args.target.partition(":")
    if name == "gnp":
        try:
            obj = generators.random_graph(int(rest), 0.5, settings["seed"])
        except ValueError:
            raise ParameterError(f"gnp takes one integer parameter, got {rest!r}")
    else:
        obj = generate(*parse_family(args.target))
    report: Dict[str, Any] = {"family": args.target}
    if isinstance(obj, Configuration):
        report.update({"n": obj.n, "rank": obj.rank})
        if args.out:
            write_configuration(obj, args.out)
    else:
        report.update({"n": obj.number_of_nodes(), "edges": obj.number_of_edges(),
                       "regular": len({d for _, d in obj.degree()}) == 1})
        if args.out:
            write_edge_list(obj, args.out)
    if args.out:
        report["out"] = str(args.out)
        logger.info(f"Wrote {args.target} to {args.out}")
    return report, EXIT_OK


def cmd_oracle(args, settings) -> tuple:
    cfg = load_configuration(args, settings)
    group = automorphisms(cfg, limit_n=settings["limit_n"])
    motion = exact_motion(cfg, limit_n=settings["limit_n"], group=group)
    report = {
        "n": cfg.n,
        "order": group.order,
        "generators": [g.tolist() for g in group.generators],
        "motion": motion if motion is not None else "rigid",
    }
    return report, EXIT_OK


def cmd_recognize(args, settings) -> tuple:
    cfg = load_configuration(args, settings)
    result = recognize(cfg, timeout=settings["timeout_ms"] / 1000)
    if result is None:
        return {"n": cfg.n, "family": None}, EXIT_NOT_APPLICABLE
    return {"n": cfg.n, "family": result.tag, "recognition": result.to_dict()}, EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "wl": cmd_wl,
    "analyze-drg": cmd_analyze_drg,
    "certify": cmd_certify,
    "generate": cmd_generate,
    "oracle": cmd_oracle,
    "recognize": cmd_recognize,
}


# =============================================================================
# ENTRY POINT
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Motion certificates for coherent configurations")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name == "generate":
            p.add_argument("target", help='family spec, e.g. "johnson:7,3"')
            p.add_argument("--out", type=Path, help="edge list (graphs) or JSON (configurations)")
        else:
            p.add_argument("--graph", type=Path, help="edge-list file")
            p.add_argument("--config-json", type=Path, help="Configuration JSON file")
            p.add_argument("--family", help='catalog family, e.g. "cocktail:4"')
        if name == "analyze-drg":
            p.add_argument("--array", help='intersection array, e.g. "{3,2,2;1,1,3}"')
        p.add_argument("--epsilon", type=float, default=None)
        p.add_argument("--limit-n", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--timeout-ms", type=int, default=None)
        p.add_argument("--config", type=Path, default=None, help="YAML overrides")
        p.add_argument("--json", action="store_true", help="Output JSON instead of text")
    return parser


def format_text(report: Dict[str, Any]) -> str:
    lines = []
    for key, value in sorted(jsonable(report).items()):
        if isinstance(value, (dict, list)):
            value = dumps_report(value).replace("\n", " ")
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command, print its report; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        settings = config.resolve_settings({
            "epsilon": args.epsilon,
            "limit_n": args.limit_n,
            "seed": args.seed,
            "timeout_ms": args.timeout_ms,
        }, args.config)
        report, code = COMMANDS[args.command](args, settings)
    except INPUT_ERRORS as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(dumps_report(report) if args.json else format_text(report))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
