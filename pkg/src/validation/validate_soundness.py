"""
validate_soundness.py
---------------------
Soundness sweep: certified motion bounds against brute-force ground truth.

For every catalog instance with n <= max_n (config.yaml sweep.max_n, else SWEEP_MAX_N):
- certify(cfg).bound <= oracle exact motion (any bound <= n if rigid)
- exceptional families: exceptional_motion == exact motion
- diameter-3 DRGs: recognized as johnson/hamming/cocktail or a nonzero bound

Writes data/reports/soundness_<date>.csv and .json, logs to data/logs/.

Usage:
    python -m src.validation.validate_soundness
    python -m src.validation.validate_soundness --max-n 30 --json

Exit codes: 0=no violations, 1=violations found, 2=too few instances

Author: Katie Apker
Last Updated: Oct 19, 2026
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import pandas as pd
from tqdm import tqdm

# Add parent to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

import config
from catalog.families import (EXCEPTIONAL_FAMILIES, as_configuration, exceptional_motion,
                              family_tag, generate)
from core.results import jsonable
from drg.intersection_array import as_distance_regular
from motion.certify import certify
from oracle.search import OracleLimitError, automorphisms, exact_motion

logger = logging.getLogger(__name__)

# (family, params) pairs swept; only those with n <= max_n are run
SWEEP_INSTANCES: List[Tuple[str, Tuple[int, ...]]] = [
    ("petersen", ()),
    ("heawood", ()),
    ("kneser", (5, 2)),
    ("cyclotomic", (13, 3)),
    ("cyclotomic", (13, 2)),
    ("cyclotomic", (17, 4)),
    ("cocktail", (4,)),
    ("cocktail", (5,)),
    ("cocktail", (6,)),
    ("triangular", (5,)),
    ("triangular", (6,)),
    ("triangular", (7,)),
    ("lattice", (3,)),
    ("lattice", (4,)),
    ("lattice", (5,)),
    ("johnson", (7, 3)),
    ("hamming", (3, 3)),
    ("hypercube", (4,)),
    ("cycle", (5,)),
    ("cycle", (6,)),
    ("cycle", (7,)),
    ("complete", (5,)),
    ("path", (5,)),
    ("asymmetric_tree", ()),
    ("johnson_scheme", (6, 2)),
    ("hamming_scheme", (2, 4)),
    ("semilinear_pairs", ()),
]

DIAM3_RECOGNIZED = ("johnson", "hamming", "cocktail")


def setup_logging() -> None:
    """Configure logging with file and stream handlers."""
    config.ensure_directories()
    log_file = config.LOGS_DIR / f'validate_soundness_{config.get_date_stamp()}.log'

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[
            logging.StreamHandler(),
            logging.FileHandler(log_file)
        ]
    )


# =============================================================================
# PER-INSTANCE CHECKS
# =============================================================================

def check_instance(family: str, params: Tuple[int, ...], limit_n: int) -> Dict:
    """One sweep row: certificate, oracle motion and the three checks."""
    tag = family_tag(family, params)
    cfg = as_configuration(generate(family, params))
    row: Dict = {"instance": tag, "n": cfg.n, "rank": cfg.rank}

    cert = certify(cfg)
    row.update({"bound": cert.bound, "rule": cert.rule, "family": cert.family})

    group = automorphisms(cfg, limit_n=limit_n)
    motion = exact_motion(cfg, limit_n=limit_n, group=group)
    row["group_order"] = group.order
    row["exact_motion"] = motion if motion is not None else "rigid"
    row["sound"] = cert.bound <= (motion if motion is not None else cfg.n)

    row["exceptional_ok"] = None
    if family in EXCEPTIONAL_FAMILIES and motion is not None:
        row["exceptional_ok"] = exceptional_motion(family, params) == motion

    row["diameter"] = None
    row["diam3_ok"] = None
    drg = as_distance_regular(cfg)
    if drg is not None:
        row["diameter"] = drg[1].d
        if drg[1].d == 3:
            recognized = cert.family is not None and cert.family.split("(")[0] in DIAM3_RECOGNIZED
            row["diam3_ok"] = recognized or cert.bound > 0
    return row


def run_sweep(max_n: int, limit_n: int) -> pd.DataFrame:
    rows = []
    for family, params in tqdm(SWEEP_INSTANCES, desc="soundness"):
        tag = family_tag(family, params)
        try:
            cfg_n = as_configuration(generate(family, params)).n
        except Exception as e:
            logger.error(f"{tag}: could not build instance: {e}")
            continue
        if cfg_n > max_n:
            logger.info(f"{tag}: n={cfg_n} > {max_n}, skipped")
            continue
        try:
            rows.append(check_instance(family, params, limit_n))
        except OracleLimitError as e:
            logger.warning(f"{tag}: {e}")
    return pd.DataFrame(rows)


def violations(df: pd.DataFrame) -> pd.DataFrame:
    if df.empty:
        return df
    bad = ~df["sound"].astype(bool)
    bad |= df["exceptional_ok"].eq(False)
    bad |= df["diam3_ok"].eq(False)
    return df[bad]


def save_reports(df: pd.DataFrame, summary: Dict) -> Tuple[Path, Path]:
    config.ensure_directories()
    stem = config.REPORTS_DIR / f"soundness_{config.get_date_stamp()}"
    csv_path = stem.with_suffix(".csv")
    json_path = stem.with_suffix(".json")
    df.to_csv(csv_path, index=False)
    with open(json_path, 'w', encoding='utf-8') as f:
        json.dump(jsonable({"summary": summary, "rows": df.to_dict(orient="records")}),
                  f, sort_keys=True, indent=2, default=str)
    logger.info(f"Reports saved to {csv_path} and {json_path}")
    return csv_path, json_path


# =============================================================================
# MAIN
# =============================================================================

def main(argv: Optional[List[str]] = None):
    parser = argparse.ArgumentParser(description="Certified motion bounds vs oracle")
    sweep_settings = config.load_config().get("sweep") or {}
    parser.add_argument("--max-n", type=int, default=sweep_settings.get("max_n", config.SWEEP_MAX_N))
    parser.add_argument("--limit-n", type=int, default=config.ORACLE_LIMIT_N)
    parser.add_argument("--json", action="store_true", help="Print the summary as JSON")
    parser.add_argument("--no-save", action="store_true", help="Skip writing reports")
    args = parser.parse_args(argv)

    setup_logging()
    logger.info("=" * 60)
    logger.info(f"Soundness sweep (n <= {args.max_n})")
    logger.info("=" * 60)

    df = run_sweep(args.max_n, args.limit_n)
    bad = violations(df)
    thresholds = config.VALIDATION_THRESHOLDS
    summary = {
        "instances": len(df),
        "violations": len(bad),
        "violating_instances": bad["instance"].tolist() if len(bad) else [],
        "tight": int((df["bound"] == df["exact_motion"]).sum()) if len(df) else 0,
    }
    if not args.no_save:
        save_reports(df, summary)

    if args.json:
        print(json.dumps(jsonable(summary), sort_keys=True, indent=2))
    else:
        with pd.option_context("display.max_rows", None, "display.width", 160):
            print(df[["instance", "n", "bound", "rule", "exact_motion", "sound"]].to_string(index=False))
        print(f"\n{summary['instances']} instances, {summary['violations']} violation(s)")

    if len(df) < thresholds["min_sweep_instances"]:
        logger.error(f"Only {len(df)} instances swept; need {thresholds['min_sweep_instances']}")
        sys.exit(2)
    sys.exit(0 if len(bad) <= thresholds["max_soundness_violations"] else 1)


if __name__ == "__main__":
    main()
