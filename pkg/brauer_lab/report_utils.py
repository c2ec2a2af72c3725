"""pandas tables for console summaries and CSV exports."""

from __future__ import annotations

import json
from typing import Iterable

import pandas as pd

try:
    from . import config
    from .characters import as_partition, dim_weyl, multiplicities
except ImportError:
    import brauer_lab.config as config
    from brauer_lab.characters import as_partition, dim_weyl, multiplicities

logger = config.get_file_logger(__name__)

MULTIPLICITY_COLUMNS = ["lambda", "mult", "dim", "product"]
RESULT_COLUMNS = ["check", "params", "expected", "computed", "provenance", "pass", "asserted", "millis"]


def render_partition(lam) -> str:
    return "[" + ",".join(str(p) for p in as_partition(lam).parts) + "]"


def multiplicity_frame(n: int, m: int) -> pd.DataFrame:
    """Weyl-module multiplicities of the ``n``-th tensor power, one row per partition."""
    rows = []
    for lam, mult in multiplicities(n, m).items():
        dim = dim_weyl(lam, m)
        rows.append({"lambda": render_partition(lam), "mult": mult, "dim": dim, "product": mult * dim})
    df = pd.DataFrame(rows, columns=MULTIPLICITY_COLUMNS)
    logger.debug("multiplicity_frame n=%d m=%d: %d rows, total %d", n, m, len(df), int(df["product"].sum()))
    return df


def write_multiplicity_csv(path: str, n: int, m: int) -> pd.DataFrame:
    df = multiplicity_frame(n, m)
    try:
        df.to_csv(path, index=False)
    except OSError as e:
        logger.error("Failed to write %s: %s", path, e, exc_info=True)
        raise
    logger.info("Wrote %d multiplicity rows to %s", len(df), path)
    return df


def _cell(value) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, separators=(",", ":"), sort_keys=True)
    return str(value)


def results_frame(results: Iterable) -> pd.DataFrame:
    """Flatten check results (objects with ``to_dict`` or plain dicts) for display."""
    rows = []
    for result in results:
        data = result.to_dict() if hasattr(result, "to_dict") else dict(result)
        rows.append({
            "check": data["check"],
            "params": _cell(data["params"]),
            "expected": _cell(data["expected"]),
            "computed": _cell(data["computed"]),
            "provenance": data["expected_provenance"],
            "pass": bool(data["pass"]),
            "asserted": bool(data.get("asserted", True)),
            "millis": data.get("millis", 0),
        })
    return pd.DataFrame(rows, columns=RESULT_COLUMNS)


def summarize(frame: pd.DataFrame) -> dict[str, int]:
    """``passed`` / ``failed`` counts over asserted rows."""
    if frame.empty:
        return {"passed": 0, "failed": 0}
    asserted = frame[frame["asserted"]]
    passed = int(asserted["pass"].sum())
    return {"passed": passed, "failed": int(len(asserted) - passed)}


def suites_frame(suites) -> pd.DataFrame:
    rows = [{"suite": s.name, "checks": ",".join(s.checks), "provenance": s.provenance,
             "asserted": s.asserted, "description": s.description} for s in suites.values()]
    return pd.DataFrame(rows, columns=["suite", "checks", "provenance", "asserted", "description"])
