"""Command-line front end: ``verify``, ``list-suites`` and ``show``.

Usage::

    python -m brauer_lab.cli verify --suite duality --m 1 --n 2 --f 0
    python -m brauer_lab.cli list-suites
    python -m brauer_lab.cli show --check surjectivity

Exit codes: 0 every asserted check passed, 1 a check failed, 2 usage error,
3 internal error.
"""

from __future__ import annotations

from dotenv import load_dotenv
load_dotenv()  # Load environment variables from .env file if present

# Standard library imports
import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

try:
    from . import cache_utils, config
    from .characters import Partition
    from .experiments import SUITES, ExperimentSpec, describe_check, run_suite
    from .report_utils import results_frame, suites_frame, summarize
    from .scalars import FieldSpec
except ImportError:
    import brauer_lab.cache_utils as cache_utils
    import brauer_lab.config as config
    from brauer_lab.characters import Partition
    from brauer_lab.experiments import SUITES, ExperimentSpec, describe_check, run_suite
    from brauer_lab.report_utils import results_frame, suites_frame, summarize
    from brauer_lab.scalars import FieldSpec

logger = config.get_file_logger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    suite: str = "all"
    m: int = 1
    n: int = 1
    f: Optional[int] = None
    g: Optional[int] = None
    lam: Optional[tuple[int, ...]] = None
    fields: list[str] = field(default_factory=list)
    budget: Optional[int] = None
    out: Optional[str] = None
    cache: Optional[str] = None
    fault: Optional[str] = None
    check: Optional[str] = None

    def field_specs(self) -> tuple[FieldSpec, ...]:
        return tuple(FieldSpec.parse(token) for token in self.fields)

    def spec(self) -> ExperimentSpec:
        return ExperimentSpec(m=self.m, n=self.n, f=self.f, g=self.g, lam=self.lam, fields=self.field_specs(),
                              suite=self.suite, fault=self.fault)

    def as_report(self) -> dict:
        """The parts of the configuration that determine the results."""
        data = asdict(self)
        for key in ("command", "out", "cache", "check"):
            data.pop(key)
        data["lam"] = list(self.lam) if self.lam is not None else None
        return data


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="brauer_lab",
        description="Exact verification of Brauer-algebra identities on symplectic tensor space",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite and write a JSON report")
    verify.add_argument("--suite", default="all", choices=["all"] + list(SUITES))
    verify.add_argument("--m", type=int, required=True, help="rank: dim V = 2m")
    verify.add_argument("--n", type=int, required=True, help="tensor power")
    verify.add_argument("--f", type=int, default=None, help="ideal level (all levels when omitted)")
    verify.add_argument("--g", type=int, default=None, help="number of alpha factors for the maximal suite")
    verify.add_argument("--lam", type=str, default=None, help="partition such as 2,1 for the maximal suite")
    verify.add_argument("--fields", type=str, default=None,
                        help="comma separated fields, e.g. q,fp2,fp3 (default from the environment)")
    verify.add_argument("--out", type=str, default=None, help="report path (default stdout)")
    verify.add_argument("--budget", type=int, default=None, help="maximum (2m)^n accepted")
    verify.add_argument("--cache", type=str, default=config.CACHE_FILE, help="JSON-lines result cache")
    verify.add_argument("--no-cache", action="store_true", help="ignore and do not write the cache")
    verify.add_argument("--fault", choices=["wrong-delta"], default=None, help=argparse.SUPPRESS)

    sub.add_parser("list-suites", help="list the registered suites")

    show = sub.add_parser("show", help="describe a check and print its cached results")
    show.add_argument("--check", required=True)
    show.add_argument("--cache", type=str, default=config.CACHE_FILE)
    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Parse ``argv`` into a :class:`RunConfig`; usage errors exit with status 2."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list-suites":
        return RunConfig(command="list-suites")
    if args.command == "show":
        return RunConfig(command="show", check=args.check, cache=args.cache)

    try:
        lam = Partition.parse(args.lam).parts if args.lam else None
        fields = args.fields if args.fields is not None else config.default_fields()
        cfg = RunConfig(
            command="verify",
            suite=args.suite,
            m=args.m,
            n=args.n,
            f=args.f,
            g=args.g,
            lam=lam,
            fields=[fld.name for fld in FieldSpec.parse_list(fields)],
            budget=args.budget,
            out=args.out,
            cache=None if args.no_cache else args.cache,
            fault=args.fault,
        )
        cfg.spec()
        config.check_budget(cfg.m, cfg.n, cfg.budget)
    except (ValueError, config.ConfigurationError) as e:
        parser.error(str(e))
    logger.debug("Parsed run configuration: %s", cfg)
    return cfg


def _write(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise OSError(f"cannot write report to {path}: {e.strerror or e}") from e
    logger.info("Report written to %s", path)


def build_report(cfg: RunConfig, results) -> dict:
    frame = results_frame(results)
    return {
        "version": config.CODE_VERSION,
        "config": cfg.as_report(),
        "results": [r.to_dict() for r in results],
        "summary": summarize(frame),
    }


def run_and_report(cfg: RunConfig) -> int:
    """Run the configured suite, write the report and return the exit code."""
    logger.info("Running suite %s for m=%d n=%d over %s", cfg.suite, cfg.m, cfg.n, ",".join(cfg.fields))
    results = run_suite(cfg.spec(), cache_path=cfg.cache, budget=cfg.budget)
    report = build_report(cfg, results)
    _write(json.dumps(report, indent=2, sort_keys=True) + "\n", cfg.out)
    frame = results_frame(results)
    if not frame.empty:
        print(frame.drop(columns=["params"]).to_string(index=False), file=sys.stderr)
    summary = report["summary"]
    logger.info("Suite %s: %d passed, %d failed", cfg.suite, summary["passed"], summary["failed"])
    return EXIT_OK if summary["failed"] == 0 else EXIT_FAILED


def show_check(cfg: RunConfig) -> int:
    info = describe_check(cfg.check)
    info["cached"] = cache_utils.cached_for_check(cfg.cache, cfg.check) if cfg.cache else []
    sys.stdout.write(json.dumps(info, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    config.configure_logging()
    cfg = parse_args(argv)
    try:
        if cfg.command == "list-suites":
            print(suites_frame(SUITES).to_string(index=False))
            return EXIT_OK
        if cfg.command == "show":
            return show_check(cfg)
        return run_and_report(cfg)
    except (ValueError, config.ConfigurationError) as e:
        logger.error("Usage error: %s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error("I/O failure: %s", e, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception:
        logger.error("Internal error while running %s", cfg.command, exc_info=True)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
