# Configuration for brauer_lab
# Constants and settings used throughout the package.
#
# Every setting can be overridden through an environment variable (or a
# ``.env`` file picked up by the CLI). If a variable is not set, a safe
# default suited to desk-scale runs is used.

import logging

# Standard library imports
import os
import tempfile


class ConfigurationError(RuntimeError):
    """Raised when a setting or a derived build-time object is invalid."""


class BudgetExceededError(ConfigurationError):
    """Raised when a requested tensor space exceeds the work budget."""


# ---------------------------------------------------------------------------
# Working directories: DATA_DIR, CACHE_DIR and LOG_DIR, created on import.
# ---------------------------------------------------------------------------


def _ensure_dir(env_var: str, default: str) -> str:
    """Existing directory from ``env_var`` (or ``default``); a fresh temp dir if it cannot be made."""
    wanted = os.path.abspath(os.environ.get(env_var, default))
    try:
        os.makedirs(wanted, exist_ok=True)
    except OSError:
        return tempfile.mkdtemp(prefix="brauer_lab-")
    return wanted


BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DATA_DIR = _ensure_dir("DATA_DIR", os.path.join(BASE_DIR, "data"))
CACHE_DIR = _ensure_dir("CACHE_DIR", os.path.join(DATA_DIR, "cache"))
LOG_DIR = _ensure_dir("LOG_DIR", os.path.join(BASE_DIR, "logs"))

CACHE_FILE = os.environ.get(
    "BLAB_CACHE_FILE", os.path.join(CACHE_DIR, "results.jsonl"))

# Bumped whenever a computation changes; part of every cache key.
CODE_VERSION = "1.0.0"


# ---------------------------------------------------------------------------
# Fields and budgets
#
# BLAB_PRIMES       comma separated primes, e.g. "2,3,5,7"
# BLAB_BUDGET       maximum (2m)^n accepted by the experiment runner
# BLAB_DEFAULT_FIELDS  default --fields value of `verify`
# ---------------------------------------------------------------------------


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def parse_primes(raw: str) -> tuple[int, ...]:
    """Parse a comma separated prime list such as ``"2,3,5"``."""
    primes = []
    for token in raw.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            p = int(token)
        except ValueError as exc:
            raise ConfigurationError(f"BLAB_PRIMES entry {token!r} is not an integer") from exc
        if not is_prime(p):
            raise ConfigurationError(f"BLAB_PRIMES entry {p} is not prime")
        if p not in primes:
            primes.append(p)
    if not primes:
        raise ConfigurationError("BLAB_PRIMES is empty")
    return tuple(primes)


def _int_from_env(env_var: str, default: int) -> int:
    raw = os.environ.get(env_var)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigurationError(f"{env_var}={raw!r} is not an integer") from exc
    if value <= 0:
        raise ConfigurationError(f"{env_var} must be positive, got {value}")
    return value


PRIMES_FROM_ENV = "BLAB_PRIMES" in os.environ
SUPPORTED_PRIMES = parse_primes(os.environ.get("BLAB_PRIMES", "2,3,5,7"))
WORK_BUDGET = _int_from_env("BLAB_BUDGET", 5000)
DEFAULT_FIELDS = os.environ.get("BLAB_DEFAULT_FIELDS", "q,fp2,fp3,fp5")

# Worker threads for the experiment runner.
MAX_THREADS = _int_from_env("MAX_THREADS", os.cpu_count() or 1)


def default_fields() -> str:
    """Default ``--fields`` value; ``BLAB_PRIMES`` takes precedence."""
    if PRIMES_FROM_ENV:
        return ",".join(["q"] + [f"fp{p}" for p in SUPPORTED_PRIMES])
    return DEFAULT_FIELDS


def check_budget(m: int, n: int, budget: int | None = None) -> None:
    """Raise :class:`BudgetExceededError` when ``(2m)**n`` is over budget."""
    limit = WORK_BUDGET if budget is None else budget
    size = (2 * m) ** n
    if size > limit:
        raise BudgetExceededError(
            f"budget exceeded: (2m)^n = {size} for m={m}, n={n} (budget {limit})")


# ---------------------------------------------------------------------------
# Logging
#
# LOG_LEVEL selects the verbosity of both the console and the per-module log
# files: DEBUG traces every elimination step, INFO (the default) reports
# finished checks, WARNING and above only report skipped or failed work.
# Unknown values fall back to INFO.
# ---------------------------------------------------------------------------

VALID_LEVELS = {"CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"}


def level_from_env(default: str = "INFO") -> int:
    """Numeric logging level named by ``LOG_LEVEL`` (``default`` if unset or unknown)."""
    name = os.environ.get("LOG_LEVEL", default).strip().upper()
    return getattr(logging, name if name in VALID_LEVELS else default, logging.INFO)


def configure_logging(level: int | None = None) -> None:
    """Console logging for the command line; safe to call more than once."""
    target = level_from_env() if level is None else level
    root = logging.getLogger()
    if root.handlers:
        root.setLevel(target)
        return
    logging.basicConfig(level=target, format="%(asctime)s [%(levelname)s] %(name)s: %(message)s")


LOG_LEVEL = level_from_env()
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"


def _has_file_handler(logger: logging.Logger, path: str) -> bool:
    return any(getattr(h, "baseFilename", None) == path for h in logger.handlers
               if isinstance(h, logging.FileHandler))


def get_file_logger(name: str, filename: str | None = None) -> logging.Logger:
    """Logger ``name`` that also writes to ``LOG_DIR/<filename or name>.log``."""
    logger = logging.getLogger(name)
    logger.setLevel(LOG_LEVEL)
    path = os.path.abspath(os.path.join(LOG_DIR, filename or f"{name}.log"))
    if _has_file_handler(logger, path):
        return logger
    try:
        handler = logging.FileHandler(path)
    except OSError:
        # read-only LOG_DIR
        return logger
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(handler)
    return logger
