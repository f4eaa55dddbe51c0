import logging
import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import find_dotenv, load_dotenv

# Directory constants
BASE_DIR = Path(__file__).parent
TEMPLATES_DIR = BASE_DIR / "templates"
PROBLEM_SPEC_DIR = BASE_DIR / "problem_spec"
OUTPUT_DIR = "output/rankings"

DEFAULT_PRECISION = 4
MIN_PRECISION = 0
MAX_PRECISION = 12
LOG_FORMAT = "%(asctime)s [%(levelname)s] %(message)s"


@dataclass
class Settings:
    """Runtime settings read from the environment (and a .env file if present)."""
    log_level: str = "WARNING"
    display_precision: int = DEFAULT_PRECISION
    templates_dir: Path = TEMPLATES_DIR
    output_dir: str = OUTPUT_DIR


def load_settings() -> Settings:
    load_dotenv(find_dotenv(usecwd=True))
    precision_raw = os.getenv("IVTRNN_DISPLAY_PRECISION")
    try:
        precision = int(precision_raw) if precision_raw else DEFAULT_PRECISION
    except ValueError:
        logging.getLogger(__name__).warning(
            f"Ignoring non-integer IVTRNN_DISPLAY_PRECISION={precision_raw!r}"
        )
        precision = DEFAULT_PRECISION
    if not MIN_PRECISION <= precision <= MAX_PRECISION:
        logging.getLogger(__name__).warning(
            f"Ignoring IVTRNN_DISPLAY_PRECISION={precision} outside {MIN_PRECISION}..{MAX_PRECISION}"
        )
        precision = DEFAULT_PRECISION
    return Settings(
        log_level=os.getenv("IVTRNN_LOG_LEVEL", "WARNING").upper(),
        display_precision=precision,
        templates_dir=Path(os.getenv("IVTRNN_TEMPLATES_DIR", str(TEMPLATES_DIR))),
        output_dir=os.getenv("IVTRNN_OUTPUT_DIR", OUTPUT_DIR),
    )


def configure_logging(level: str) -> None:
    """Send log records to stderr; called once by the CLI entry point."""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler()],
        force=True,
    )
