import os
import logging
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()

OUTPUT_DIR_VAR = "JORDAN_ATLAS_OUTPUT_DIR"
LOG_LEVEL_VAR = "JORDAN_ATLAS_LOG_LEVEL"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def output_dir() -> Path:
    value = os.getenv(OUTPUT_DIR_VAR)
    return Path(value) if value else Path.cwd()


def log_level() -> int:
    name = os.getenv(LOG_LEVEL_VAR, "WARNING").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def init_logging():
    logging.basicConfig(level=log_level(), format=LOG_FORMAT)


def resolve_output_path(out) -> Path:
    """Relative --out paths land under the configured output directory."""
    path = Path(out).expanduser()
    if not path.is_absolute():
        path = output_dir() / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path
