# Configuration settings for the toolkit: log level, answer caps, exploration defaults.
import logging
import os
from dotenv import load_dotenv

load_dotenv()

# settings load before logging is configured; these warnings reach stderr via logging.lastResort
logger = logging.getLogger(__name__)


def _int_setting(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %s.", name, raw, default)
        return default
    if value < minimum:
        logger.warning("%s must be at least %s, using %s.", name, minimum, default)
        return default
    return value


def _choice_setting(name: str, default: str, choices: tuple[str, ...]) -> str:
    value = os.getenv(name, default)
    if value not in choices:
        logger.warning("unknown %s %r, using %s.", name, value, default)
        return default
    return value


LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING").upper()

# Answer caps so infinite solution streams stay printable
PATH_LIMIT = _int_setting("PATH_LIMIT", 3)
SOLUTION_LIMIT = _int_setting("SOLUTION_LIMIT", 10)

# Process-algebra exploration
REACH_STRATEGY = _choice_setting("REACH_STRATEGY", "bfs", ("bfs", "dfs", "best_first"))
SHOW_PROGRESS = os.getenv("SHOW_PROGRESS", "0").lower() in {"1", "true", "yes"}

REPL_PROMPT = os.getenv("REPL_PROMPT", "?- ")
