import os

from dotenv import load_dotenv

load_dotenv()


def _int_setting(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}") from None


LOG_LEVEL = os.environ.get("LADDERLAB_LOG_LEVEL", "WARNING").upper()
JOBS = _int_setting("LADDERLAB_JOBS", 1)
MAX_DEPTH = _int_setting("LADDERLAB_MAX_DEPTH", 4)

# reserved: enumeration is deterministic and never samples
SEED = os.environ.get("LADDERLAB_SEED")

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"
