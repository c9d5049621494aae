import logging
import sys

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str = "WARNING", verbose: int = 0) -> None:
    """Root handler on stderr; each -v lowers the threshold by one level."""
    threshold = logging.getLevelName(level.upper()) if isinstance(level, str) else level
    if not isinstance(threshold, int):
        threshold = logging.WARNING
    threshold = max(logging.DEBUG, threshold - 10 * verbose)
    logging.basicConfig(level=threshold, format=LOG_FORMAT, stream=sys.stderr, force=True)
