import logging

from anclab.core.config import Config

logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
    format='%(asctime)s;%(levelname)-5s:%(name)-10s: %(message)s',
    datefmt='%m-%d/%H:%M',
)

logger = logging.getLogger('ANCLAB')


def set_verbose(verbose: bool) -> None:
    """Lower the package logger to DEBUG when verbose output is requested."""
    logger.setLevel(logging.DEBUG if verbose else getattr(logging, Config.LOG_LEVEL, logging.INFO))
