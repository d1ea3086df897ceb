import logging
import os
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


def _int_env(name: str, default: int) -> Optional[int]:
    """Integer environment variable; None when it does not parse, so validate() can report it"""
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return None


class Config:
    # Ambient settings only. Anything that changes a CSV value is a CLI flag.
    LOG_LEVEL = os.getenv('MLCHECK_LOG_LEVEL', 'INFO').upper()
    DEBUG = os.getenv('MLCHECK_DEBUG', 'False').lower() == 'true'

    WORKERS = _int_env('MLCHECK_WORKERS', 1)
    OUTPUT_DIR = os.getenv('MLCHECK_OUTPUT_DIR', 'output')
    SVG_SALT = os.getenv('MLCHECK_SVG_SALT', 'mlcheck')

    @classmethod
    def log_level(cls) -> int:
        if cls.DEBUG:
            return logging.DEBUG
        return getattr(logging, cls.LOG_LEVEL, logging.INFO)

    @classmethod
    def validate(cls):
        invalid_vars = []
        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            invalid_vars.append('MLCHECK_LOG_LEVEL')
        if cls.WORKERS is None or cls.WORKERS < 1:
            invalid_vars.append('MLCHECK_WORKERS')
        if not cls.OUTPUT_DIR:
            invalid_vars.append('MLCHECK_OUTPUT_DIR')

        if invalid_vars:
            raise ValueError(f"Invalid environment variables: {', '.join(invalid_vars)}")

        return True
