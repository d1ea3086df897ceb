"""
Command Run Logger Service

Records every verifier command run (parameters, files written, latency,
outcome) through the logging system for later inspection.
"""

import time
import logging
from contextlib import contextmanager
from typing import Optional, Dict, Any, Iterator, List


class RunLogger:
    """Service for logging command runs"""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger(__name__)
        self.runs: List[Dict[str, Any]] = []

    @contextmanager
    def timed(self) -> Iterator[Dict[str, Optional[int]]]:
        """Measure the wall time of the block into clock['latency_ms'], also when it raises"""
        clock: Dict[str, Optional[int]] = {'latency_ms': None}
        start = time.perf_counter_ns()
        try:
            yield clock
        finally:
            clock['latency_ms'] = (time.perf_counter_ns() - start) // 1_000_000

    def log_run(
        self,
        command: str,
        parameters: Dict[str, Any],
        files: Optional[List[str]] = None,
        latency_ms: Optional[int] = None,
        success: bool = True,
        error_message: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Log a finished command run

        Args:
            command: Command name (e.g., 'figure1', 'west-residual')
            parameters: Numeric parameters the command ran with
            files: Paths of the files written
            latency_ms: Wall time in milliseconds
            success: Whether the command succeeded
            error_message: Error message if failed

        Returns:
            The recorded run entry
        """
        entry = {
            'command': command,
            'parameters': dict(parameters),
            'files': list(files or []),
            'latency_ms': latency_ms,
            'success': success,
            'error_message': error_message,
        }
        self.runs.append(entry)

        if success:
            self.logger.info(
                f"✅ {command} finished in {latency_ms}ms - {len(entry['files'])} file(s), params: {entry['parameters']}"
            )
        else:
            self.logger.error(f"❌ {command} failed after {latency_ms}ms: {error_message}")
        return entry

