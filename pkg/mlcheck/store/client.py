import logging
from pathlib import Path
from typing import List, Sequence, Tuple

import matplotlib
matplotlib.use('Agg')
from matplotlib.figure import Figure  # noqa: E402
import numpy as np  # noqa: E402

logger = logging.getLogger(__name__)

CSV_FORMAT = '%.16e'

# (label, values, line style)
Curve = Tuple[str, np.ndarray, str]


class ReportStore:
    """Writes result tables as CSV files and optional SVG line plots into one directory.

    Every table is written with a fixed numeric format, so identical inputs
    give byte-identical files. SVG files are rendered from the same arrays.
    """

    def __init__(self, output_dir: str, svg_salt: str = 'mlcheck'):
        self.output_dir = Path(output_dir)
        self.svg_salt = svg_salt

    def _prepare(self) -> None:
        # raises FileExistsError / PermissionError (OSError) for unusable paths
        self.output_dir.mkdir(parents=True, exist_ok=True)

    def path_for(self, name: str) -> Path:
        return self.output_dir / name

    def write_csv(self, name: str, columns: Sequence[str], rows: np.ndarray) -> Path:
        """Header row, ',' separator, '\\n' line endings, 17 significant digits"""
        rows = np.atleast_2d(np.asarray(rows, dtype=float))
        if rows.shape[1] != len(columns):
            raise ValueError(f"{name}: {len(columns)} columns named but rows have {rows.shape[1]}")
        self._prepare()
        path = self.path_for(name)
        with open(path, 'w', encoding='utf-8', newline='') as fh:
            np.savetxt(fh, rows, fmt=CSV_FORMAT, delimiter=',', newline='\n',
                       header=','.join(columns), comments='')
        logger.debug(f"wrote {rows.shape[0]} rows to {path}")
        return path

    def read_csv(self, name: str) -> Tuple[List[str], np.ndarray]:
        path = self.path_for(name)
        with open(path, 'r', encoding='utf-8') as fh:
            header = fh.readline().strip().split(',')
        data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
        return header, data

    def write_svg(self, name: str, x: np.ndarray, curves: List[Curve],
                  xlabel: str = 't', ylabel: str = '', title: str = '') -> Path:
        self._prepare()
        path = self.path_for(name)

        with matplotlib.rc_context({'svg.hashsalt': self.svg_salt}):
            fig = Figure(figsize=(6.4, 4.8))
            ax = fig.add_subplot()
            for label, values, style in curves:
                ax.plot(x, values, style, label=label)
            ax.set_xlabel(xlabel)
            if ylabel:
                ax.set_ylabel(ylabel)
            if title:
                ax.set_title(title)
            ax.legend()
            fig.savefig(path, format='svg', metadata={'Date': None})

        logger.debug(f"wrote plot {path}")
        return path
