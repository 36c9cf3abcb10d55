"""
CSV export of trajectories, maps and radius fields.

The first line is the run manifest as a ``#``-prefixed JSON comment,
followed by a header row and the data rows.
"""

import csv
import json
import logging
import sys
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple

from ..lattice.precision import PrecisionContext
from ..painleve.dpii import DPIITrajectory
from ..painleve.system import PainleveTrajectory
from ..pattern.models import GridMap, RadiusField
from ..riccati.recursion import RiccatiTrajectory
from .manifest import RunManifest

logger = logging.getLogger(__name__)

Table = Tuple[Sequence[str], List[tuple]]


def riccati_table(traj: RiccatiTrajectory, ctx: PrecisionContext) -> Table:
    return ('n', 'p'), [(n, ctx.to_decimal(p)) for n, p in traj.to_rows()]


def painleve_table(traj: PainleveTrajectory, ctx: PrecisionContext) -> Table:
    rows = [(M, ctx.to_decimal(P), ctx.to_decimal(Q), domain) for M, P, Q, domain in traj.to_rows()]
    return ('M', 'P', 'Q', 'domain'), rows


def dpii_table(traj: DPIITrajectory, ctx: PrecisionContext) -> Table:
    rows = []
    for n, (x, arg, drift) in enumerate(zip(traj.x, traj.args(ctx), traj.drift)):
        rows.append((n, ctx.to_decimal(x.real), ctx.to_decimal(x.imag),
                     ctx.to_decimal(arg), ctx.to_decimal(drift)))
    return ('n', 're', 'im', 'arg', 'drift'), rows


def grid_table(grid: GridMap) -> Table:
    dec = grid.config.ctx.to_decimal
    rows = [(n, m, dec(grid[(n, m)].real), dec(grid[(n, m)].imag)) for n, m in grid.keys()]
    return ('n', 'm', 're', 'im'), rows


def radii_table(field: RadiusField) -> Table:
    dec = field.config.ctx.to_decimal
    return ('N', 'M', 'R'), [(N, M, dec(R)) for (N, M), R in field.items()]


class CSVWriter:
    """Writes one table with its manifest to a file or to stdout."""

    def write(self, header: Sequence[str], rows: Iterable[tuple],
              filepath: Optional[str] = None,
              manifest: Optional[RunManifest] = None) -> bool:
        """
        Write a table.

        Args:
            header: Column names
            rows: Data rows
            filepath: Output file path; stdout when None
            manifest: Run manifest for the comment line

        Returns:
            True if write successful, False otherwise
        """
        try:
            rows = list(rows)
            if not rows:
                logger.warning("No rows to export")
                return False

            if filepath is None:
                self._emit(sys.stdout, header, rows, manifest)
                sys.stdout.flush()
            else:
                Path(filepath).parent.mkdir(parents=True, exist_ok=True)
                with open(filepath, 'w', newline='') as f:
                    self._emit(f, header, rows, manifest)
                logger.info(f"Exported {len(rows)} rows to CSV: {filepath}")
            return True

        except Exception as e:
            logger.error(f"Failed to write CSV file: {e}")
            return False

    @staticmethod
    def _emit(stream, header, rows, manifest):
        if manifest is not None:
            stream.write('# ' + json.dumps(manifest.to_dict()) + '\n')
        out = csv.writer(stream, lineterminator='\n')
        out.writerow(header)
        out.writerows(rows)
