"""
JSON export and import of maps, radius fields and circle patterns.

Every real number is a decimal string with enough digits to restore the
value bit-exactly at the precision recorded in the manifest.
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ..config import JSON_SCHEMA_VERSION
from ..errors import ConfigError
from ..pattern.models import CirclePattern, GridMap, PatternConfig, RadiusField
from .manifest import RunManifest

logger = logging.getLogger(__name__)


def pattern_document(manifest: RunManifest, config: PatternConfig,
                     grid: Optional[GridMap] = None,
                     field: Optional[RadiusField] = None,
                     pattern: Optional[CirclePattern] = None) -> dict:
    """The JSON document as a dict; sections that are absent are empty lists."""
    ctx = config.ctx
    dec = ctx.to_decimal
    doc = {'manifest': manifest.to_dict(), 'grid': [], 'radii': [], 'circles': []}
    if grid is not None:
        for n, m in grid.keys():
            v = grid[(n, m)]
            doc['grid'].append({'n': n, 'm': m, 're': dec(v.real), 'im': dec(v.imag)})
    if field is not None:
        for (N, M), R in field.items():
            doc['radii'].append({'N': N, 'M': M, 'R': dec(R)})
    if pattern is not None:
        for c in sorted(pattern.circles, key=lambda c: (c.N, c.M)):
            doc['circles'].append({'N': c.N, 'M': c.M, 'cx': dec(c.center.real),
                                   'cy': dec(c.center.imag), 'r': dec(c.radius)})
    return doc


class JSONWriter:
    """
    Writes pattern documents:
    {manifest, grid: [{n,m,re,im}], radii: [{N,M,R}], circles: [{N,M,cx,cy,r}]}
    """

    def __init__(self, indent: Optional[int] = 1):
        self.indent = indent

    def write(self, filepath: str, manifest: RunManifest, config: PatternConfig,
              grid: Optional[GridMap] = None, field: Optional[RadiusField] = None,
              pattern: Optional[CirclePattern] = None) -> bool:
        """
        Write one document.

        Returns:
            True if write successful, False otherwise
        """
        try:
            if grid is None and field is None:
                logger.warning("No map or radius field to export")
                return False

            doc = pattern_document(manifest, config, grid, field, pattern)
            Path(filepath).parent.mkdir(parents=True, exist_ok=True)
            with open(filepath, 'w') as f:
                json.dump(doc, f, indent=self.indent)

            logger.info(f"Exported {len(doc['grid'])} vertices, {len(doc['radii'])} radii "
                        f"to JSON: {filepath}")
            return True

        except Exception as e:
            logger.error(f"Failed to write JSON file: {e}")
            return False

    def write_result(self, result, filepath: str, command: str = 'generate') -> bool:
        """Write a PatternResult with its manifest."""
        manifest = RunManifest.for_result(result, command)
        return self.write(filepath, manifest, result.config, result.grid, result.field, result.pattern)


@dataclass
class LoadedPattern:
    """A pattern document restored at its declared precision."""
    manifest: RunManifest
    config: PatternConfig
    grid: Optional[GridMap] = None
    field: Optional[RadiusField] = None
    pattern: Optional[CirclePattern] = None


class JSONReader:
    """Restores GridMap/RadiusField/CirclePattern from a pattern document."""

    def read(self, filepath: str) -> LoadedPattern:
        """
        Load a document.

        Raises:
            ConfigError: on an unknown schema version or a malformed document
        """
        with open(filepath) as f:
            doc = json.load(f)
        return self.from_document(doc)

    def from_document(self, doc: dict) -> LoadedPattern:
        try:
            manifest = RunManifest.from_dict(doc['manifest'])
        except (AttributeError, KeyError, TypeError) as e:
            raise ConfigError(f"Not a pattern document: {e}")
        if manifest.schema_version != JSON_SCHEMA_VERSION:
            raise ConfigError(f"Unsupported schema version {manifest.schema_version}")

        config = PatternConfig.from_dict(manifest.config)
        ctx = config.ctx
        num = ctx.from_decimal

        grid = None
        if doc.get('grid'):
            values = {(row['n'], row['m']): ctx.mpc(num(row['re']), num(row['im']))
                      for row in doc['grid']}
            size = manifest.extra.get('grid_size', max(n + m for n, m in values))
            grid = GridMap(values=values, config=config, size=size)

        field = None
        if doc.get('radii'):
            R = {(row['N'], row['M']): num(row['R']) for row in doc['radii']}
            info = manifest.extra.get('field', {})
            gamma = num(info['gamma']) if 'gamma' in info else ctx.mpf(config.gamma)
            field = RadiusField(R=R, config=config,
                                M_max=info.get('M_max', max(M for _, M in R)),
                                gamma=gamma, kind=info.get('kind', config.mode.value))

        pattern = None
        if grid is not None and field is not None:
            pattern = CirclePattern.from_map(grid, field)

        logger.debug(f"Loaded {config.mode.value} document at {ctx.mantissa_bits} bits")
        return LoadedPattern(manifest=manifest, config=config, grid=grid, field=field, pattern=pattern)
