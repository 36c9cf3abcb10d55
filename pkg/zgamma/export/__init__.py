"""
Export modules for saving patterns and trajectories as JSON, CSV and SVG.
"""

from .manifest import RunManifest
from .json_writer import JSONWriter, JSONReader, LoadedPattern, pattern_document
from .csv_writer import (
    CSVWriter,
    riccati_table,
    painleve_table,
    dpii_table,
    grid_table,
    radii_table,
)
from .svg_writer import SVGWriter, SVGOptions

__all__ = [
    'RunManifest', 'JSONWriter', 'JSONReader', 'LoadedPattern', 'pattern_document',
    'CSVWriter', 'riccati_table', 'painleve_table', 'dpii_table', 'grid_table', 'radii_table',
    'SVGWriter', 'SVGOptions',
]
