"""
Run manifest embedded in every exported artifact.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Optional

from .. import __version__
from ..config import JSON_SCHEMA_VERSION

TOOL_NAME = 'zgamma'


@dataclass
class RunManifest:
    """Config echo, precision, residual summary, tool version and timing."""
    command: str
    config: dict = field(default_factory=dict)
    bits: Optional[int] = None
    residuals: dict = field(default_factory=dict)
    validation: Optional[dict] = None
    wall_time: float = 0.0
    version: str = __version__
    schema_version: int = JSON_SCHEMA_VERSION
    created: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())
    extra: dict = field(default_factory=dict)

    @classmethod
    def for_result(cls, result, command: str) -> 'RunManifest':
        """Manifest of a PatternResult."""
        extra = {'attempts': [[bits, verdict] for bits, verdict in result.attempts]}
        if result.field is not None:
            extra['field'] = {
                'kind': result.field.kind,
                'gamma': result.config.ctx.to_decimal(result.field.gamma),
                'M_max': result.field.M_max,
            }
        if result.grid is not None:
            extra['grid_size'] = result.grid.size
        return cls(
            command=command,
            config=result.config.to_dict(),
            bits=result.bits,
            residuals=dict(result.residuals),
            validation=result.validation.to_dict() if result.validation else None,
            wall_time=result.wall_time,
            extra=extra,
        )

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON serialization."""
        return {
            'tool': TOOL_NAME,
            'version': self.version,
            'schema_version': self.schema_version,
            'command': self.command,
            'created': self.created,
            'bits': self.bits,
            'config': self.config,
            'residuals': self.residuals,
            'validation': self.validation,
            'wall_time': self.wall_time,
            'extra': self.extra,
        }

    @classmethod
    def from_dict(cls, data: dict) -> 'RunManifest':
        return cls(
            command=data.get('command', ''),
            config=data.get('config', {}),
            bits=data.get('bits'),
            residuals=data.get('residuals', {}),
            validation=data.get('validation'),
            wall_time=data.get('wall_time', 0.0),
            version=data.get('version', __version__),
            schema_version=data.get('schema_version', JSON_SCHEMA_VERSION),
            created=data.get('created', ''),
            extra=data.get('extra', {}),
        )
