"""Run configuration for the command-line surface."""

import logging
import os
import re
import sys
from pathlib import Path
from typing import Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from algebra.hamiltonian import AlgebraVariant

FIXTURES_ENV = 'HAMFORMS_FIXTURES'
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'

_DEGREE_RANGE = re.compile(r'^\s*(\d+)\s*\.\.\s*(\d+)\s*$')

Command = Literal['betti', 'gb', 'kontsevich-check', 'verify-paper', 'complex', 'sweep']


def default_fixture_path() -> Path:
    """HAMFORMS_FIXTURES if set, otherwise the fixture tree next to this file."""
    override = os.environ.get(FIXTURES_ENV)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / 'fixtures' / 'v1'


def configure_logging(verbose: bool = False) -> None:
    """Root logger to stderr; stdout carries only reports."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr, force=True)


def parse_degree_range(text: str) -> Tuple[int, int]:
    match = _DEGREE_RANGE.match(text)
    if not match:
        raise ValueError(f"degree range must look like a..b, got {text!r}")
    return int(match.group(1)), int(match.group(2))


def check_even_weight(value: int) -> int:
    if value < 2 or value % 2:
        raise ValueError(f"weight must be even and at least 2, got {value}")
    return value


class RunConfig(BaseModel):
    """Validated arguments of one command."""

    model_config = ConfigDict(frozen=True)

    command: Command
    variant: AlgebraVariant = AlgebraVariant.HAM0
    weight: Optional[int] = None
    degrees: Optional[Tuple[int, int]] = None
    weights: Tuple[int, ...] = (2, 4, 6, 8)
    fixtures: Path = Field(default_factory=default_fixture_path)
    output_format: Literal['table', 'report'] = 'table'
    output: Optional[Path] = None
    matrix_file: Optional[Path] = None
    fixture_matrix: Optional[Literal['M', 'N', 'Mbar', 'Nbar']] = None
    transposed: bool = False
    emit_certificate: Optional[Path] = None
    self_test: bool = False
    only: Optional[Literal['w10', 'w8']] = None
    verbose: bool = False

    @field_validator('weight')
    @classmethod
    def check_weight(cls, value: Optional[int]) -> Optional[int]:
        if value is not None:
            check_even_weight(value)
        return value

    @field_validator('weights')
    @classmethod
    def check_weights(cls, values: Tuple[int, ...]) -> Tuple[int, ...]:
        if not values:
            raise ValueError("at least one weight is required")
        for value in values:
            check_even_weight(value)
        return values

    @field_validator('degrees', mode='before')
    @classmethod
    def parse_degrees(cls, value):
        if isinstance(value, str):
            return parse_degree_range(value)
        return value

    @field_validator('degrees')
    @classmethod
    def check_degrees(cls, value: Optional[Tuple[int, int]]) -> Optional[Tuple[int, int]]:
        if value is not None and value[0] > value[1]:
            raise ValueError(f"empty degree range {value[0]}..{value[1]}")
        return value

    @model_validator(mode='after')
    def check_command_arguments(self) -> 'RunConfig':
        if self.command in ('betti', 'complex') and self.weight is None:
            raise ValueError(f"{self.command} needs --weight")
        if self.command == 'gb' and (self.matrix_file is None) == (self.fixture_matrix is None):
            raise ValueError("gb needs exactly one of a matrix file or --fixture-matrix")
        return self
