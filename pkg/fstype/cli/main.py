"""
Command-line interface for the fstype package.
"""

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from enum import Enum
from typing import TextIO

from fstype.common.base import HighestWeight, parse_weights
from fstype.admissibility.basis import character, enumerate_basis
from fstype.relations.generators import generators
from fstype.evaluation.presentation import aggregate_reports, verify_presentation
from fstype.evaluation.reports import (
    OutputFormat,
    write_basis,
    write_character,
    write_relations,
    write_verification,
)

logger = logging.getLogger(__name__)

THREADS_ENV = "FSTYPE_THREADS"


class Command(Enum):
    BASIS = "basis"
    CHARACTER = "character"
    RELATIONS = "relations"
    VERIFY = "verify"


@dataclass
class JobConfig:
    """
    A validated run of one command.

    Attributes:
        ell (int): The rank, at least 1.
        weights (tuple[int, ...]): k_0..k_ell, nonnegative, summing to at least 1.
        max_degree (int): Degree truncation, nonnegative.
        command (Command): What to compute.
        format (OutputFormat): How to write it.
        refined (bool): Character counts per (degree, weight).
        out_path (str | None): Output file, stdout when None.
        workers (int): Worker processes for verification.
        progress (bool): Show a progress bar.
    """
    ell: int
    weights: tuple[int, ...]
    max_degree: int
    command: Command
    format: OutputFormat = OutputFormat.JSON
    refined: bool = False
    out_path: str | None = None
    workers: int = 1
    progress: bool = False

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError(f"Rank must be at least 1, got ell={self.ell}")
        if len(self.weights) != self.ell + 1:
            raise ValueError(f"Expected {self.ell + 1} weights k_0..k_ell, got {len(self.weights)}")
        if any(k < 0 for k in self.weights) or sum(self.weights) < 1:
            raise ValueError(f"Weights must be nonnegative with positive sum, got {self.weights}")
        if self.max_degree < 0:
            raise ValueError(f"Maximum degree must be nonnegative, got {self.max_degree}")
        if self.workers < 1:
            raise ValueError(f"Worker count must be positive, got {self.workers}")

    @property
    def highest_weight(self) -> HighestWeight:
        return HighestWeight(tuple(self.weights))


def _write(config: JobConfig, stream: TextIO) -> int:
    hw = config.highest_weight
    match config.command:
        case Command.BASIS:
            write_basis(hw, config.max_degree, enumerate_basis(hw, config.max_degree), config.format, stream)
        case Command.CHARACTER:
            coefficients = character(hw, config.max_degree, refined=config.refined)
            write_character(hw, config.max_degree, coefficients, config.format, stream)
        case Command.RELATIONS:
            write_relations(generators(hw, max(config.max_degree, 1)), config.format, stream)
        case Command.VERIFY:
            reports = verify_presentation(hw, config.max_degree, workers=config.workers, progress=config.progress)
            summary = aggregate_reports(hw, config.max_degree, reports)
            write_verification(summary, config.format, stream)
            if not summary.match:
                logger.warning(f"Presentation mismatch for ({hw}) up to degree {config.max_degree}")
                return 1
    return 0


def run(config: JobConfig) -> int:
    """
    Run one command and write its report.

    Parameters:
    config (JobConfig): The validated job.

    Returns:
    int: Exit status, 1 when verification finds a mismatch, 0 otherwise.
    """
    if config.out_path is None:
        return _write(config, sys.stdout)
    with open(config.out_path, "w", newline="") as f:
        status = _write(config, f)
    logger.info(f"Wrote {config.command.value} report to {config.out_path}")
    return status


def default_workers() -> int:
    value = os.environ.get(THREADS_ENV)
    if not value:
        return 1
    try:
        workers = int(value)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got '{value}'")
    if workers < 1:
        raise ValueError(f"{THREADS_ENV} must be a positive integer, got '{value}'")
    return workers


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="fstype - bases, characters and relations of W(L) for C_l^(1)")
    parser.add_argument(
        'command',
        type=str,
        help='What to compute',
        choices=[c.value for c in Command],
    )
    parser.add_argument(
        '--ell',
        type=int,
        help='Rank of the finite-dimensional algebra',
        required=True,
    )
    parser.add_argument(
        '--weights',
        type=parse_weights,
        help='Highest weight coefficients k0,k1,...,kl',
        required=True,
    )
    parser.add_argument(
        '--max-degree',
        type=int,
        help='Degree truncation',
        required=True,
    )
    parser.add_argument(
        '--format',
        type=str,
        help='Output format',
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
    )
    parser.add_argument(
        '--refined',
        action='store_true',
        help='Character counts per degree and weight',
    )
    parser.add_argument(
        '--out',
        type=str,
        help='Write the report to this file instead of stdout',
    )
    parser.add_argument(
        '--workers',
        type=int,
        help=f'Worker processes for verification (default: ${THREADS_ENV} or 1)',
    )
    parser.add_argument(
        '--progress',
        action='store_true',
        help='Show a progress bar over degrees',
    )
    parser.add_argument(
        '--verbose',
        action='store_true',
        help='Debug logging',
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    Main entry point for the command-line interface.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    # Reports go to stdout, logs to stderr
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        handlers=[logging.StreamHandler(sys.stderr)]
    )

    try:
        config = JobConfig(
            ell=args.ell,
            weights=args.weights,
            max_degree=args.max_degree,
            command=Command(args.command),
            format=OutputFormat(args.format),
            refined=args.refined,
            out_path=args.out,
            workers=args.workers if args.workers is not None else default_workers(),
            progress=args.progress,
        )
    except ValueError as e:
        print(f"fstype: error: {e}", file=sys.stderr)
        return 2
    try:
        return run(config)
    except OSError as e:
        print(f"fstype: error: cannot write report: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
