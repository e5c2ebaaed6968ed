"""Main entry point for the hamforms toolkit.

Exit codes: 0 success, 1 verification mismatch or false verdict,
2 internal pipeline error, 64 usage error.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from algebra.groebner import VarOrder, format_gb, forms_from_columns, gb_linear
from algebra.hamiltonian import AlgebraVariant
from algebra.linalg import load_matrix, transpose
from cohomology import betti_table, kontsevich_check, self_test
from complexes.sp_basic import get_complex
from config import RunConfig, configure_logging, default_fixture_path
from errors import HamFormsError, ParseError, UsageError, VerificationMismatch
from paper_data.fixtures import load_fixtures
from paper_data.replay import PaperReplay
from reporting.tables import (betti_report_text, betti_table_text, certificate_text,
                              certificate_pairs, complex_text, key_value_report, replay_text)

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INTERNAL = 2
EXIT_USAGE = 64


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises instead of exiting, so main() owns the exit code."""

    def error(self, message: str):
        raise UsageError(message)


def _emit(config: RunConfig, text: str) -> None:
    if config.output is not None:
        config.output.write_text(text, encoding='utf-8')
    else:
        sys.stdout.write(text)


def cmd_betti(config: RunConfig) -> int:
    rows = betti_table(config.variant, config.weight, config.degrees)
    if config.output_format == 'report':
        _emit(config, betti_report_text(config.variant, config.weight, rows,
                                        euler=config.degrees is None))
    else:
        _emit(config, betti_table_text(config.variant, config.weight, rows))
    return EXIT_OK


def cmd_gb(config: RunConfig) -> int:
    """Gröbner basis of the column space of a matrix, columns read as forms."""
    if config.fixture_matrix is not None:
        fixtures = load_fixtures(config.fixtures, verify=False)
        matrix = getattr(fixtures, config.fixture_matrix)
    else:
        if not config.matrix_file.exists():
            raise ParseError("matrix file not found", config.matrix_file)
        matrix = load_matrix(config.matrix_file)
        if config.transposed:
            matrix = transpose(matrix)
    order = VarOrder.numbered('y', matrix.rows)
    gb = gb_linear(forms_from_columns(matrix, order), order)
    LOGGER.info("GB of a %dx%d matrix: %d generators", matrix.rows, matrix.cols, len(gb))
    _emit(config, format_gb(gb))
    return EXIT_OK


def cmd_kontsevich_check(config: RunConfig) -> int:
    certificate = kontsevich_check()
    checks = self_test() if config.self_test else None
    _emit(config, certificate_text(certificate, config.output_format, checks))
    if config.emit_certificate is not None:
        config.emit_certificate.write_text(key_value_report(certificate_pairs(certificate)),
                                           encoding='utf-8')
    if not certificate.verdict:
        return EXIT_MISMATCH
    if checks is not None and not all(checks.values()):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify_paper(config: RunConfig) -> int:
    # checksums are replayed last so a bad entry is named before its file
    fixtures = load_fixtures(config.fixtures, verify=False)
    reports = PaperReplay(fixtures).run(config.only)
    _emit(config, replay_text(reports))
    return EXIT_OK


def cmd_complex(config: RunConfig) -> int:
    cx = get_complex(config.variant, config.weight)
    degrees = config.degrees or cx.degree_range()
    _emit(config, complex_text(cx, degrees))
    return EXIT_OK


def cmd_sweep(config: RunConfig) -> int:
    parts: List[str] = []
    for weight in config.weights:
        rows = betti_table(config.variant, weight)
        if config.output_format == 'report':
            parts.append(betti_report_text(config.variant, weight, rows))
        else:
            parts.append(betti_table_text(config.variant, weight, rows))
    _emit(config, ''.join(parts))
    return EXIT_OK


COMMANDS = {
    'betti': cmd_betti,
    'gb': cmd_gb,
    'kontsevich-check': cmd_kontsevich_check,
    'verify-paper': cmd_verify_paper,
    'complex': cmd_complex,
    'sweep': cmd_sweep,
}


def _weights(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}")


def build_parser() -> ArgumentParser:
    common = ArgumentParser(add_help=False)
    common.add_argument('--fixtures', type=Path, default=None,
                        help='Fixture directory (default: $HAMFORMS_FIXTURES or fixtures/v1)')
    common.add_argument('--format', dest='output_format', choices=['table', 'report'], default='table',
                        help='Human-readable table or key=value report')
    common.add_argument('--output', type=Path, default=None, help='Write to this file instead of stdout')
    common.add_argument('--verbose', action='store_true', help='Debug logging on stderr')

    graded = ArgumentParser(add_help=False)
    graded.add_argument('--variant', choices=[v.value for v in AlgebraVariant], default='ham0',
                        help='ham or ham0 (default: ham0)')

    parser = ArgumentParser(description='Sp-basic cohomology of formal Hamiltonian vector fields')
    sub = parser.add_subparsers(dest='command', required=True)

    betti = sub.add_parser('betti', parents=[common, graded], help='Betti table of one weight')
    betti.add_argument('--weight', type=int, required=True)
    betti.add_argument('--degrees', type=str, default=None, help='Degree range a..b')

    gb = sub.add_parser('gb', parents=[common], help='Gröbner basis of the columns of a matrix')
    gb.add_argument('matrix_file', type=Path, nargs='?', default=None)
    gb.add_argument('--fixture-matrix', choices=['M', 'N', 'Mbar', 'Nbar'], default=None)
    gb.add_argument('--transposed', action='store_true', help='The file holds the transpose')

    check = sub.add_parser('kontsevich-check', parents=[common], help='Is omega ^ h a coboundary?')
    check.add_argument('--self-test', action='store_true', help='Rerun with reversed generator order')
    check.add_argument('--emit-certificate', type=Path, default=None)

    verify = sub.add_parser('verify-paper', parents=[common], help='Replay the printed listings')
    verify.add_argument('--only', choices=['w10', 'w8'], default=None)

    cx = sub.add_parser('complex', parents=[common, graded], help='Dimensions and differential matrices')
    cx.add_argument('--weight', type=int, required=True)
    cx.add_argument('--degrees', type=str, default=None, help='Degree range a..b')

    sweep = sub.add_parser('sweep', parents=[common, graded], help='Betti tables over several weights')
    sweep.add_argument('--weights', type=_weights, default=[2, 4, 6, 8], help='Comma-separated, default 2,4,6,8')
    return parser


def parse_config(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    fixtures = args.pop('fixtures', None) or default_fixture_path()
    values = {key: value for key, value in args.items() if value is not None}
    if 'weights' in values:
        values['weights'] = tuple(values['weights'])
    return RunConfig(fixtures=fixtures, **values)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse, run one command, map failures to exit codes."""
    try:
        config = parse_config(argv)
    except (UsageError, ValidationError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    configure_logging(config.verbose)
    try:
        return COMMANDS[config.command](config)
    except VerificationMismatch as exc:
        sys.stderr.write(f"MISMATCH {exc}\n")
        return EXIT_MISMATCH
    except HamFormsError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INTERNAL
    except Exception as exc:
        LOGGER.exception("unexpected failure")
        sys.stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


if __name__ == '__main__':
    sys.exit(main())
