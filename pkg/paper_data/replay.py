"""Replay of the printed Gröbner computations on the fixture matrices.

Implements:
- Transcription cross-check of the matrices against the printer source
- Composition checks N.M = 0 and Nbar.Mbar = 0
- GB_e, the c-variable basis, the kernel forms ftilde, GB_k and GB_{k/e}
  for the ham0 weight-10 piece, compared with both printed listings
- The weight-8 analogues and the final normal form of hbar
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra.groebner import (GroebnerBasis, LinearForm, VarOrder, equal_up_to_scalar,
                              format_form, forms_from_columns, forms_from_rows, gb_linear,
                              kernel_via_normal_form, normal_form, pairwise_up_to_scalar,
                              proportional, quotient_gb)
from algebra.linalg import QMatrix, format_rational, mat_mul
from errors import VerificationMismatch
from paper_data.fixtures import FixtureSet, checksum_mismatches

LOGGER = logging.getLogger(__name__)

# generator counts of the printed listings
W10_COUNTS = {'gb_e': 7, 'c_gb': 4, 'gb_k': 8, 'gb_ke': 1}
W8_COUNTS = {'gb_e': 9, 'c_gb': 4, 'gb_k': 10, 'gb_ke': 1}
# the second printer states the final normal form scaled by this factor
FINAL_NF_FACTOR = -100


@dataclass(frozen=True)
class ReplayCheck:
    name: str
    expected: str
    actual: str
    passed: bool


@dataclass
class ReplayReport:
    """Checks of one replay, in the order they ran."""
    title: str
    checks: List[ReplayCheck] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(check.passed for check in self.checks)

    def record(self, name: str, expected: object, actual: object, passed: bool) -> None:
        """Append a check; the first failing one raises VerificationMismatch."""
        check = ReplayCheck(name, str(expected), str(actual), bool(passed))
        self.checks.append(check)
        LOGGER.debug("%s: %s", name, 'ok' if passed else 'MISMATCH')
        if not passed:
            raise VerificationMismatch(name, check.expected, check.actual)


def _listing(forms: Sequence[LinearForm]) -> str:
    return '[' + ', '.join(format_form(f) for f in forms) + ']'


def _gb_text(gb: GroebnerBasis) -> str:
    return _listing(list(gb))


class PaperReplay:
    """Recompute every printed listing from the fixture matrices."""

    def __init__(self, fixtures: FixtureSet):
        self.fixtures = fixtures

    # --- shared checks ----------------------------------------------------

    def _check_entries(self, report: ReplayReport, label: str, matrix_forms: Sequence[LinearForm],
                       listed: Sequence[LinearForm], entry: Callable[[int, int], Tuple[int, int]],
                       source: str) -> None:
        """Exact comparison naming the first differing matrix entry."""
        report.record(f"{label} transcription vs {source}: form count",
                      len(listed), len(matrix_forms), len(listed) == len(matrix_forms))
        for i, (ours, theirs) in enumerate(zip(matrix_forms, listed)):
            if ours == theirs:
                continue
            for j in range(len(ours.order)):
                if ours.coefficient(j) != theirs.coefficient(j):
                    row, col = entry(i, j)
                    report.record(f"{label}[{row + 1}][{col + 1}] vs {source}",
                                  format_rational(theirs.coefficient(j)),
                                  format_rational(ours.coefficient(j)), False)
        report.record(f"{label} transcription vs {source}", 'identical', 'identical', True)

    @staticmethod
    def _check_zero_product(report: ReplayReport, name: str, product: QMatrix) -> None:
        for i in range(product.rows):
            for j in range(product.cols):
                if product[i, j] != 0:
                    report.record(f"{name}[{i + 1}][{j + 1}]", 0, format_rational(product[i, j]), False)
        report.record(name, 'zero matrix', 'zero matrix', True)

    def _check_gb(self, report: ReplayReport, name: str, gb: GroebnerBasis, listing: str,
                  count: Optional[int] = None) -> None:
        expected = self.fixtures.forms(listing)
        if count is not None:
            report.record(f"{name} generator count", count, len(gb), len(gb) == count)
        report.record(f"{name} vs {listing}", _listing(expected), _gb_text(gb),
                      equal_up_to_scalar(gb, expected))

    def _check_pipeline(self, report: ReplayReport, prefix: str, m: QMatrix, n: QMatrix,
                        counts: Dict[str, int]) -> Tuple[GroebnerBasis, List[LinearForm]]:
        """GB_e, c-variable basis, ftilde, GB_k and GB_{k/e} of one piece."""
        y_order = VarOrder.numbered('y', m.rows)
        c_order = VarOrder.numbered('c', n.cols)
        available = set(self.fixtures.listings)

        gb_e = gb_linear(forms_from_columns(m, y_order), y_order)
        for source in ('maple', 'risa'):
            if f"{prefix}/gb_e.{source}" in available:
                self._check_gb(report, 'GB_e', gb_e, f"{prefix}/gb_e.{source}", counts['gb_e'])

        c_gb = gb_linear(forms_from_rows(n, c_order), c_order)
        for source in ('maple', 'risa'):
            if f"{prefix}/c_gb.{source}" in available:
                self._check_gb(report, 'c-variable GB', c_gb, f"{prefix}/c_gb.{source}", counts['c_gb'])

        ftilde = kernel_via_normal_form(n, c_order, y_order)
        if f"{prefix}/ftilde.maple" in available:
            expected = self.fixtures.forms(f"{prefix}/ftilde.maple")
            report.record(f"ftilde vs {prefix}/ftilde.maple", _listing(expected), _listing(ftilde),
                          expected == ftilde)
        if f"{prefix}/ftilde.risa" in available:
            expected = self.fixtures.forms(f"{prefix}/ftilde.risa")
            report.record(f"ftilde vs {prefix}/ftilde.risa", _listing(expected), _listing(ftilde),
                          pairwise_up_to_scalar(ftilde, expected))

        gb_k = gb_linear([f for f in ftilde if not f.is_zero()], y_order)
        gb_ke = quotient_gb(gb_k, gb_e)
        for source in ('maple', 'risa'):
            self._check_gb(report, 'GB_k', gb_k, f"{prefix}/gb_k.{source}", counts['gb_k'])
        for source in ('maple', 'risa'):
            self._check_gb(report, 'GB_{k/e}', gb_ke, f"{prefix}/gb_ke.{source}", counts['gb_ke'])
        return gb_e, ftilde

    # --- replays ----------------------------------------------------------

    def replay_w10(self) -> ReplayReport:
        """ham0 weight 10: C^4 -> C^5 -> C^6 with matrices M and N."""
        fx = self.fixtures
        report = ReplayReport('ham0 w=10')
        y_order = VarOrder.numbered('y', fx.M.rows)
        c_order = VarOrder.numbered('c', fx.N.cols)
        w_order = VarOrder.numbered('w', fx.N.rows)

        self._check_entries(report, 'tM', forms_from_columns(fx.M, y_order),
                            fx.forms('w10/image_forms.risa'), lambda i, j: (i, j), 'w10/image_forms.risa')
        self._check_entries(report, 'N', forms_from_columns(fx.N, w_order),
                            fx.forms('w10/kernel_columns.risa'), lambda i, j: (j, i),
                            'w10/kernel_columns.risa')
        for source in ('maple', 'risa'):
            self._check_entries(report, 'N', forms_from_rows(fx.N, c_order),
                                fx.forms(f"w10/kernel_forms.{source}"), lambda i, j: (i, j),
                                f"w10/kernel_forms.{source}")
        self._check_zero_product(report, 'N.M', mat_mul(fx.N, fx.M))
        self._check_pipeline(report, 'w10', fx.M, fx.N, W10_COUNTS)
        LOGGER.info("w10 replay: %d checks passed", len(report.checks))
        return report

    def replay_w8_and_final(self) -> ReplayReport:
        """ham weight 8: C^6 -> C^7 -> C^8 with Mbar and Nbar, then the final normal form."""
        fx = self.fixtures
        report = ReplayReport('ham w=8')
        c_order = VarOrder.numbered('c', fx.Nbar.cols)

        for source in ('maple', 'risa'):
            self._check_entries(report, 'Nbar', forms_from_rows(fx.Nbar, c_order),
                                fx.forms(f"w8/kernel_forms.{source}"), lambda i, j: (i, j),
                                f"w8/kernel_forms.{source}")
        self._check_zero_product(report, 'Nbar.Mbar', mat_mul(fx.Nbar, fx.Mbar))
        gb_e, _ = self._check_pipeline(report, 'w8', fx.Mbar, fx.Nbar, W8_COUNTS)

        residual = normal_form(fx.hbar, gb_e)
        report.record('normal form of hbar is nonzero', 'nonzero', format_form(residual),
                      not residual.is_zero())
        maple = fx.forms('w8/final_nf.maple')[0]
        risa = fx.forms('w8/final_nf.risa')[0]
        report.record('normal form of hbar vs w8/final_nf.maple', format_form(maple),
                      format_form(residual), residual == maple)
        report.record('normal form of hbar vs w8/final_nf.risa', format_form(risa),
                      format_form(residual), proportional(residual, risa))
        report.record(f"final_nf.risa = {FINAL_NF_FACTOR} * final_nf.maple", format_form(risa),
                      format_form(maple.scale(FINAL_NF_FACTOR)), maple.scale(FINAL_NF_FACTOR) == risa)
        LOGGER.info("w8 replay: %d checks passed", len(report.checks))
        return report

    def check_manifest(self) -> ReplayReport:
        report = ReplayReport('checksums')
        bad = checksum_mismatches(self.fixtures.root)
        report.record('SHA256SUMS', 'all files match', ', '.join(bad) or 'all files match', not bad)
        return report

    def run(self, only: Optional[str] = None) -> List[ReplayReport]:
        """Both replays (or one, for only='w10' / 'w8'), then the checksum manifest."""
        reports = []
        if only in (None, 'w10'):
            reports.append(self.replay_w10())
        if only in (None, 'w8'):
            reports.append(self.replay_w8_and_final())
        reports.append(self.check_manifest())
        return reports


def replay_w10(fixtures: FixtureSet) -> ReplayReport:
    return PaperReplay(fixtures).replay_w10()


def replay_w8_and_final(fixtures: FixtureSet) -> ReplayReport:
    return PaperReplay(fixtures).replay_w8_and_final()
