"""Table printer and key-value report writer.

Tables are pandas DataFrames rendered under a banner; reports are sorted
`key=value` lines. Rationals are printed as `p` or `p/q`.
"""

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from algebra.hamiltonian import AlgebraVariant
from algebra.linalg import QVector, format_matrix, format_rational
from cohomology import BettiRow, TheoremCertificate
from complexes.cochains import Cochain
from complexes.sp_basic import SpBasicComplex
from paper_data.replay import ReplayReport

BANNER = "=" * 80


def banner(title: str) -> str:
    return f"{BANNER}\n{title}\n{BANNER}"


def format_vector(v: QVector) -> str:
    return ' '.join(format_rational(e) for e in v)


def format_cochain(c: Cochain) -> str:
    if c.is_zero():
        return '0'
    return ' + '.join(f"({format_rational(v)})*{m.name}" for m, v in c.items())


def betti_frame(rows: Sequence[BettiRow]) -> pd.DataFrame:
    """Columns C^k; rows dim, rank of the map into C^k, Betti number."""
    data = {f"C^{r.degree}": [r.dim, r.rank_in, r.betti] for r in rows}
    return pd.DataFrame(data, index=['dim', 'rank', 'Betti num'])


def betti_table_text(variant: AlgebraVariant, weight: int, rows: Sequence[BettiRow]) -> str:
    title = f"Sp-basic complex of {AlgebraVariant(variant).value}, weight {weight}"
    frame = betti_frame(rows)
    body = frame.to_string() if rows else '(no nonzero pieces)'
    return f"{banner(title)}\n{body}\n{BANNER}\n"


def key_value_report(pairs: Dict[str, object]) -> str:
    return ''.join(f"{key}={pairs[key]}\n" for key in sorted(pairs))


def betti_pairs(variant: AlgebraVariant, weight: int, rows: Sequence[BettiRow],
                euler: bool = True) -> Dict[str, object]:
    pairs: Dict[str, object] = {'variant': AlgebraVariant(variant).value, 'weight': weight}
    for r in rows:
        pairs[f"C{r.degree}.dim"] = r.dim
        pairs[f"C{r.degree}.rank_in"] = r.rank_in
        pairs[f"C{r.degree}.rank_out"] = r.rank_out
        pairs[f"C{r.degree}.betti"] = r.betti
    if euler:
        pairs['euler'] = sum((-1) ** r.degree * r.dim for r in rows)
    return pairs


def betti_report_text(variant: AlgebraVariant, weight: int, rows: Sequence[BettiRow],
                      euler: bool = True) -> str:
    return key_value_report(betti_pairs(variant, weight, rows, euler))


def certificate_pairs(certificate: TheoremCertificate) -> Dict[str, object]:
    return {
        'verdict': str(certificate.verdict).lower(),
        'residual': format_vector(certificate.residual),
        'image_vector': format_vector(certificate.image_vector),
        'is_cocycle': str(certificate.is_cocycle).lower(),
        'well_defined': str(certificate.well_defined).lower(),
        'rank_image': certificate.rank_image,
        'rank_with_kernel': certificate.rank_with_kernel,
        'kernel_dimension': certificate.kernel_dimension,
        'reversed_order': str(certificate.reversed_order).lower(),
        'h': format_cochain(certificate.h),
    }


def certificate_text(certificate: TheoremCertificate, output_format: str = 'table',
                     self_test: Optional[Dict[str, bool]] = None) -> str:
    pairs = certificate_pairs(certificate)
    if self_test is not None:
        for key, value in self_test.items():
            pairs[f"self_test.{key}"] = str(value).lower()
    if output_format == 'report':
        return key_value_report(pairs)
    lines = [banner("omega-wedge check: H^5(ham0)_10 -> H^7(ham)_8")]
    lines.append(f"h = {pairs['h']}")
    lines.append(f"omega ^ h in C^7 coordinates: {pairs['image_vector']}")
    lines.append(f"residual modulo d(C^6): {pairs['residual']}")
    lines.append(f"omega ^ h closed: {pairs['is_cocycle']}")
    lines.append(f"coboundaries map to coboundaries: {pairs['well_defined']}")
    lines.append(f"rank of image of d: {certificate.rank_image}, "
                 f"with omega ^ kernel: {certificate.rank_with_kernel}")
    for note in certificate.notes:
        lines.append(f"note: {note}")
    if self_test is not None:
        for key, value in self_test.items():
            lines.append(f"self-test {key}: {'ok' if value else 'MISMATCH'}")
    verdict = "NOT a coboundary (verdict true)" if certificate.verdict else "absorbed (verdict false)"
    lines.append(f"omega ^ h is {verdict}")
    lines.append(BANNER)
    return '\n'.join(lines) + '\n'


def complex_text(cx: SpBasicComplex, degrees: Tuple[int, int]) -> str:
    """`C^k weight=w dim=d` then the matrix of d: C^k -> C^(k+1), per degree."""
    parts: List[str] = []
    for k in range(degrees[0], degrees[1] + 1):
        parts.append(f"C^{k} weight={cx.weight} dim={cx.dimension(k)}\n")
        parts.append(format_matrix(cx.differential_matrix(k)))
    return ''.join(parts)


def replay_text(reports: Iterable[ReplayReport]) -> str:
    lines: List[str] = []
    for report in reports:
        lines.append(banner(f"replay: {report.title}"))
        for check in report.checks:
            lines.append(f"{'ok' if check.passed else 'MISMATCH'}  {check.name}")
    lines.append(BANNER)
    return '\n'.join(lines) + '\n'
