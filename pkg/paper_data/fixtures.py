"""Transcribed matrices and Gröbner listings.

Layout of a fixture tree (one directory per weight):
- w10/tM.txt, w10/N.txt: coboundary matrices of the ham0 weight-10 complex
- w8/tMbar.txt, w8/Nbar.txt: the same for the ham weight-8 complex
- *.maple.txt / *.risa.txt: listings printed by two computer algebra systems
- SHA256SUMS: checksum manifest of every file above

Transposed matrices are stored as printed and transposed on load.
"""

import hashlib
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from algebra.groebner import LinearForm, VarOrder, load_listing
from algebra.linalg import QMatrix, load_matrix, transpose
from config import default_fixture_path
from errors import FixtureError, ParseError

LOGGER = logging.getLogger(__name__)

CHECKSUM_FILE = 'SHA256SUMS'

# name -> (relative path, stored transposed, shape after loading)
MATRIX_FILES: Dict[str, Tuple[str, bool, Tuple[int, int]]] = {
    'M': ('w10/tM.txt', True, (12, 9)),
    'N': ('w10/N.txt', False, (4, 12)),
    'Mbar': ('w8/tMbar.txt', True, (14, 18)),
    'Nbar': ('w8/Nbar.txt', False, (4, 14)),
}

LISTING_FILES: Tuple[str, ...] = (
    'w10/image_forms.risa',
    'w10/kernel_columns.risa',
    'w10/gb_e.maple', 'w10/gb_e.risa',
    'w10/kernel_forms.maple', 'w10/kernel_forms.risa',
    'w10/c_gb.maple', 'w10/c_gb.risa',
    'w10/ftilde.maple', 'w10/ftilde.risa',
    'w10/gb_k.maple', 'w10/gb_k.risa',
    'w10/gb_ke.maple', 'w10/gb_ke.risa',
    'w8/gb_e.maple', 'w8/gb_e.risa',
    'w8/kernel_forms.maple', 'w8/kernel_forms.risa',
    'w8/c_gb.risa',
    'w8/ftilde.risa',
    'w8/gb_k.maple', 'w8/gb_k.risa',
    'w8/gb_ke.maple', 'w8/gb_ke.risa',
    'w8/hbar',
    'w8/final_nf.maple', 'w8/final_nf.risa',
)


@dataclass
class FixtureSet:
    """Everything transcribed from the printed computations."""
    root: Path
    M: QMatrix
    N: QMatrix
    Mbar: QMatrix
    Nbar: QMatrix
    hbar: LinearForm
    listings: Dict[str, Tuple[VarOrder, List[LinearForm]]] = field(default_factory=dict)

    def forms(self, name: str) -> List[LinearForm]:
        try:
            return list(self.listings[name][1])
        except KeyError:
            raise FixtureError(f"no listing named {name!r}", self.root) from None


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def read_checksums(root: Path) -> Dict[str, str]:
    manifest = root / CHECKSUM_FILE
    if not manifest.exists():
        raise FixtureError("checksum manifest missing", manifest)
    sums = {}
    for number, line in enumerate(manifest.read_text(encoding='utf-8').splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FixtureError(f"malformed checksum line {line!r}", manifest, number)
        sums[parts[1].lstrip('*')] = parts[0]
    return sums


def checksum_mismatches(root: Union[str, Path]) -> List[str]:
    """Relative paths whose sha256 differs from the manifest."""
    root = Path(root)
    bad = []
    for relative, expected in sorted(read_checksums(root).items()):
        path = root / relative
        if not path.exists() or _sha256(path) != expected:
            bad.append(relative)
    return bad


def verify_checksums(root: Union[str, Path]) -> None:
    bad = checksum_mismatches(root)
    if bad:
        raise FixtureError(f"checksum mismatch for {', '.join(bad)}", Path(root) / bad[0])


def _load_matrix(root: Path, name: str) -> QMatrix:
    relative, transposed, shape = MATRIX_FILES[name]
    path = root / relative
    if not path.exists():
        raise FixtureError("fixture file missing", path)
    try:
        matrix = load_matrix(path)
    except ParseError as exc:
        raise FixtureError(str(exc.args[0]), exc.path, exc.line) from exc
    if transposed:
        matrix = transpose(matrix)
    if matrix.shape != shape:
        raise FixtureError(f"{name} has shape {matrix.shape}, expected {shape}", path)
    return matrix


def _load_listing(root: Path, name: str) -> Tuple[VarOrder, List[LinearForm]]:
    path = root / f"{name}.txt"
    if not path.exists():
        raise FixtureError("fixture file missing", path)
    try:
        return load_listing(path)
    except ParseError as exc:
        raise FixtureError(str(exc.args[0]), exc.path, exc.line) from exc


def load_fixtures(path: Optional[Union[str, Path]] = None, verify: bool = True) -> FixtureSet:
    """Parse and shape-check a fixture tree.

    Args:
        path: Fixture root; defaults to HAMFORMS_FIXTURES or the bundled tree
        verify: Check the sha256 manifest first

    Returns:
        FixtureSet
    """
    root = Path(path) if path is not None else default_fixture_path()
    if not root.is_dir():
        raise FixtureError("fixture directory not found", root)
    if verify:
        verify_checksums(root)
    matrices = {name: _load_matrix(root, name) for name in MATRIX_FILES}
    listings = {name: _load_listing(root, name) for name in LISTING_FILES}
    hbar_order, hbar_forms = listings['w8/hbar']
    if len(hbar_forms) != 1 or len(hbar_order) != matrices['Mbar'].rows:
        raise FixtureError("hbar must be a single form in the C^7 coordinates", root / 'w8/hbar.txt')
    LOGGER.info("loaded fixtures from %s", root)
    return FixtureSet(root=root, hbar=hbar_forms[0], listings=listings, **matrices)
