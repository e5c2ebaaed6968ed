"""Tests for the fixture loader and the replay of the printed listings."""

import shutil
from fractions import Fraction
from pathlib import Path

import pytest

from algebra.groebner import VarOrder, parse_form, proportional
from algebra.linalg import QVector
from errors import FixtureError, VerificationMismatch
from paper_data.fixtures import load_fixtures
from paper_data.replay import PaperReplay

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures' / 'v1'
Y12 = VarOrder.numbered('y', 12)


@pytest.fixture(scope='module')
def fixtures():
    return load_fixtures(FIXTURES)


@pytest.fixture
def fixture_copy(tmp_path):
    target = tmp_path / 'v1'
    shutil.copytree(FIXTURES, target)
    return target


def _replace_line(path: Path, number: int, old: str, new: str) -> None:
    lines = path.read_text(encoding='utf-8').splitlines(keepends=True)
    assert old in lines[number - 1]
    lines[number - 1] = lines[number - 1].replace(old, new, 1)
    path.write_text(''.join(lines), encoding='utf-8')


def test_shapes_and_entries(fixtures):
    assert fixtures.M.shape == (12, 9)
    assert fixtures.N.shape == (4, 12)
    assert fixtures.Mbar.shape == (14, 18)
    assert fixtures.Nbar.shape == (4, 14)
    assert fixtures.M[0, 0] == Fraction(-135, 4), "w1-coordinate of the first image"
    assert fixtures.N.row(3) == QVector([0, 0, 0, 42, 7, 0, 0, 0, 0, 0, 14, 3])
    assert fixtures.Nbar[0, 1] == -35
    assert fixtures.Nbar[0, 8] == Fraction(25, 2)
    assert str(fixtures.hbar) == '-9*y7+105*y10+3*y11+14*y12'


def test_replay_w10(fixtures):
    report = PaperReplay(fixtures).replay_w10()
    assert report.ok
    names = [check.name for check in report.checks]
    assert 'N.M' in names
    assert any(name.startswith('GB_{k/e} vs') for name in names)


def test_w10_quotient_line(fixtures):
    [line] = fixtures.forms('w10/gb_ke.maple')
    assert proportional(line, parse_form('3*y8-36*y9-72*y10-3*y11+14*y12', Y12))
    gb_k = fixtures.forms('w10/gb_k.risa')
    target = parse_form('9*y2-504*y9-1158*y10-141*y11+658*y12', Y12)
    assert any(proportional(g, target) for g in gb_k)


def test_replay_w8_and_final(fixtures):
    report = PaperReplay(fixtures).replay_w8_and_final()
    assert report.ok
    assert report.checks[-1].passed


def test_run_scoping(fixtures):
    titles = [r.title for r in PaperReplay(fixtures).run('w8')]
    assert titles == ['ham w=8', 'checksums']


def test_corrupted_entry_is_named(fixture_copy):
    _replace_line(fixture_copy / 'w10' / 'tM.txt', 2, '-135/4', '-135/2')
    corrupted = load_fixtures(fixture_copy, verify=False)
    with pytest.raises(VerificationMismatch) as info:
        PaperReplay(corrupted).replay_w10()
    assert info.value.name == 'tM[1][1] vs w10/image_forms.risa'
    assert info.value.expected == '-135/4'
    assert info.value.actual == '-135/2'


def test_corrupted_kernel_entry_is_named(fixture_copy):
    _replace_line(fixture_copy / 'w8' / 'Nbar.txt', 2, '25/2', '25/3')
    corrupted = load_fixtures(fixture_copy, verify=False)
    with pytest.raises(VerificationMismatch) as info:
        PaperReplay(corrupted).replay_w8_and_final()
    assert info.value.name.startswith('Nbar[1][9]')


def test_checksum_manifest(fixture_copy):
    listing = fixture_copy / 'w10' / 'gb_e.maple.txt'
    listing.write_text(listing.read_text(encoding='utf-8') + '# reviewed\n', encoding='utf-8')
    with pytest.raises(FixtureError) as info:
        load_fixtures(fixture_copy)
    assert 'w10/gb_e.maple.txt' in str(info.value)
    replay = PaperReplay(load_fixtures(fixture_copy, verify=False))
    assert replay.replay_w10().ok, "A comment does not change the listing"
    with pytest.raises(VerificationMismatch):
        replay.check_manifest()


def test_parse_error_names_file_and_line(fixture_copy):
    _replace_line(fixture_copy / 'w10' / 'N.txt', 3, '31/12', 'abc')
    with pytest.raises(FixtureError) as info:
        load_fixtures(fixture_copy, verify=False)
    assert info.value.line == 3
    assert info.value.path.endswith('N.txt')


def test_shape_error(fixture_copy):
    (fixture_copy / 'w8' / 'Nbar.txt').write_text("1 14\n" + "0 " * 13 + "0\n", encoding='utf-8')
    with pytest.raises(FixtureError, match='Nbar has shape'):
        load_fixtures(fixture_copy, verify=False)
