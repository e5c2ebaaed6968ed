"""Tests for the command-line entry point."""

import shutil
from pathlib import Path

import pytest

from algebra.groebner import load_listing
from complexes.cochains import generator_differential
from complexes.sp_basic import get_complex
from config import RunConfig
from main import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main, parse_config

FIXTURES = Path(__file__).resolve().parent.parent / 'fixtures' / 'v1'


def test_betti_table_output(capsys):
    assert main(['betti', '--variant', 'ham0', '--weight', '10', '--degrees', '2..6']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('=' * 80)
    assert 'Betti num' in out and 'C^5' in out


def test_betti_report_is_deterministic(capsys):
    argv = ['betti', '--variant', 'ham0', '--weight', '10', '--format', 'report']
    assert main(argv) == EXIT_OK
    first = capsys.readouterr().out
    get_complex.cache_clear()
    generator_differential.cache_clear()
    assert main(argv) == EXIT_OK
    assert capsys.readouterr().out == first, "Identical invocations print identical output"
    pairs = dict(line.split('=', 1) for line in first.splitlines())
    assert pairs['C5.dim'] == '12'
    assert pairs['C5.betti'] == '1'
    assert pairs['C4.rank_out'] == '7'
    assert pairs['euler'] == '-1'


def test_betti_ham_weight_2(capsys):
    assert main(['betti', '--variant', 'ham', '--weight', '2', '--format', 'report']) == EXIT_OK
    out = capsys.readouterr().out
    assert all(line.endswith('=0') for line in out.splitlines() if '.betti=' in line)


@pytest.mark.parametrize('argv', [
    ['betti', '--variant', 'ham0', '--weight', '3'],
    ['betti', '--variant', 'ham0', '--weight', '10', '--degrees', '6..2'],
    ['betti', '--variant', 'ham1', '--weight', '10'],
    ['betti', '--variant', 'ham0'],
    ['gb'],
    ['no-such-command'],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE
    assert 'usage error' in capsys.readouterr().err


def test_gb_of_fixture_matrix(tmp_path):
    out = tmp_path / 'gb_e.txt'
    assert main(['gb', '--fixture-matrix', 'M', '--fixtures', str(FIXTURES), '--output', str(out)]) == EXIT_OK
    order, forms = load_listing(out)
    assert len(order) == 12
    assert len(forms) == 7, "GB_e has seven generators"


def test_gb_of_transposed_file(tmp_path):
    out = tmp_path / 'gb.txt'
    assert main(['gb', str(FIXTURES / 'w8' / 'tMbar.txt'), '--transposed', '--output', str(out)]) == EXIT_OK
    assert len(load_listing(out)[1]) == 9


def test_gb_of_zero_matrix(tmp_path, capsys):
    matrix = tmp_path / 'zero.txt'
    matrix.write_text("3 2\n0 0\n0 0\n0 0\n", encoding='utf-8')
    assert main(['gb', str(matrix)]) == EXIT_OK
    assert capsys.readouterr().out == 'vars y1..y3\n'


def test_gb_parse_error(tmp_path, capsys):
    matrix = tmp_path / 'bad.txt'
    matrix.write_text("1 2\n1 q\n", encoding='utf-8')
    assert main(['gb', str(matrix)]) == 2
    assert 'bad.txt:2' in capsys.readouterr().err


def test_verify_paper(capsys):
    assert main(['verify-paper', '--fixtures', str(FIXTURES)]) == EXIT_OK
    out = capsys.readouterr().out
    assert 'MISMATCH' not in out
    assert 'replay: ham0 w=10' in out and 'replay: ham w=8' in out


def test_verify_paper_only_w8(capsys):
    assert main(['verify-paper', '--fixtures', str(FIXTURES), '--only', 'w8']) == EXIT_OK
    assert 'replay: ham0 w=10' not in capsys.readouterr().out


def test_verify_paper_corrupted_entry(tmp_path, capsys):
    target = tmp_path / 'v1'
    shutil.copytree(FIXTURES, target)
    path = target / 'w10' / 'N.txt'
    text = path.read_text(encoding='utf-8')
    path.write_text(text.replace('42 7', '42 8', 1), encoding='utf-8')
    assert main(['verify-paper', '--fixtures', str(target)]) == EXIT_MISMATCH
    assert 'N[4][5]' in capsys.readouterr().err


def test_fixture_path_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv('HAMFORMS_FIXTURES', str(tmp_path))
    config = parse_config(['verify-paper'])
    assert config.fixtures == tmp_path
    assert RunConfig(command='sweep').fixtures == tmp_path


def test_complex_command(capsys):
    assert main(['complex', '--variant', 'ham0', '--weight', '10', '--degrees', '5..5']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('C^5 weight=10 dim=12\n4 12\n')


def test_sweep_small_weights(capsys):
    assert main(['sweep', '--variant', 'ham', '--weights', '2', '--format', 'report']) == EXIT_OK
    assert 'weight=2' in capsys.readouterr().out


@pytest.mark.slow
def test_kontsevich_check_command(tmp_path, capsys):
    certificate = tmp_path / 'certificate.txt'
    assert main(['kontsevich-check', '--self-test', '--emit-certificate', str(certificate)]) == EXIT_OK
    assert 'verdict true' in capsys.readouterr().out
    pairs = dict(line.split('=', 1) for line in certificate.read_text(encoding='utf-8').splitlines())
    assert pairs['verdict'] == 'true'
    assert pairs['residual'].strip('0 ') != ''
