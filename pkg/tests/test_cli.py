"""
Tests for the command line entry point.
"""

import json
import logging

import pytest

from zgamma.main import main, parse_args


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def pattern_file(tmp_path, capsys):
    path = tmp_path / "half.json"
    code = main(['generate', 'zgamma', '--gamma', '0.5', '--alpha-pi', '0.5', '--size', '8',
                 '--bits', '106', '--n-cap', '6', '--out', str(path)])
    assert code == 0
    capsys.readouterr()
    return path


def csv_lines(path):
    return path.read_text().splitlines()


class TestArguments:
    def test_alpha_flags_are_exclusive(self):
        with pytest.raises(SystemExit) as info:
            parse_args(['riccati', '--alpha', '1.0', '--alpha-pi', '0.3'])
        assert info.value.code == 2

    def test_unknown_mode(self):
        with pytest.raises(SystemExit):
            parse_args(['generate', 'bogus'])

    def test_defaults(self):
        args = parse_args(['riccati'])
        assert args.gamma == 0.5
        assert args.n_max == 200
        assert args.p0 == 'closed'

    def test_bad_parameters_exit_two(self, tmp_path):
        assert main(['generate', 'zgamma', '--gamma', '2.5', '--size', '4',
                     '--out', str(tmp_path / "x.json")]) == 2


class TestGenerate:
    def test_manifest(self, pattern_file):
        doc = json.loads(pattern_file.read_text())
        manifest = doc['manifest']
        assert manifest['command'] == 'generate zgamma'
        assert manifest['bits'] == 106
        assert manifest['residuals']['kite_spread'] < 1e-10
        assert manifest['validation']['passed']
        assert len(doc['grid']) == 9 * 10 // 2

    def test_log_then_check_needs_map(self, tmp_path, capsys):
        path = tmp_path / "log.json"
        assert main(['generate', 'log', '--alpha-pi', '0.4', '--size', '6', '--bits', '106',
                     '--out', str(path)]) == 0
        capsys.readouterr()
        assert main(['check', 'kites', str(path)]) == 2
        assert main(['check', 'sign', str(path)]) == 0


class TestCheck:
    def test_all(self, pattern_file, capsys):
        assert main(['check', 'all', str(pattern_file), '--n-cap', '6']) == 0
        summary = json.loads(capsys.readouterr().out)
        assert summary['passed']
        assert {r['check'] for r in summary['reports']} == {'kites', 'orientation', 'embedded', 'angles', 'sign'}

    @pytest.mark.parametrize("check", ['kites', 'orient', 'angles', 'embed', 'sign'])
    def test_single(self, pattern_file, tmp_path, check):
        out = tmp_path / f"{check}.json"
        assert main(['check', check, str(pattern_file), '--out', str(out)]) == 0
        assert len(json.loads(out.read_text())['reports']) == 1


class TestExport:
    def test_svg(self, pattern_file, tmp_path):
        out = tmp_path / "half.svg"
        assert main(['export', 'svg', str(pattern_file), '--out', str(out), '--axes']) == 0
        assert out.read_text().lstrip().startswith('<?xml')

    def test_csv_to_stdout(self, pattern_file, capsys):
        assert main(['export', 'csv', str(pattern_file), '--table', 'radii']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith('# ')
        assert lines[1] == 'N,M,R'
        assert len(lines) == 2 + 1 + 3 + 5 + 7 + 9

    def test_json_copy(self, pattern_file, tmp_path):
        out = tmp_path / "copy.json"
        assert main(['export', 'json', str(pattern_file), '--out', str(out)]) == 0
        assert json.loads(out.read_text())['grid'] == json.loads(pattern_file.read_text())['grid']


class TestRecursions:
    def test_riccati_identity(self, tmp_path):
        out = tmp_path / "riccati.csv"
        assert main(['riccati', '--gamma', '1', '--alpha-pi', '0.25', '-n', '10', '--out', str(out)]) == 0
        lines = csv_lines(out)
        assert lines[1] == 'n,p'
        assert [float(line.split(',')[1]) for line in lines[2:]] == [1.0] * 11

    def test_riccati_stdout(self, capsys):
        assert main(['riccati', '--gamma', '0.5', '--alpha-pi', '0.5', '-n', '5']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].startswith('# ') and lines[1] == 'n,p'

    def test_radii_z2(self, tmp_path):
        out = tmp_path / "z2.csv"
        assert main(['radii', '--mode', 'z2', '--mmax', '3', '--bits', '106', '--out', str(out)]) == 0
        lines = csv_lines(out)
        assert lines[1] == 'N,M,R'
        assert len(lines) == 2 + 1 + 3 + 5 + 7

    def test_dpii(self, tmp_path):
        out = tmp_path / "dpii.csv"
        assert main(['dpii', '--gamma', '0.5', '-n', '10', '--bits', '106', '--out', str(out)]) == 0
        lines = csv_lines(out)
        assert lines[1] == 'n,re,im,arg,drift'
        assert len(lines) == 2 + 11

    def test_painleve_shoot(self, tmp_path):
        out = tmp_path / "shoot.json"
        orbit = tmp_path / "orbit.csv"
        code = main(['painleve', 'shoot', '--gamma', '1', '--alpha-pi', '0.3', '--mmax', '12',
                     '--tol', '1e-4', '--bits', '106', '--out', str(out), '--trajectory', str(orbit)])
        assert code in (0, 1)
        result = json.loads(out.read_text())['result']
        assert float(result['outer_lo']) <= 1 <= float(result['outer_hi'])
        assert csv_lines(orbit)[1] == 'M,P,Q,domain'


@pytest.mark.slow
def test_sweep(tmp_path):
    out = tmp_path / "sweep.json"
    assert main(['sweep', '--gamma', '0.5', '1.5', '--size', '6', '--bits', '106',
                 '--n-cap', '4', '--workers', '1', '--out', str(out)]) == 0
    summary = json.loads(out.read_text())
    assert summary['passed'] and len(summary['runs']) == 2
