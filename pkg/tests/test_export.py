"""
Tests for the JSON, CSV and SVG writers.
"""

import json
import math
import xml.etree.ElementTree as ET

import pytest

from zgamma.errors import ConfigError
from zgamma.export import (
    CSVWriter,
    JSONReader,
    JSONWriter,
    RunManifest,
    SVGOptions,
    SVGWriter,
    grid_table,
    pattern_document,
    radii_table,
    riccati_table,
)
from zgamma.lattice import PrecisionContext
from zgamma.pattern import PatternConfig, PatternMode
from zgamma.pattern.coordinator import PatternCoordinator
from zgamma.riccati import RiccatiParams, riccati_iterate


@pytest.fixture(scope="module")
def result():
    config = PatternConfig(gamma=0.5, alpha=math.pi / 2, alpha_pi=0.5, size=6,
                           precision=PrecisionContext(106))
    return PatternCoordinator(config, n_cap=4).generate()


@pytest.fixture(scope="module")
def log_result():
    config = PatternConfig(gamma=2.0, alpha=1.0, size=6, mode=PatternMode.LOG,
                           precision=PrecisionContext(106))
    return PatternCoordinator(config).generate()


class TestManifest:
    def test_for_result(self, result):
        manifest = RunManifest.for_result(result, 'generate')
        data = manifest.to_dict()
        assert data['tool'] == 'zgamma'
        assert data['bits'] == 106
        assert data['config']['mode'] == 'zgamma'
        assert data['extra']['grid_size'] == 6
        assert data['extra']['field']['M_max'] == 3
        assert data['validation']['passed']

    def test_dict_round_trip(self, result):
        manifest = RunManifest.for_result(result, 'generate')
        again = RunManifest.from_dict(json.loads(json.dumps(manifest.to_dict())))
        assert again.config == manifest.config
        assert again.created == manifest.created
        assert again.residuals == manifest.residuals
        assert again.extra['attempts'] == [[106, 'accepted']]


class TestJSON:
    def test_restores_bit_exact(self, result, tmp_path):
        path = tmp_path / "out" / "pattern.json"
        assert JSONWriter().write_result(result, str(path))

        loaded = JSONReader().read(str(path))
        assert loaded.config.to_dict() == result.config.to_dict()
        assert loaded.grid.values == result.grid.values
        assert loaded.field.R == result.field.R
        assert loaded.field.gamma == result.field.gamma
        assert len(loaded.pattern.circles) == len(result.pattern.circles)
        assert loaded.manifest.command == 'generate'

    def test_document_layout(self, result):
        manifest = RunManifest.for_result(result, 'generate')
        doc = pattern_document(manifest, result.config, result.grid, result.field, result.pattern)
        assert len(doc['grid']) == len(result.grid)
        assert len(doc['radii']) == len(result.field)
        labels = [(c['N'], c['M']) for c in doc['circles']]
        assert labels == sorted(labels)
        assert set(doc['grid'][0]) == {'n', 'm', 're', 'im'}
        assert isinstance(doc['radii'][0]['R'], str)

    def test_log_field_keeps_infinity(self, log_result, tmp_path):
        path = tmp_path / "log.json"
        assert JSONWriter().write_result(log_result, str(path))
        loaded = JSONReader().read(str(path))
        assert loaded.grid is None and loaded.pattern is None
        assert loaded.field.kind == 'log'
        assert loaded.config.ctx.mp.isinf(loaded.field[(0, 0)])
        assert loaded.field.gamma == 0

    def test_nothing_to_write(self, result, tmp_path):
        manifest = RunManifest(command='generate')
        assert not JSONWriter().write(str(tmp_path / "empty.json"), manifest, result.config)

    def test_unknown_schema(self):
        with pytest.raises(ConfigError):
            JSONReader().from_document({'manifest': {'schema_version': 99}})

    def test_not_a_document(self):
        with pytest.raises(ConfigError):
            JSONReader().from_document({'grid': []})


class TestCSV:
    def test_manifest_comment_and_header(self, ctx53, tmp_path):
        params = RiccatiParams.from_pi(1.0, 0.25)
        traj = riccati_iterate(1, params, 5, ctx53)
        path = tmp_path / "riccati.csv"
        assert CSVWriter().write(*riccati_table(traj, ctx53), filepath=str(path),
                                 manifest=RunManifest(command='riccati', bits=53))

        lines = path.read_text().splitlines()
        assert lines[0].startswith('# ')
        assert json.loads(lines[0][2:])['command'] == 'riccati'
        assert lines[1] == 'n,p'
        assert len(lines) == 2 + 6
        assert all(float(line.split(',')[1]) == 1.0 for line in lines[2:])

    def test_stdout(self, capsys):
        assert CSVWriter().write(('a', 'b'), [(1, 2), (3, 4)])
        assert capsys.readouterr().out == "a,b\n1,2\n3,4\n"

    def test_empty_table(self, tmp_path):
        assert not CSVWriter().write(('a',), [], filepath=str(tmp_path / "x.csv"))

    def test_tables(self, result):
        header, rows = grid_table(result.grid)
        assert header == ('n', 'm', 're', 'im')
        assert len(rows) == len(result.grid)
        header, rows = radii_table(result.field)
        assert header == ('N', 'M', 'R')
        assert rows[0][:2] == (-3, 3)


class TestSVG:
    def test_render(self, result):
        manifest = RunManifest.for_result(result, 'export')
        svg = SVGWriter().render(result.grid, result.pattern, manifest)
        assert svg.tag == 'svg'
        assert len(svg.get('viewBox').split()) == 4
        circles = [el for el in svg.iter() if el.tag == 'circle']
        assert len(circles) == len(result.pattern.circles)
        assert json.loads(svg.find('metadata').text)['command'] == 'export'

    def test_write_and_parse(self, result, tmp_path):
        path = tmp_path / "pattern.svg"
        assert SVGWriter(SVGOptions(axes=True)).write(str(path), result.grid, result.pattern)
        root = ET.parse(str(path)).getroot()
        assert root.tag.endswith('svg')
        paths = [el for el in root.iter() if el.tag.endswith('path')]
        assert paths and all(p.get('d').startswith('M') for p in paths)

    def test_mesh_only(self, result):
        svg = SVGWriter(SVGOptions(circles=False)).render(result.grid, result.pattern)
        assert not [el for el in svg.iter() if el.tag == 'circle']

    def test_nothing_to_draw(self, result, tmp_path):
        writer = SVGWriter(SVGOptions(circles=False, mesh=False))
        assert writer.render(result.grid, result.pattern) is None
        assert not writer.write(str(tmp_path / "empty.svg"), result.grid, result.pattern)
