"""Tests for the point, stick-figure and Hilbert function file formats."""

import json

import pytest

from src.enums import OutputFormat, ValidationCode
from src.hadamard.construction import stick_figure
from src.hadamard.errors import ValidationError
from src.hadamard.gorenstein import gorenstein_points
from src.hadamard.projgeom import ProjPoint
from src.hadamard.serialization import (
    PointFile,
    config_model,
    gorenstein_document,
    hf_document,
    parse_points,
    read_points,
    render_hf,
    render_points,
    stick_document,
)
from src.hadamard.verify import PointSet, check_stick_figure, h_vector_of


@pytest.fixture
def reference_document(profile_13431, default_config):
    return gorenstein_document(gorenstein_points(profile_13431, default_config), default_config)


class TestPointFiles:
    def test_json_document(self, reference_document, reference_points, reference_labels):
        data = json.loads(render_points(reference_document, OutputFormat.JSON))
        assert data["h_vector"] == [1, 3, 4, 3, 1]
        assert data["config"] == {"A": ["1/1", "1/2", "1/3", "1/4"], "Ia": [0, 2, 4], "Ib": [0, 2, 4, 6]}
        assert data["points"][0] == ["1", "-4", "5", "-2"]
        assert data["labels"] == reference_labels
        assert "verified" not in data

    def test_verified_flag(self, profile_13431, default_config):
        result = gorenstein_points(profile_13431, default_config)
        data = json.loads(render_points(gorenstein_document(result, default_config, True)))
        assert data["verified"] is True

    def test_csv_document(self, reference_document):
        lines = render_points(reference_document, OutputFormat.CSV).splitlines()
        assert lines[0] == "x0,x1,x2,x3,label"
        assert lines[1] == '1,-4,5,-2,"0{0,1}"'
        assert lines[-1] == '90,-540,910,-459,"{1,2}1"'
        assert len(lines) == 13

    def test_json_is_read_back(self, reference_document, reference_points):
        assert parse_points(render_points(reference_document, OutputFormat.JSON), OutputFormat.JSON) == reference_points

    def test_csv_is_read_back(self, reference_document, reference_points):
        assert parse_points(render_points(reference_document, OutputFormat.CSV), OutputFormat.CSV) == reference_points

    def test_plain_integer_points(self):
        text = '{"points": [[2, 4, 6, 8], ["1/2", "1", "1", "1"]]}'
        assert parse_points(text, OutputFormat.JSON) == [ProjPoint.of(1, 2, 3, 4), ProjPoint.of(1, 2, 2, 2)]

    def test_csv_without_labels(self):
        document = PointFile(points=[["1", "2", "3", "4"]])
        assert render_points(document, OutputFormat.CSV) == "x0,x1,x2,x3\n1,2,3,4\n"

    @pytest.mark.parametrize(
        "text, fmt",
        [
            ("not json", OutputFormat.JSON),
            ('{"points": []}', OutputFormat.JSON),
            ('{"points": [[1, 2], [1, 2, 3]]}', OutputFormat.JSON),
            ('{"points": [["a", "b"]]}', OutputFormat.JSON),
            ('{"points": [[0, 0, 0, 0]]}', OutputFormat.JSON),
            ("1,2,3,4\n", OutputFormat.CSV),
            ("x0,x1\n", OutputFormat.CSV),
            ("x0,x1,x2,x3\n1,2\n", OutputFormat.CSV),
            ("x0,x1,x2,x3\n1,2,3,4\n5,6,7,8,9\n", OutputFormat.CSV),
            ("x0,x1,x2,x3,label\n1,2,3,4\n", OutputFormat.CSV),
        ],
    )
    def test_malformed(self, text, fmt):
        with pytest.raises(ValidationError) as info:
            parse_points(text, fmt)
        assert info.value.code is ValidationCode.MALFORMED_INPUT

    def test_read_points(self, tmp_path, reference_document, reference_points):
        path = tmp_path / "points.csv"
        path.write_text(render_points(reference_document, OutputFormat.CSV), encoding="utf-8")
        assert read_points(path) == reference_points

    def test_missing_file(self, tmp_path):
        with pytest.raises(ValidationError) as info:
            read_points(tmp_path / "absent.json")
        assert info.value.code is ValidationCode.MALFORMED_INPUT

    def test_short_csv_row_names_row(self):
        with pytest.raises(ValidationError) as info:
            parse_points("x0,x1,x2,x3\n1,2,3,4\n1,2\n", OutputFormat.CSV)
        assert info.value.index == 1

    def test_binary_file(self, tmp_path):
        path = tmp_path / "points.json"
        path.write_bytes(b"\xff\xfe\x00garbage")
        with pytest.raises(ValidationError) as info:
            read_points(path)
        assert info.value.code is ValidationCode.MALFORMED_INPUT


class TestReports:
    def test_stick_document(self, default_config):
        figure = stick_figure(default_config, 3, 4)
        document = stick_document(figure, check_stick_figure(figure))
        assert (document.a, document.b) == (3, 4)
        assert len(document.lines) == 12
        assert len(document.intersections) == 30
        assert (len(document.row_planes), len(document.column_planes)) == (3, 4)
        assert document.check.passed
        assert document.lines[0].forms == [["1", "1", "1", "1"], ["1", "2", "3", "4"]]
        assert document.intersections[0].point == ["1", "-4", "5", "-2"]
        assert document.config == config_model(default_config)

    def test_hf_report(self, reference_points):
        ps = PointSet(tuple(reference_points))
        document = hf_document(h_vector_of(ps), len(ps))
        assert render_hf(document, OutputFormat.CSV) == "degree,hf\n0,1\n1,4\n2,8\n3,11\n4,12\n"
        data = json.loads(render_hf(document))
        assert data["h_vector"] == [1, 3, 4, 3, 1]
        assert data["stabilized_at"] == 4
        assert data["points"] == 12
