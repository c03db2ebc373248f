"""Tests for GemDocument serialization, parsing and DOT export."""

import json
import re

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from gem_degree.cli_io import export_dot, parse, serialize, serialize_map
from gem_degree.constructions import (
    cylinder_gem,
    glued_sphere,
    necklace_sphere,
    product_gem,
    standard_sphere,
)
from gem_degree.degree_maps import build_g_d_product
from gem_degree.errors import BadColor, DocumentSyntaxError, InvalidMap, LoopEdge
from gem_degree.gem_core import new_gem
from gem_degree.models import VertexLabel, v
from tests.helpers import grid

NODE_LINE = re.compile(r"^\t\d+ \[label=", re.MULTILINE)


def document(**overrides):
    base = {"format_version": 1, "dimension": 1, "labels": ["a", "b"], "edges": [[0, 1, 0]]}
    base.update(overrides)
    return json.dumps(base)


class TestSerialize:
    def test_standard_sphere_document(self):
        data = json.loads(serialize(standard_sphere(2)))
        assert data["format_version"] == 1
        assert data["dimension"] == 2
        assert data["labels"] == ["v^1", "v^2"]
        assert data["edges"] == [[0, 1, 0], [0, 1, 1], [0, 1, 2]]
        assert data["map"] is None

    def test_round_trip(self):
        gem = product_gem(3, 2)
        assert parse(serialize(gem)) == gem

    def test_serialization_is_structural(self, product3):
        count = product3.vertex_count
        permuted = new_gem(
            3,
            [product3.labels[count - 1 - i] for i in range(count)],
            [(count - 1 - a, count - 1 - b, c) for a, b, c in product3.edges],
        )
        assert serialize(permuted) != serialize(product3)

    def test_deterministic(self):
        assert serialize(cylinder_gem(3, 2)) == serialize(cylinder_gem(3, 2))

    @settings(max_examples=25, deadline=None)
    @given(st.sampled_from(grid()))
    def test_round_trip_across_families(self, case):
        n, d = case
        for gem in (necklace_sphere(n, d), cylinder_gem(n, d), glued_sphere(n, d)):
            assert parse(serialize(gem)) == gem


class TestParse:
    def test_loop_edge_with_location(self):
        with pytest.raises(LoopEdge) as exc:
            parse(document(edges=[[1, 1, 0]]))
        assert exc.value.location == "edges[0]"

    def test_color_above_dimension(self):
        with pytest.raises(BadColor):
            parse(document(edges=[[0, 1, 0], [0, 1, 4]]))

    def test_not_json(self):
        with pytest.raises(DocumentSyntaxError) as exc:
            parse(export_dot(standard_sphere(1)))
        assert exc.value.code == "SyntaxError"

    def test_missing_field(self):
        with pytest.raises(DocumentSyntaxError) as exc:
            parse(json.dumps({"dimension": 1, "labels": ["a", "b"]}))
        assert exc.value.location == "edges"

    def test_unknown_version(self):
        with pytest.raises(DocumentSyntaxError):
            parse(document(format_version=2))

    def test_padded_numbers_stay_opaque(self):
        gem = parse(document(labels=["v_01", "v_1"]))
        assert [str(label) for label in gem.labels] == ["v_01", "v_1"]
        assert gem.labels[0].name == "v_01"
        assert gem.labels[1] == v(1)
        assert parse(serialize(gem)) == gem

    def test_structured_name_round_trips(self):
        gem = new_gem(1, [VertexLabel(name="v_3"), "x"], [(0, 1, 0), (0, 1, 1)])
        assert gem.labels[0] == v(3)
        assert parse(serialize(gem)) == gem

    def test_map_round_trip(self):
        m = build_g_d_product(3, 2)
        assert parse(serialize_map(m)) == m

    def test_map_breaking_the_edge_contract(self):
        m = build_g_d_product(3, 2)
        data = json.loads(serialize_map(m))
        data["map"]["assignment"][1] = data["map"]["assignment"][0]
        data["map"]["assignment"][0] = 7
        with pytest.raises(InvalidMap):
            parse(json.dumps(data))


class TestExportDot:
    def test_standard_sphere_one(self):
        source = export_dot(standard_sphere(1))
        assert "graph {" in source
        assert len(NODE_LINE.findall(source)) == 2
        assert source.count(" -- ") == 2
        assert '"v^1"' in source

    def test_product_gem_node_count(self, product_3_4):
        source = export_dot(product_3_4)
        assert len(NODE_LINE.findall(source)) == 32
        assert source.count(" -- ") == len(product_3_4.edges)

    def test_edges_carry_their_color(self, sphere2):
        source = export_dot(sphere2)
        for color in range(3):
            assert f"label={color}" in source
