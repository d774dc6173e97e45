import pytest

from lens_topology.core.dset import from_simplicial_complex
from lens_topology.core.io import save_delta_set
from lens_topology.errors import ExpressionSyntaxError
from lens_topology.expression import (
    JoinExpr,
    LensExpr,
    LoadExpr,
    MappingTorusExpr,
    MilnorExpr,
    SphereExpr,
    evaluate,
    parse,
)


def test_parse_lens():
    assert parse("lens 5 [1,1]") == LensExpr(5, (1, 1))
    assert parse("lens 5 [ 1 , 2 ]") == LensExpr(5, (1, 2))


def test_parse_join():
    assert parse("join(sphere 1, sphere 1)") == JoinExpr(SphereExpr(1), SphereExpr(1))


def test_parse_milnor_product_group():
    assert parse("milnor Z:2 x Z:2 2") == MilnorExpr("Z:2 x Z:2", 2)


def test_parse_mapping_torus():
    assert parse("mapping-torus(circle 4, rot 1)") == MappingTorusExpr(4, 1)


def test_missing_parameter_list():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("lens 5")
    assert (info.value.line, info.value.col) == (1, 7)
    assert info.value.expected == "'['"


def test_error_position_on_second_line():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("join(point,\n  bogus)")
    assert (info.value.line, info.value.col) == (2, 3)
    assert info.value.expected == "a space"


def test_trailing_input():
    with pytest.raises(ExpressionSyntaxError) as info:
        parse("point point")
    assert info.value.expected == "end of input"


def test_render_parses_back():
    expr = parse("disjoint(join(circle 3, rp 2), milnor D:3 1)")
    assert parse(expr.render()) == expr


def test_evaluate():
    assert evaluate("mapping-torus(circle 3, rot 1)").counts == (3, 9, 6)
    assert evaluate("join(discrete 2, discrete 2)").counts == (4, 4)


def test_load(tmp_path):
    D = from_simplicial_complex([[0, 1], [1, 2]])
    path = tmp_path / "path graph.json"
    save_delta_set(D, path)
    expr = parse(f'load "{path}"')
    assert expr == LoadExpr(str(path))
    assert expr.build() == D
