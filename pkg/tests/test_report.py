import json

from lens_topology.core.dset import point, polygon_circle, sphere
from lens_topology.homology.homology import Z, ZERO, torsion_group
from lens_topology.spaces.report import cell_count_report, space_report


def test_sphere_report():
    report = space_report("sphere", "sphere 2", sphere(2))
    assert report.f_vector == [6, 12, 8]
    assert report.euler == 2
    assert report.connectivity == 1
    assert report.consistent
    data = report.to_dict()
    assert list(data) == ["name", "expression", "f_vector", "euler", "connectivity", "homology"]
    assert data["homology"][2] == {"dim": 2, "betti": 1, "torsion": []}


def test_acyclic_connectivity_is_null_in_json():
    data = json.loads(space_report("point", "point", point()).to_json())
    assert data["connectivity"] is None


def test_reduced_report_is_consistent():
    report = space_report("circle", "circle 4", polygon_circle(4), reduced=True)
    assert [h.betti for h in report.homology] == [0, 1]
    assert report.consistent


def test_report_without_homology():
    report = space_report("circle", "circle 4", polygon_circle(4), with_homology=False)
    assert report.homology == []
    assert report.f_vector_csv() == "dim,count\n0,4\n1,4\n"


def test_cell_counts_rp1():
    report = cell_count_report(2, 1)
    assert [(r.minimal, r.lens, r.milnor) for r in report.rows] == [(1, 1, 2), (1, 1, 2)]
    assert report.ordered
    assert report.wedge_ok


def test_cell_counts_rp3_models_agree():
    report = cell_count_report(2, 2)
    expected = [Z, torsion_group(2), ZERO, Z]
    assert report.minimal_homology == expected
    assert report.lens_homology == expected
    assert report.milnor_homology == expected
    assert report.homology_agrees


def test_cell_counts_wedge_rank():
    report = cell_count_report(3, 2)
    assert report.wedge_rank == 16
    assert report.wedge_ok
    assert report.ordered
    assert [r.lens for r in report.rows] == [2, 5, 6, 3]
    assert [r.milnor for r in report.rows] == [4, 18, 36, 27]
