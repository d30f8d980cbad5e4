import math

import pytest
from toric_pseudoindex import pairUtils as pu
from toric_pseudoindex.constructionUtils import linear_center, projective_space
from toric_pseudoindex.exceptions import DivisorialCenterError, ToricError


def test_build_prop1_pair():
	y, center = pu.build_prop1_pair(2)
	assert y.dim == 4
	assert y.dim - len(center) == 2
	assert y.n_cones == 9


def test_build_prop1_pair_rejects_m1():
	with pytest.raises(DivisorialCenterError):
		pu.build_prop1_pair(1)


def test_build_family_pair():
	y, center = pu.build_family_pair(5, 1, 4, 2)
	assert y.dim == 10
	assert y.dim - len(center) == 6


@pytest.mark.parametrize("params, error", [
	((1, 1, 1, 1), DivisorialCenterError),
	((0, 1, 2, 1), ToricError),
])
def test_build_family_pair_rejected(params, error):
	with pytest.raises(error):
		pu.build_family_pair(*params)


def test_family_closed_forms():
	assert pu.family_closed_forms(5, 1, 4, 2) == {"y_fano": True, "x_fano": True, "i_y": 2, "i_x": 3}
	assert pu.family_closed_forms(1, 1, 2, 1) == {"y_fano": False, "x_fano": True, "i_y": None, "i_x": None}
	assert pu.family_closed_forms(2, 1, 2, 1)["i_y"] == 1


def test_lowest_dimensional_example():
	analysis = pu.analyze_pair(*pu.build_family_pair(5, 1, 4, 2))
	assert analysis.report_y.pseudo_index == 2
	assert analysis.report_x.pseudo_index == 3
	assert analysis.identities.ok


def test_family_region_x_fano_y_not():
	analysis = pu.analyze_pair(*pu.build_family_pair(1, 1, 2, 1))
	assert analysis.report_x.is_fano
	assert not analysis.report_y.is_fano
	assert analysis.identities.pullback_nef_ok is None
	assert analysis.identities.gcd_index_ok is None


def test_identities_point_of_p3():
	identities = pu.check_blowup_identities(projective_space(3), (0, 1, 2))
	assert identities.ok
	assert identities.gcd_index_ok
	assert identities.to_dict()["discrepancy"]


def test_identities_line_in_p4():
	analysis = pu.analyze_pair(projective_space(4), linear_center(4, 1))
	assert analysis.blowup.discrepancy == 2
	assert analysis.identities.ok


def test_build_linear_pair():
	y, center = pu.build_linear_pair(4, 1)
	assert center == (0, 1, 2)
	analysis = pu.analyze_pair(y, center)
	assert analysis.identities.dim_z == 1
	assert analysis.report_x.is_fano
	assert analysis.report_x.picard_rank == 2
	assert analysis.report_x.fano_index == math.gcd(5, 2)


def test_build_linear_pair_rejects_divisor():
	with pytest.raises(DivisorialCenterError):
		pu.build_linear_pair(3, 2)


def test_prop1_pair_m3():
	analysis = pu.analyze_pair(*pu.build_prop1_pair(3))
	ry, rx = analysis.report_y, analysis.report_x
	assert (ry.pseudo_index, rx.pseudo_index) == (1, 2)
	assert (ry.picard_rank, rx.picard_rank) == (2, 3)
	assert rx.fano_index == math.gcd(ry.fano_index, 2)
	assert analysis.blowup.fan_x.n_cones == 2 * 3 * 4
	assert analysis.identities.ok


def test_theorem1_point_of_p3():
	verdict = pu.check_theorem1(projective_space(3), (0, 1, 2))
	assert verdict.clauses == ("i", "iii")
	assert verdict.applied == "i"
	assert verdict.conclusion
	assert not verdict.violated


def test_theorem1_no_clause_for_lowest_example():
	verdict = pu.check_theorem1(*pu.build_family_pair(5, 1, 4, 2))
	assert verdict.clauses == ()
	assert verdict.applied == "none"
	assert verdict.conclusion is False
	assert not verdict.violated


def test_theorem1_boundary_for_prop1():
	verdict = pu.check_theorem1(*pu.build_prop1_pair(3))
	assert verdict.boundary
	assert verdict.applied == "boundary"
	assert not verdict.violated
	assert verdict.to_dict()["clauses"] == []


def test_theorem1_not_fano():
	verdict = pu.check_theorem1(*pu.build_family_pair(1, 1, 2, 1))
	assert verdict.applied == "not-fano"
	assert verdict.conclusion is None


def test_prop1_signature_match():
	analysis = pu.analyze_pair(*pu.build_prop1_pair(3))
	assert pu.matches_prop1_signature(6, 3, analysis.report_y, analysis.report_x)
	point = pu.analyze_pair(projective_space(3), (0, 1, 2))
	assert not pu.matches_prop1_signature(3, 0, point.report_y, point.report_x)


@pytest.mark.parametrize("m", [2, 3])
def test_blown_up_prop1_is_a_p1_bundle(m):
	assert pu.check_isomorphism_signature(m)
