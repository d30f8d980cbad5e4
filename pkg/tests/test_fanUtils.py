import pytest
from toric_pseudoindex import fanUtils as fu
from toric_pseudoindex.constructionUtils import hirzebruch, projective_space
from toric_pseudoindex.exceptions import CompletenessError

P2 = fu.Fan(dim=2, rays=((1, 0), (0, 1), (-1, -1)), max_cones=((0, 1), (1, 2), (0, 2)))


@pytest.mark.parametrize("v, expected", [
	((2, 4), (1, 2)),
	((0, -3), (0, -1)),
	((3, 5), (3, 5)),
])
def test_primitive_vector(v, expected):
	assert fu.primitive_vector(v) == expected


@pytest.mark.parametrize("v", [(2, 4), (0, -3), (6, 10, 15), (-12, 18, 30), (7,)])
def test_primitive_vector_is_idempotent(v):
	once = fu.primitive_vector(v)
	assert fu.primitive_vector(once) == once


def test_primitive_vector_zero():
	with pytest.raises(ValueError):
		fu.primitive_vector((0, 0))


def test_fan_normalizes_cones():
	fan = fu.Fan(dim=2, rays=[[1, 0], [0, 1], [-1, -1]], max_cones=[[1, 0], [2, 1], [2, 0]])
	assert fan == P2
	assert hash(fan) == hash(P2)
	assert fan.cones_containing((0,)) == [0, 2]
	assert fan.is_cone((1, 2))
	assert not fan.is_cone((0, 1, 2))


def test_validate_p2():
	report = fu.validate_fan(P2)
	assert report.ok
	assert report.defects == ()
	assert report.to_dict() == {"well_formed": True, "smooth": True, "complete": True, "defects": []}


def test_validate_without_sampling():
	assert fu.validate_fan(P2, samples=0).ok


def test_validate_missing_cone():
	fan = fu.Fan(dim=2, rays=P2.rays, max_cones=((0, 1), (1, 2)))
	report = fu.validate_fan(fan)
	assert report.well_formed
	assert report.smooth
	assert not report.complete
	assert not report.ok
	assert report.defects


def test_validate_non_unimodular_cone():
	fan = fu.Fan(dim=2, rays=((1, 0), (1, 2), (-1, -1)), max_cones=((0, 1), (1, 2), (0, 2)))
	report = fu.validate_fan(fan)
	assert report.well_formed
	assert not report.smooth
	assert report.complete
	assert report.defects[0].cone == 0
	assert "determinant 2" in str(report.defects[0])


@pytest.mark.parametrize("rays, cones", [
	(((2, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2))),
	(((1, 0), (1, 0), (-1, -1)), ((0, 1), (1, 2), (0, 2))),
	(((1, 0), (0, 1), (-1, -1)), ((0, 1, 2),)),
	(((1, 0), (0, 1), (-1, -1)), ((0, 1), (1, 5))),
	(((1, 0, 0), (0, 1), (-1, -1)), ((0, 1), (1, 2), (0, 2))),
])
def test_validate_malformed(rays, cones):
	report = fu.validate_fan(fu.Fan(dim=2, rays=rays, max_cones=cones))
	assert not report.well_formed
	assert not report.ok


def test_enumerate_walls_p2():
	walls = fu.enumerate_walls(P2)
	assert [w.rays for w in walls] == [(0,), (1,), (2,)]
	assert walls[0].adjacent == (0, 2)
	assert walls[0].extra_rays == (1, 2)


def test_enumerate_walls_incomplete():
	fan = fu.Fan(dim=2, rays=P2.rays, max_cones=((0, 1), (1, 2)))
	with pytest.raises(CompletenessError):
		fu.enumerate_walls(fan)


@pytest.mark.parametrize("fan", [
	P2,
	fu.Fan(dim=2, rays=P2.rays, max_cones=((0, 1), (1, 2))),
	fu.Fan(dim=2, rays=((1, 0), (1, 2), (-1, -1)), max_cones=((0, 1), (1, 2), (0, 2))),
	projective_space(3),
	hirzebruch(2),
])
def test_validate_is_repeatable(fan):
	first = fu.validate_fan(fan)
	assert fu.validate_fan(fan) == first
	assert fu.validate_fan(fan).to_dict() == first.to_dict()
