import pytest
from toric_pseudoindex import matrixUtils as mu


@pytest.mark.parametrize("rows, expected", [
	([[1, 0], [0, 1]], 1),
	([[2, 1], [1, 1]], 1),
	([[1, 2], [3, 4]], -2),
	([[1, 2], [2, 4]], 0),
])
def test_adjugate_determinant(rows, expected):
	assert mu.adjugate(rows)[1] == expected


def test_adjugate():
	adj, det = mu.adjugate([[1, 2], [3, 4]])
	assert det == -2
	assert mu.to_int_rows(adj) == [[4, -2], [-3, 1]]


def test_adjugate_singular():
	assert mu.adjugate([[1, 2], [2, 4]]) == (None, 0)


def test_unimodular_inverse():
	inv = mu.unimodular_inverse([[2, 1], [1, 1]])
	assert mu.to_int_rows(inv) == [[1, -1], [-1, 2]]


def test_unimodular_inverse_rejects_det_2():
	with pytest.raises(ValueError):
		mu.unimodular_inverse([[2, 0], [0, 1]])


def test_smith_invariants():
	assert mu.smith_invariants([[2, 0], [0, 3]]) == [1, 6]
	# P^2 rays with a column of ones appended: cokernel Z/3
	assert mu.smith_invariants([[1, 0, 1], [0, 1, 1], [-1, -1, 1]]) == [1, 1, 3]


def test_solve_in_basis():
	inv = mu.unimodular_inverse([[1, 1], [0, 1]])
	# (3, 5) = 3 * (1, 1) + 2 * (0, 1)
	assert mu.solve_in_basis([3, 5], inv) == [3, 2]


def test_row_times():
	inv = mu.unimodular_inverse([[1, 0], [0, 1]])
	assert mu.row_times([[1, 2], [3, 4]], inv) == [[1, 2], [3, 4]]
