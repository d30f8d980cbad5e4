"""
Exact integer linear algebra on top of python-flint.

Matrices enter and leave as nested sequences of Python ints. Basis inverses
are handed out as opaque fmpz_mat values so callers can reuse them.
"""
from typing import Sequence

from flint import fmpz_mat

IntRows = Sequence[Sequence[int]]


def _to_int(x) -> int:
	"""
	Convert an fmpz / fmpq entry to a Python int. Raises if the entry is a proper fraction.
	"""
	if hasattr(x, "denom"):
		if int(x.denom()) != 1:
			raise ValueError(f"Expected an integral value, got {x}")
		return int(x.numer())
	return int(x)


def to_int_rows(m) -> list:
	return [[_to_int(m[i, j]) for j in range(m.ncols())] for i in range(m.nrows())]


def adjugate(rows: IntRows) -> tuple:
	"""
	Adjugate of a nonsingular integer matrix, so that rows * adj = det * identity.

	:param rows: A square integer matrix
	:return: (adj, det) with adj an fmpz_mat and det a Python int, or (None, 0) if singular
	"""
	m = fmpz_mat([list(r) for r in rows])
	det = int(m.det())
	if det == 0:
		return None, 0
	inverse = m.inv()
	n = m.nrows()
	adj = fmpz_mat([[_to_int(inverse[i, j] * det) for j in range(n)] for i in range(n)])
	return adj, det


def unimodular_inverse(rows: IntRows) -> fmpz_mat:
	"""
	Integer inverse of a unimodular matrix.

	:raises ValueError: If the determinant is not +1 or -1
	"""
	adj, det = adjugate(rows)
	if det not in (1, -1):
		raise ValueError(f"Matrix is not unimodular (determinant {det})")
	return adj * det


def row_times(vectors: IntRows, m: fmpz_mat) -> list:
	"""
	Multiply a stack of row vectors by a flint matrix.

	:return: The product as nested Python int lists
	"""
	return to_int_rows(fmpz_mat([list(v) for v in vectors]) * m)


def smith_invariants(rows: IntRows) -> list:
	"""
	Diagonal of the Smith normal form, absolute values, zeros included.
	"""
	snf = fmpz_mat([list(r) for r in rows]).snf()
	return [abs(int(snf[i, i])) for i in range(min(snf.nrows(), snf.ncols()))]


def solve_in_basis(vector: Sequence[int], basis_inverse: fmpz_mat) -> list:
	"""
	Coordinates of an integer vector in a lattice basis, given the basis inverse.
	"""
	return row_times([vector], basis_inverse)[0]

