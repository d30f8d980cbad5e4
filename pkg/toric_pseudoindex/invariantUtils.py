"""
Wall relations, intersection degrees and the Fano invariants of smooth complete toric varieties.

Ampleness of -K is tested by strict positivity on the torus-invariant curves (one per wall),
which is Kleiman's criterion for the projective fans built in this package. The pseudo-index is
taken as the minimum -K degree over those invariant curves; no attempt is made to certify that
the minimum over all rational curves is attained there for arbitrary input fans.
"""
import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from . import matrixUtils as mu
from .exceptions import DivisorMismatchError, FanStructureError, NotFanoError
from .fanUtils import Fan, Wall, enumerate_walls


@dataclass(frozen=True)
class WallRelation:
	"""
	u + u' + sum(coeffs[i] * v_i) = 0, with (u, u') = wall.extra_rays and v_i = wall.rays[i].
	"""
	wall: Wall
	coeffs: Tuple[int, ...]


@dataclass(frozen=True)
class ToricDivisor:
	coeffs: Tuple[int, ...]

	def __post_init__(self):
		object.__setattr__(self, "coeffs", tuple(self.coeffs))

	def __add__(self, other: "ToricDivisor") -> "ToricDivisor":
		if len(other.coeffs) != len(self.coeffs):
			raise DivisorMismatchError(f"Cannot add divisors on {len(self.coeffs)} and {len(other.coeffs)} rays")
		return ToricDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

	def scaled(self, k: int) -> "ToricDivisor":
		return ToricDivisor(tuple(k * c for c in self.coeffs))

	@classmethod
	def anticanonical(cls, fan: Fan) -> "ToricDivisor":
		return cls((1,) * fan.n_rays)

	@classmethod
	def zero(cls, fan: Fan) -> "ToricDivisor":
		return cls((0,) * fan.n_rays)

	@classmethod
	def prime(cls, fan: Fan, ray: int) -> "ToricDivisor":
		return cls(tuple(1 if i == ray else 0 for i in range(fan.n_rays)))


@dataclass(frozen=True)
class FanoReport:
	is_fano: bool
	pseudo_index: Optional[int]
	fano_index: Optional[int]
	picard_rank: int
	dim: int
	n_rays: int
	n_cones: int
	min_walls: Tuple[Tuple[int, ...], ...]
	wall_degrees: Tuple[Tuple[int, int], ...]

	@property
	def min_degree(self) -> int:
		return self.wall_degrees[0][0]

	@property
	def wall_degree_multiset(self) -> Dict[int, int]:
		return dict(self.wall_degrees)

	def signature(self) -> tuple:
		"""
		Invariants compared in place of a fan isomorphism test: dimension, Picard rank,
		wall-degree multiset, ray and cone counts, pseudo-index and index.
		"""
		return (self.dim, self.picard_rank, self.wall_degrees, self.n_rays, self.n_cones,
				self.pseudo_index, self.fano_index)

	def to_dict(self) -> dict:
		return {
			"is_fano": self.is_fano,
			"pseudo_index": self.pseudo_index,
			"fano_index": self.fano_index,
			"picard_rank": self.picard_rank,
			"wall_degrees": {str(d): c for d, c in self.wall_degrees},
			"min_walls": [list(w) for w in self.min_walls],
		}


def _relation_from_coordinates(fan: Fan, wall: Wall, cone_coords: Dict[int, int]) -> WallRelation:
	u = wall.extra_rays[0]
	if cone_coords[u] != -1:
		raise FanStructureError(f"Wall {list(wall.rays)}: coefficient of ray {u} is {cone_coords[u]}, expected -1; "
								f"the fan is not a smooth convex fan at this wall")
	return WallRelation(wall=wall, coeffs=tuple(-cone_coords[v] for v in wall.rays))


def _cone_inverse(fan: Fan, cone_index: int):
	try:
		return mu.unimodular_inverse(fan.cone_rays(cone_index))
	except ValueError as e:
		raise FanStructureError(f"Maximal cone {cone_index} is not smooth: {e}") from e


def wall_relation(fan: Fan, wall: Wall) -> WallRelation:
	"""
	The integer relation u + u' + sum a_i v_i = 0 around a wall. Expresses u' in the lattice basis of
	the first adjacent cone; the coefficient of u has to be -1.

	:param fan: A smooth complete fan
	:param wall: A wall from enumerate_walls(fan)
	:return: The WallRelation
	"""
	cone = fan.max_cones[wall.adjacent[0]]
	coords = mu.solve_in_basis(fan.rays[wall.extra_rays[1]], _cone_inverse(fan, wall.adjacent[0]))
	return _relation_from_coordinates(fan, wall, dict(zip(cone, coords)))


@lru_cache(maxsize=64)
def wall_relations(fan: Fan) -> Tuple[WallRelation, ...]:
	"""
	Relations of all walls, in enumerate_walls order. One basis inverse and one matrix
	product per maximal cone.
	"""
	walls = enumerate_walls(fan)
	by_cone = defaultdict(list)
	for pos, wall in enumerate(walls):
		by_cone[wall.adjacent[0]].append(pos)

	relations = [None] * len(walls)
	for cone_index in sorted(by_cone):
		positions = by_cone[cone_index]
		targets = [fan.rays[walls[p].extra_rays[1]] for p in positions]
		rows = mu.row_times(targets, _cone_inverse(fan, cone_index))
		cone = fan.max_cones[cone_index]
		for p, row in zip(positions, rows):
			relations[p] = _relation_from_coordinates(fan, walls[p], dict(zip(cone, row)))
	return tuple(relations)


def _relation_for(fan: Fan, wall: Wall) -> WallRelation:
	return _relation_index(fan).get(wall) or wall_relation(fan, wall)


@lru_cache(maxsize=64)
def _relation_index(fan: Fan) -> Dict[Wall, WallRelation]:
	return {rel.wall: rel for rel in wall_relations(fan)}


def anticanonical_degree(fan: Fan, wall: Wall) -> int:
	"""
	-K . C_w = 2 + sum of the wall relation coefficients.
	"""
	return 2 + sum(_relation_for(fan, wall).coeffs)


def divisor_degree(fan: Fan, divisor: ToricDivisor, wall: Wall) -> int:
	"""
	Intersection number D . C_w = c_u + c_u' + sum a_i c_{v_i}.

	:raises DivisorMismatchError: If the divisor has the wrong number of coefficients
	"""
	if len(divisor.coeffs) != fan.n_rays:
		raise DivisorMismatchError(f"Divisor has {len(divisor.coeffs)} coefficients, fan has {fan.n_rays} rays")
	rel = _relation_for(fan, wall)
	c = divisor.coeffs
	u, u_prime = wall.extra_rays
	return c[u] + c[u_prime] + sum(a * c[v] for a, v in zip(rel.coeffs, wall.rays))


def wall_degrees(fan: Fan) -> Tuple[Tuple[Wall, int], ...]:
	return tuple((rel.wall, 2 + sum(rel.coeffs)) for rel in wall_relations(fan))


def is_fano(fan: Fan) -> bool:
	return all(degree > 0 for _, degree in wall_degrees(fan))


def _minimum(fan: Fan) -> Tuple[int, tuple]:
	degrees = wall_degrees(fan)
	low = min(d for _, d in degrees)
	return low, tuple(w for w, d in degrees if d == low)


def pseudo_index(fan: Fan) -> int:
	"""
	Minimal anticanonical degree over the invariant curves.

	:raises NotFanoError: If -K is not positive on every invariant curve
	"""
	low, _ = _minimum(fan)
	if low <= 0:
		raise NotFanoError(f"Fan is not Fano (a wall has anticanonical degree {low})")
	return low


def minimizing_walls(fan: Fan) -> Tuple[Wall, ...]:
	return _minimum(fan)[1]


def picard_rank(fan: Fan) -> int:
	return fan.n_rays - fan.dim


def fano_index(fan: Fan) -> int:
	"""
	Largest m such that -K is m-divisible in Pic. With A the ray matrix, Z^rays / im(A) is free
	for a complete smooth fan, so the Smith normal form of [A | 1] has invariant factors 1, ..., 1, r.

	:raises NotFanoError: For non-Fano input
	"""
	if not is_fano(fan):
		raise NotFanoError("Fano index requested for a fan that is not Fano")
	augmented = [list(ray) + [1] for ray in fan.rays]
	index = 1
	for factor in mu.smith_invariants(augmented):
		if factor:
			index *= factor
	return index


def fano_report(fan: Fan) -> FanoReport:
	"""
	Bundle every invariant of a smooth complete fan. For non-Fano fans, pseudo_index and
	fano_index are None and the wall degrees (and their minimum) are still reported.
	"""
	degrees = wall_degrees(fan)
	counts = Counter(d for _, d in degrees)
	low = min(counts)
	fano = low > 0
	report = FanoReport(
		is_fano=fano,
		pseudo_index=low if fano else None,
		fano_index=fano_index(fan) if fano else None,
		picard_rank=picard_rank(fan),
		dim=fan.dim,
		n_rays=fan.n_rays,
		n_cones=fan.n_cones,
		min_walls=tuple(w.rays for w, d in degrees if d == low),
		wall_degrees=tuple(sorted(counts.items())),
	)
	logging.debug(f"Fano report: fano={report.is_fano} i={report.pseudo_index} r={report.fano_index} "
				  f"rho={report.picard_rank}")
	return report
