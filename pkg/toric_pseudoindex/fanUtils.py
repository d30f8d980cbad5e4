"""
Fans of smooth complete toric varieties: lattice vectors, structural validation and walls.

A fan is stored as its dimension, its primitive ray generators (in input order) and its
maximal cones (ray-index tuples). Lower-dimensional cones are never stored; they are subsets
of maximal cones.
"""
import logging
import math
import random
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from . import matrixUtils as mu
from . import packageConfig
from .decorators import time_function
from .exceptions import CompletenessError

LatticeVector = Tuple[int, ...]
Cone = Tuple[int, ...]


def primitive_vector(v: Sequence[int]) -> LatticeVector:
	"""
	Divide a nonzero lattice vector by the gcd of its entries.

	:param v: The lattice vector
	:return: The primitive vector pointing in the same direction
	:raises ValueError: If v is the zero vector
	"""
	if not any(v):
		raise ValueError("The zero vector has no primitive generator")
	g = math.gcd(*v)
	return tuple(x // g for x in v)


@dataclass(frozen=True)
class Fan:
	dim: int
	rays: Tuple[LatticeVector, ...]
	max_cones: Tuple[Cone, ...]

	def __post_init__(self):
		object.__setattr__(self, "rays", tuple(tuple(r) for r in self.rays))
		object.__setattr__(self, "max_cones", tuple(tuple(sorted(c)) for c in self.max_cones))

	@cached_property
	def _hash(self) -> int:
		return hash((self.dim, self.rays, self.max_cones))

	def __hash__(self):
		return self._hash

	@property
	def n_rays(self) -> int:
		return len(self.rays)

	@property
	def n_cones(self) -> int:
		return len(self.max_cones)

	def cone_rays(self, cone_index: int) -> list:
		return [self.rays[i] for i in self.max_cones[cone_index]]

	def cones_containing(self, sigma: Iterable[int]) -> list:
		"""
		Indices of the maximal cones that have sigma as a face.
		"""
		sigma = set(sigma)
		return [idx for idx, cone in enumerate(self.max_cones) if sigma.issubset(cone)]

	def is_cone(self, sigma: Iterable[int]) -> bool:
		return bool(self.cones_containing(sigma))


@dataclass(frozen=True)
class Wall:
	"""
	A codimension-one cone shared by two maximal cones. extra_rays[k] completes adjacent[k].
	"""
	rays: Cone
	adjacent: Tuple[int, int]
	extra_rays: Tuple[int, int]


@dataclass(frozen=True)
class Defect:
	cone: Optional[int]
	reason: str

	def __str__(self):
		if self.cone is None:
			return self.reason
		return f"cone {self.cone}: {self.reason}"


@dataclass(frozen=True)
class ValidationReport:
	well_formed: bool
	smooth: bool
	complete: bool
	defects: Tuple[Defect, ...]

	@property
	def ok(self) -> bool:
		return self.well_formed and self.smooth and self.complete

	def to_dict(self) -> dict:
		return {
			"well_formed": self.well_formed,
			"smooth": self.smooth,
			"complete": self.complete,
			"defects": [{"cone": d.cone, "reason": d.reason} for d in self.defects],
		}


def _well_formed_defects(fan: Fan) -> list:
	if not isinstance(fan.dim, int) or fan.dim < 1:
		return [Defect(None, f"dimension must be a positive integer, got {fan.dim!r}")]

	defects = []
	seen = {}
	for idx, ray in enumerate(fan.rays):
		if len(ray) != fan.dim:
			defects.append(Defect(None, f"ray {idx} has {len(ray)} coordinates, expected {fan.dim}"))
			continue
		if not any(ray):
			defects.append(Defect(None, f"ray {idx} is the zero vector"))
			continue
		if primitive_vector(ray) != ray:
			defects.append(Defect(None, f"ray {idx} {list(ray)} is not primitive"))
		if ray in seen:
			defects.append(Defect(None, f"ray {idx} duplicates ray {seen[ray]}"))
		seen.setdefault(ray, idx)

	used = set()
	seen_cones = {}
	for idx, cone in enumerate(fan.max_cones):
		if len(set(cone)) != len(cone):
			defects.append(Defect(idx, "repeated ray index"))
		if len(cone) != fan.dim:
			defects.append(Defect(idx, f"has {len(cone)} rays, expected {fan.dim}"))
		bad = [i for i in cone if not 0 <= i < fan.n_rays]
		if bad:
			defects.append(Defect(idx, f"ray indices out of range: {bad}"))
		if cone in seen_cones:
			defects.append(Defect(idx, f"duplicates cone {seen_cones[cone]}"))
		seen_cones.setdefault(cone, idx)
		used.update(cone)

	unused = sorted(set(range(fan.n_rays)) - used)
	if unused:
		defects.append(Defect(None, f"rays not used by any maximal cone: {unused}"))
	if not fan.max_cones:
		defects.append(Defect(None, "fan has no maximal cones"))
	return defects


def _facet_owners(fan: Fan) -> dict:
	facets = defaultdict(list)
	for idx, cone in enumerate(fan.max_cones):
		for omitted in cone:
			facets[tuple(r for r in cone if r != omitted)].append((idx, omitted))
	return facets


def _wall_defects(fan: Fan) -> list:
	defects = []
	for facet, owners in sorted(_facet_owners(fan).items()):
		if len(owners) != 2:
			defects.append(Defect(owners[0][0], f"wall {list(facet)} lies in {len(owners)} maximal cone(s)"))
	return defects


def _sample_points(dim: int, seed: int, samples: int) -> list:
	rng = random.Random(seed)
	r = packageConfig.SAMPLE_COORD_RANGE
	return [[rng.randint(-r, r) for _ in range(dim)] for _ in range(samples)]


def _point_location_defects(fan: Fan, adjugates: list, seed: int, samples: int) -> list:
	"""
	Locate seeded integer points (rational points cleared of denominators) in the maximal cones.
	A point p lies in a cone with ray matrix B iff sign(det B) * (p . adj B) >= 0 coordinatewise.
	"""
	points = _sample_points(fan.dim, seed, samples)
	remaining = list(range(samples))
	for adj, det in adjugates:
		if adj is None or not remaining:
			continue
		sign = 1 if det > 0 else -1
		coords = mu.row_times([points[i] for i in remaining], adj)
		remaining = [i for i, row in zip(remaining, coords) if any(sign * c < 0 for c in row)]

	if remaining:
		return [Defect(None, f"{len(remaining)} of {samples} sample points lie in no maximal cone "
							 f"(first: {points[remaining[0]]})")]
	return []


@time_function
def validate_fan(fan: Fan, seed: int = packageConfig.DEFAULT_SEED,
				 samples: int = packageConfig.COMPLETENESS_SAMPLES) -> ValidationReport:
	"""
	Check a candidate fan for well-formedness, smoothness and completeness. Never raises:
	every problem ends up in the report's defect list.

	Completeness is certified by the pseudo-manifold condition (every wall in exactly two
	maximal cones) plus exact location of a seeded sample of points.

	:param fan: The candidate fan
	:param seed: Seed of the point sample
	:param samples: Number of sample points (0 skips point location)
	:return: A ValidationReport
	"""
	defects = _well_formed_defects(fan)
	if defects:
		logging.info(f"Fan is not well formed: {len(defects)} defect(s)")
		return ValidationReport(False, False, False, tuple(defects))

	smooth_defects = []
	adjugates = []
	for idx in range(fan.n_cones):
		adj, det = mu.adjugate(fan.cone_rays(idx))
		adjugates.append((adj, det))
		if abs(det) != 1:
			smooth_defects.append(Defect(idx, f"determinant {det}, cone is not unimodular"))

	complete_defects = _wall_defects(fan)
	if samples > 0:
		complete_defects += _point_location_defects(fan, adjugates, seed, samples)

	report = ValidationReport(
		well_formed=True,
		smooth=not smooth_defects,
		complete=not complete_defects,
		defects=tuple(smooth_defects + complete_defects),
	)
	logging.info(f"Validated fan (dim {fan.dim}, {fan.n_rays} rays, {fan.n_cones} cones): "
				 f"smooth={report.smooth} complete={report.complete}")
	return report


@lru_cache(maxsize=64)
def enumerate_walls(fan: Fan) -> Tuple[Wall, ...]:
	"""
	All walls of a complete fan, in ascending order of their ray tuples.

	:raises CompletenessError: If some wall does not lie in exactly two maximal cones
	"""
	walls = []
	for facet, owners in sorted(_facet_owners(fan).items()):
		if len(owners) != 2:
			raise CompletenessError(f"Wall {list(facet)} lies in {len(owners)} maximal cone(s); fan is not complete")
		(c0, u0), (c1, u1) = sorted(owners)
		walls.append(Wall(rays=facet, adjacent=(c0, c1), extra_rays=(u0, u1)))
	return tuple(walls)
