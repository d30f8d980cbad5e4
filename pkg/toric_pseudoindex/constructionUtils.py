"""
Fans of the varieties studied here: projective spaces, products, projectivized split bundles over
products of projective spaces, and blow-ups along invariant centers (star subdivisions).

P(E) is the projective space of lines of E. For a bundle O(t_0) + ... + O(t_k) over a product of
projective spaces, fiber ray f_j belongs to summand j (homogeneous fiber coordinate x_j), with
f_0 = -(f_1 + ... + f_k), and the minus-sum ray of base factor l lifts to
-(sum of that factor's basis vectors) - sum_j twists[j][l] * f_j.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, product as cartesian
from typing import Iterable, Tuple

from .exceptions import (BundleSpecError, CenterError, DivisorialCenterError, DivisorMismatchError,
						 FanStructureError, ToricError)
from .fanUtils import Cone, Fan, Wall, enumerate_walls, primitive_vector
from .invariantUtils import ToricDivisor


@dataclass(frozen=True)
class BundleSpec:
	base_dims: Tuple[int, ...]
	twists: Tuple[Tuple[int, ...], ...]

	def __post_init__(self):
		object.__setattr__(self, "base_dims", tuple(self.base_dims))
		object.__setattr__(self, "twists", tuple(tuple(row) for row in self.twists))

	@property
	def fiber_rank(self) -> int:
		return len(self.twists)

	@property
	def dim(self) -> int:
		return sum(self.base_dims) + self.fiber_rank - 1

	def validate(self):
		"""
		:raises BundleSpecError: If the spec violates the normalization or shape rules
		"""
		if not self.base_dims or any(not isinstance(a, int) or a < 1 for a in self.base_dims):
			raise BundleSpecError(f"base_dims must be positive integers, got {list(self.base_dims)}")
		if self.fiber_rank < 2:
			raise BundleSpecError(f"fiber rank must be at least 2, got {self.fiber_rank}")
		for j, row in enumerate(self.twists):
			if len(row) != len(self.base_dims):
				raise BundleSpecError(f"twist row {j} has {len(row)} entries, expected {len(self.base_dims)}")
		if any(self.twists[0]):
			raise BundleSpecError("twist row 0 must be zero (P(E) is normalized by its first summand)")

	def fiber_ray_index(self, summand: int) -> int:
		return sum(a + 1 for a in self.base_dims) + summand

	def to_dict(self) -> dict:
		return {"base_dims": list(self.base_dims), "twists": [list(row) for row in self.twists]}


@dataclass(frozen=True)
class BlowupResult:
	fan_x: Fan
	e_ray: int
	center: Cone
	source: Fan

	@property
	def codim(self) -> int:
		return len(self.center)

	@property
	def dim_z(self) -> int:
		return self.source.dim - self.codim

	@property
	def discrepancy(self) -> int:
		"""
		Coefficient n - dim(Z) - 1 of E in K_X - pi^*K_Y.
		"""
		return self.codim - 1


def projective_space(n: int) -> Fan:
	if not isinstance(n, int) or n < 1:
		raise ToricError(f"Projective space needs a positive dimension, got {n!r}")
	rays = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
	rays.append(tuple([-1] * n))
	return Fan(dim=n, rays=tuple(rays), max_cones=tuple(combinations(range(n + 1), n)))


def product(f: Fan, g: Fan) -> Fan:
	"""
	Fan of the product variety: rays in block direct sum, maximal cones are unions of cone pairs.
	"""
	if f.dim < 1 or g.dim < 1:
		raise ToricError(f"Product factors need positive dimension, got {f.dim} and {g.dim}")
	rays = [tuple(r) + (0,) * g.dim for r in f.rays]
	rays += [(0,) * f.dim + tuple(r) for r in g.rays]
	shift = f.n_rays
	cones = [tuple(cf) + tuple(shift + i for i in cg) for cf in f.max_cones for cg in g.max_cones]
	return Fan(dim=f.dim + g.dim, rays=tuple(rays), max_cones=tuple(cones))


def _fiber_vector(summand: int, dim: int, fiber_offset: int, k: int) -> list:
	v = [0] * dim
	if summand == 0:
		for j in range(k):
			v[fiber_offset + j] = -1
	else:
		v[fiber_offset + summand - 1] = 1
	return v


def projectivized_split_bundle(spec: BundleSpec) -> Fan:
	"""
	Fan of P(O(t_0) + ... + O(t_k)) over P^a_1 x ... x P^a_t.

	Rays: for each base factor its standard basis vectors then its lifted minus-sum ray, followed by
	the fiber rays f_0, ..., f_k. Maximal cones omit one ray per base factor and one fiber ray.

	:param spec: The bundle description
	:return: A smooth complete fan with prod(a_l + 1) * (k + 1) maximal cones
	"""
	spec.validate()
	k = spec.fiber_rank - 1
	dim = spec.dim
	fiber_offset = sum(spec.base_dims)
	fibers = [_fiber_vector(j, dim, fiber_offset, k) for j in range(k + 1)]

	rays = []
	blocks = []
	offset = 0
	for factor, a in enumerate(spec.base_dims):
		block = []
		for i in range(a):
			v = [0] * dim
			v[offset + i] = 1
			block.append(len(rays))
			rays.append(tuple(v))
		w = [0] * dim
		for i in range(a):
			w[offset + i] = -1
		for j in range(k + 1):
			t = spec.twists[j][factor]
			w = [wi - t * fj for wi, fj in zip(w, fibers[j])]
		block.append(len(rays))
		rays.append(tuple(w))
		blocks.append(block)
		offset += a

	fiber_block = list(range(len(rays), len(rays) + k + 1))
	rays.extend(tuple(f) for f in fibers)

	cones = []
	for omitted in cartesian(*blocks, fiber_block):
		skip = set(omitted)
		cones.append(tuple(i for i in range(len(rays)) if i not in skip))

	logging.debug(f"Built bundle fan {spec.to_dict()}: dim {dim}, {len(rays)} rays, {len(cones)} cones")
	return Fan(dim=dim, rays=tuple(rays), max_cones=tuple(cones))


def subbundle_center_cone(spec: BundleSpec, dropped_summands: Iterable[int]) -> Cone:
	"""
	Cone whose orbit closure is Z = P(F), F the sum of the summands that are NOT dropped.
	The dropped summands' fiber coordinates vanish on Z, so codim(Z) = number of dropped summands.

	:raises CenterError: If the dropped set is empty, everything, or out of range
	"""
	dropped = sorted(set(dropped_summands))
	if not dropped:
		raise CenterError("No summand dropped: Z would be all of P(E)")
	if len(dropped) >= spec.fiber_rank:
		raise CenterError("Every summand dropped: Z would be empty")
	if dropped[0] < 0 or dropped[-1] >= spec.fiber_rank:
		raise CenterError(f"Summand indices {dropped} out of range 0..{spec.fiber_rank - 1}")
	return tuple(spec.fiber_ray_index(j) for j in dropped)


def star_subdivision(fan: Fan, sigma: Iterable[int]) -> BlowupResult:
	"""
	Blow up the orbit closure V(sigma) by inserting the ray sum(sigma) and splitting every maximal cone
	that contains sigma into dim(sigma) cones.

	:param fan: A smooth complete fan
	:param sigma: Ray indices of the center cone
	:return: The BlowupResult, new ray appended last
	:raises CenterError: If sigma is not a cone of the fan
	:raises DivisorialCenterError: If sigma is a single ray
	"""
	center = tuple(sorted(set(sigma)))
	if not center:
		raise CenterError("Empty center cone")
	if any(not 0 <= i < fan.n_rays for i in center):
		raise CenterError(f"Center {list(center)} references rays outside 0..{fan.n_rays - 1}")
	containing = set(fan.cones_containing(center))
	if not containing:
		raise CenterError(f"Center {list(center)} is not a face of any maximal cone")
	if len(center) < 2:
		raise DivisorialCenterError(f"Center {list(center)} is a ray: divisorial center, the blow-up is trivial")

	new_ray = tuple(sum(fan.rays[i][c] for i in center) for c in range(fan.dim))
	if not any(new_ray) or primitive_vector(new_ray) != new_ray or new_ray in fan.rays:
		raise FanStructureError(f"Center {list(center)} is not a smooth cone (sum {list(new_ray)})")

	e = fan.n_rays
	cones = []
	for idx, cone in enumerate(fan.max_cones):
		if idx in containing:
			cones.extend(tuple(sorted([r for r in cone if r != g] + [e])) for g in center)
		else:
			cones.append(cone)

	fan_x = Fan(dim=fan.dim, rays=fan.rays + (new_ray,), max_cones=tuple(cones))
	logging.debug(f"Star subdivision at {list(center)}: {fan.n_cones} -> {fan_x.n_cones} cones")
	return BlowupResult(fan_x=fan_x, e_ray=e, center=center, source=fan)


def pullback_divisor(b: BlowupResult, d: ToricDivisor) -> ToricDivisor:
	"""
	Pull back a divisor along the blow-down: old coefficients are kept, the exceptional ray gets the
	sum of the coefficients over the center (the support function is linear on cones containing sigma).

	:raises DivisorMismatchError: If d is not a divisor on b.source
	"""
	if len(d.coeffs) != b.source.n_rays:
		raise DivisorMismatchError(f"Divisor has {len(d.coeffs)} coefficients, source fan has {b.source.n_rays} rays")
	return ToricDivisor(d.coeffs + (sum(d.coeffs[i] for i in b.center),))


def exceptional_divisor(b: BlowupResult) -> ToricDivisor:
	return ToricDivisor.prime(b.fan_x, b.e_ray)


def exceptional_fiber_walls(b: BlowupResult) -> Tuple[Wall, ...]:
	"""
	Walls whose invariant curve is a line in a fiber P^(codim-1) of E -> Z.
	"""
	center = set(b.center)
	found = []
	for wall in enumerate_walls(b.fan_x):
		extras = set(wall.extra_rays)
		if b.e_ray in wall.rays and extras <= center and (center - extras) <= set(wall.rays):
			found.append(wall)
	return tuple(found)


def hirzebruch(a: int) -> Fan:
	"""
	Hirzebruch surface F_a with rays (1,0), (0,1), (-1,a), (0,-1).
	"""
	rays = ((1, 0), (0, 1), (-1, a), (0, -1))
	return Fan(dim=2, rays=rays, max_cones=((0, 1), (1, 2), (2, 3), (0, 3)))


def small_fano_fan(name: str) -> Fan:
	"""
	A few small Fano fans by name: P1..P4, F1, BlptP3.
	"""
	if name.startswith("P") and name[1:].isdigit():
		return projective_space(int(name[1:]))
	if name == "F1":
		return hirzebruch(1)
	if name == "BlptP3":
		return star_subdivision(projective_space(3), (0, 1, 2)).fan_x
	raise ToricError(f"Unknown fan name {name!r}")


def linear_center(n: int, k: int) -> Cone:
	"""
	Cone of the coordinate subspace P^k in the standard fan of P^n: the first n - k rays.

	:raises DivisorialCenterError: If k = n - 1
	:raises CenterError: If k is negative or k >= n
	"""
	if k == n - 1:
		raise DivisorialCenterError(f"Linear center P^{k} in P^{n} is a divisor")
	if not 0 <= k < n:
		raise CenterError(f"Linear center P^{k} in P^{n} needs 0 <= k <= n - 2")
	return tuple(range(n - k))

