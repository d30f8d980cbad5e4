"""
Deterministic catalog of blow-up pairs: the (Y_n, X_n) pairs, the four-parameter bundle family and
blow-ups of projective spaces along coordinate subspaces.
"""
import logging
import multiprocessing as mp
from dataclasses import dataclass
from functools import partial
from typing import Optional, Sequence, Tuple

from . import helperUtils as hu
from . import packageConfig
from .decorators import time_function
from .exceptions import ToricError
from .fanUtils import validate_fan
from .invariantUtils import FanoReport
from .pairUtils import (IdentityRecord, Theorem1Verdict, analyze_pair, build_family_pair, build_linear_pair,
						build_prop1_pair, theorem1_verdict)

_PAIR_BUILDERS = {
	"prop1": build_prop1_pair,
	"family": build_family_pair,
	"linear": build_linear_pair,
}


@dataclass(frozen=True)
class CatalogLimits:
	m_max: int = packageConfig.DEFAULT_CATALOG_LIMITS['m_max']
	max_param: int = packageConfig.DEFAULT_CATALOG_LIMITS['max_param']
	n_max: int = packageConfig.DEFAULT_CATALOG_LIMITS['n_max']
	max_entries: Optional[int] = None

	def __post_init__(self):
		for name in ("m_max", "max_param", "n_max"):
			if getattr(self, name) < 0:
				raise ToricError(f"Catalog limit {name} must be nonnegative, got {getattr(self, name)}")
		if self.max_entries is not None and self.max_entries < 1:
			raise ToricError(f"max_entries must be at least 1, got {self.max_entries}")

	@classmethod
	def from_text(cls, text: str) -> "CatalogLimits":
		"""
		Parses 'M,P,N' ((Y_n, X_n) m_max, family max_param, linear n_max).
		"""
		values = hu.parse_int_list(text)
		if len(values) != 3:
			raise ValueError(f"Catalog limits take three integers M,P,N, got {text!r}")
		return cls(m_max=values[0], max_param=values[1], n_max=values[2])


@dataclass(frozen=True)
class CatalogTask:
	label: str
	kind: str
	params: Tuple[Tuple[str, int], ...]


@dataclass(frozen=True)
class CatalogEntry:
	label: str
	kind: str
	params: Tuple[Tuple[str, int], ...]
	n: int
	dim_z: int
	report_y: FanoReport
	report_x: FanoReport
	identities: IdentityRecord
	theorem_flags: Theorem1Verdict
	validated: Optional[bool] = None

	@property
	def param_dict(self) -> dict:
		return dict(self.params)

	@property
	def both_fano(self) -> bool:
		return self.report_y.is_fano and self.report_x.is_fano

	def to_dict(self) -> dict:
		return {
			"label": self.label,
			"kind": self.kind,
			"params": self.param_dict,
			"n": self.n,
			"dim_z": self.dim_z,
			"report_y": self.report_y.to_dict(),
			"report_x": self.report_x.to_dict(),
			"shape_y": [self.report_y.n_rays, self.report_y.n_cones],
			"shape_x": [self.report_x.n_rays, self.report_x.n_cones],
			"identities": self.identities.to_dict(),
			"theorem_flags": self.theorem_flags.to_dict(),
			"validated": self.validated,
		}


@dataclass(frozen=True)
class Catalog:
	entries: Tuple[CatalogEntry, ...]
	truncated: bool
	limits: CatalogLimits

	def of_kind(self, kind: str) -> Tuple[CatalogEntry, ...]:
		return tuple(e for e in self.entries if e.kind == kind)


def make_task(kind: str, **params) -> CatalogTask:
	return CatalogTask(label=hu.make_label(kind, **params), kind=kind, params=tuple(params.items()))


def prop1_tasks(m_max: int) -> list:
	return [make_task("prop1", m=m) for m in range(2, m_max + 1)]


def family_tasks(max_param: int) -> list:
	rng = range(1, max_param + 1)
	return [make_task("family", a=a, d=d, r=r, s=s)
			for a in rng for d in rng for r in range(2, max_param + 1) for s in rng]


def linear_tasks(n_max: int) -> list:
	return [make_task("linear", n=n, k=k) for n in range(2, n_max + 1) for k in range(0, n - 1)]


def catalog_tasks(limits: CatalogLimits) -> list:
	"""
	Every task for the given limits, duplicate-free and sorted by label.
	"""
	tasks = {t.label: t for t in prop1_tasks(limits.m_max) + family_tasks(limits.max_param) + linear_tasks(limits.n_max)}
	return [tasks[label] for label in sorted(tasks)]


def build_entry(task: CatalogTask, validate: bool = False) -> CatalogEntry:
	"""
	Construct the pair of a task, blow it up and record reports, identities and theorem flags.
	"""
	y, center = _PAIR_BUILDERS[task.kind](**dict(task.params))
	analysis = analyze_pair(y, center)
	validated = None
	if validate:
		validated = validate_fan(y).ok and validate_fan(analysis.blowup.fan_x).ok
		if not validated:
			logging.warning(f"{task.label}: constructed fan failed validation")
	return CatalogEntry(
		label=task.label,
		kind=task.kind,
		params=task.params,
		n=y.dim,
		dim_z=analysis.blowup.dim_z,
		report_y=analysis.report_y,
		report_x=analysis.report_x,
		identities=analysis.identities,
		theorem_flags=theorem1_verdict(y.dim, analysis.blowup.dim_z, analysis.report_y, analysis.report_x),
		validated=validated,
	)


def build_entries(tasks: Sequence[CatalogTask], workers: int = 1, validate: bool = False) -> Tuple[CatalogEntry, ...]:
	"""
	Build entries in task order. With workers > 1 the tasks are spread over a process pool; the
	ordered map keeps the result independent of scheduling.
	"""
	build = partial(build_entry, validate=validate)
	if workers > 1 and len(tasks) > 1:
		logging.info(f"Building {len(tasks)} catalog entries on {workers} workers")
		with mp.Pool(processes=workers) as pool:
			return tuple(pool.map(build, tasks))
	return tuple(build(t) for t in tasks)


@time_function
def build_catalog(limits: CatalogLimits = CatalogLimits(), workers: int = 1, validate: bool = False) -> Catalog:
	"""
	Generate the catalog for the given limits.

	:param limits: Parameter ranges, plus an optional cap on the number of entries
	:param workers: Number of worker processes (1 = no multiprocessing)
	:param validate: Run validate_fan on every constructed fan
	:return: The Catalog; truncated is set when max_entries cut the task list short
	"""
	tasks = catalog_tasks(limits)
	truncated = limits.max_entries is not None and len(tasks) > limits.max_entries
	if truncated:
		logging.warning(f"Catalog truncated to {limits.max_entries} of {len(tasks)} entries")
		tasks = tasks[:limits.max_entries]
	entries = build_entries(tasks, workers=workers, validate=validate)
	logging.info(f"Catalog built: {len(entries)} entries (truncated={truncated})")
	return Catalog(entries=entries, truncated=truncated, limits=limits)
