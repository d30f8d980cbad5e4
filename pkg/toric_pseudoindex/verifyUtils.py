"""
Verification suites. Each suite returns a VerificationReport; failures are data, never exceptions.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from typing import List, Optional, Sequence

import polars as pl

from . import packageConfig
from .catalogUtils import CatalogEntry, build_entries, family_tasks, make_task, prop1_tasks
from .constructionUtils import BundleSpec, hirzebruch, product, projective_space, projectivized_split_bundle, \
	small_fano_fan
from .decorators import time_function
from .invariantUtils import fano_report, pseudo_index
from .pairUtils import check_isomorphism_signature, family_closed_forms, matches_prop1_signature

ONE_SIDED_NOTE = ("Property check over the generated instances only: it can falsify the statement, "
				  "it cannot prove the universally quantified version.")


@dataclass
class VerificationReport:
	suite: str
	checked: int
	violations: List[dict]
	note: str = ""
	table: Optional[pl.DataFrame] = None
	extras: dict = field(default_factory=dict)
	scan_checks: int = 0

	@property
	def failed(self) -> int:
		return len({v["label"] for v in self.violations})

	@property
	def passed(self) -> int:
		return self.checked + self.scan_checks - self.failed

	@property
	def ok(self) -> bool:
		return not self.violations

	def to_dict(self) -> dict:
		out = {
			"suite": self.suite,
			"checked": self.checked,
			"scan_checks": self.scan_checks,
			"passed": self.passed,
			"failed": self.failed,
			"violations": self.violations,
			"note": self.note,
		}
		if self.table is not None:
			out["rows"] = self.table.to_dicts()
		out.update(self.extras)
		return out


def _violation(label: str, check: str, **detail) -> dict:
	return {"label": label, "check": check, **detail}


def _table(rows: list, sort_by: Optional[list] = None) -> pl.DataFrame:
	# nulls (non-Fano pseudo-indices) can fill the first rows, so infer from every row
	df = pl.DataFrame(rows, infer_schema_length=None)
	if sort_by and len(df):
		df = df.sort(sort_by)
	return df


def _finish(report: VerificationReport) -> VerificationReport:
	if report.ok:
		logging.info(f"Suite {report.suite}: {report.checked} checked, no violations")
	else:
		logging.warning(f"Suite {report.suite}: {report.failed} of {report.checked} failed")
	return report


@time_function
def check_prop1(m_max: int, workers: int = 1) -> VerificationReport:
	"""
	Y_n and X_n (n = 2m, m = 2..m_max): both Fano, i(Y_n) = 1, i(X_4) = 1, i(X_n) = 2 for m >= 3, the wall
	degrees of X_n contain 2 and m - 1, and X_n has the invariant signature of P(O + O(1,1)) over
	P^(m-1) x P^m.
	"""
	if m_max < 2:
		raise ValueError(f"check_prop1 needs m_max >= 2, got {m_max}")
	rows = []
	violations = []
	for e in build_entries(prop1_tasks(m_max), workers=workers):
		m = e.param_dict["m"]
		ry, rx = e.report_y, e.report_x
		degrees = rx.wall_degree_multiset
		bundle_ok = check_isomorphism_signature(m)
		checks = {
			"y_fano": ry.is_fano,
			"x_fano": rx.is_fano,
			"i_y": ry.pseudo_index == 1,
			"i_x": rx.pseudo_index == (1 if m == 2 else 2),
			"fiber_degree_2": 2 in degrees,
			"line_degree_m_minus_1": (m - 1) in degrees,
			"exceptional_fiber": e.identities.exceptional_fiber_ok,
			"bundle_signature": bundle_ok,
		}
		violations += [_violation(e.label, name, m=m) for name, ok in checks.items() if not ok]
		rows.append({"m": m, "n": e.n, "dim_z": e.dim_z, "y_fano": ry.is_fano, "x_fano": rx.is_fano,
					 "i_y": ry.pseudo_index, "i_x": rx.pseudo_index, "r_y": ry.fano_index, "r_x": rx.fano_index,
					 "x_degrees": sorted(degrees), "bundle_signature": bundle_ok})
	return _finish(VerificationReport(
		suite="prop1", checked=len(rows), violations=violations, table=_table(rows, ["m"]),
		note="Minimal curves of X_n versus their images in Y_n are observed through the wall degrees only."))


@time_function
def check_family(max_param: int, workers: int = 1, entries: Optional[Sequence[CatalogEntry]] = None) -> VerificationReport:
	"""
	Scan P(O^r + O(d)^s) over P^a for a, d, s in 1..max_param and r in 2..max_param: Fano criteria, closed-form
	pseudo-indices when both are Fano, the region rd > a >= d where only X is Fano, the witnesses with
	i_X > i_Y >= 2, and the index gaps where r_Y < i_Y and r_X < i_X.

	:param entries: Already built family entries (for example from a catalog); built here when None
	"""
	if max_param < 2:
		raise ValueError(f"check_family needs max_param >= 2, got {max_param}")
	if entries is None:
		entries = build_entries(family_tasks(max_param), workers=workers)
	entries = [e for e in entries if e.kind == "family"]

	rows = []
	witnesses = []
	index_gaps = []
	violations = []
	for e in entries:
		p = e.param_dict
		a, d, r, s = p["a"], p["d"], p["r"], p["s"]
		ry, rx = e.report_y, e.report_x
		expected = family_closed_forms(a, d, r, s)
		region = r * d > a >= d
		checks = {
			"y_fano_criterion": ry.is_fano == expected["y_fano"],
			"x_fano_criterion": rx.is_fano == expected["x_fano"],
		}
		if ry.is_fano and rx.is_fano:
			checks["i_y_closed_form"] = ry.pseudo_index == expected["i_y"]
			checks["i_x_closed_form"] = rx.pseudo_index == expected["i_x"]
			found = {"a": a, "d": d, "r": r, "s": s, "n": e.n, "i_y": ry.pseudo_index, "i_x": rx.pseudo_index}
			if rx.pseudo_index > ry.pseudo_index >= 2:
				witnesses.append(found)
			if ry.fano_index < ry.pseudo_index and rx.fano_index < rx.pseudo_index:
				index_gaps.append({**found, "r_y": ry.fano_index, "r_x": rx.fano_index})
		if region:
			checks["region_x_fano_y_not"] = rx.is_fano and not ry.is_fano
		violations += [_violation(e.label, name) for name, ok in checks.items() if not ok]
		rows.append({"a": a, "d": d, "r": r, "s": s, "n": e.n, "dim_z": e.dim_z,
					 "y_fano": ry.is_fano, "x_fano": rx.is_fano,
					 "i_y": ry.pseudo_index, "i_x": rx.pseudo_index,
					 "r_y": ry.fano_index, "r_x": rx.fano_index,
					 "expected_i_y": expected["i_y"], "expected_i_x": expected["i_x"], "region": region})

	table = _table(rows, ["a", "d", "r", "s"])
	region_rows = table.filter(pl.col("region")).to_dicts() if len(table) else []

	keys = {(w["a"], w["d"], w["r"], w["s"]) for w in witnesses}
	region_keys = {(x["a"], x["d"], x["r"], x["s"]) for x in region_rows}
	scan = {
		"witness_below_dimension_10": [w for w in witnesses if w["n"] < 10],
		"region_witness_1_1_2_1_missing": (1, 1, 2, 1) not in region_keys,
	}
	if max_param >= 5:
		scan["witness_5_1_4_2_missing"] = (5, 1, 4, 2) not in keys
	for name, failed in scan.items():
		if failed:
			detail = {"witnesses": failed} if isinstance(failed, list) else {}
			violations.append(_violation(f"family/scan/{name}", name, **detail))

	return _finish(VerificationReport(
		suite="family", checked=len(rows), violations=violations, table=table, scan_checks=len(scan),
		extras={"region": region_rows, "witnesses": witnesses, "index_gaps": index_gaps}))


def _both_fano(entries: Sequence[CatalogEntry]) -> list:
	return [e for e in entries if e.both_fano]


@time_function
def check_theorem1_suite(entries: Sequence[CatalogEntry]) -> VerificationReport:
	"""
	Whenever one of the three hypotheses holds and both Y and X are Fano, i_X <= i_Y.
	"""
	checked = _both_fano(entries)
	violations = [_violation(e.label, f"clause_{e.theorem_flags.applied}", n=e.n, dim_z=e.dim_z,
							 i_y=e.report_y.pseudo_index, i_x=e.report_x.pseudo_index)
				  for e in checked if e.theorem_flags.violated]
	counts = Counter(e.theorem_flags.applied for e in checked)
	table = _table([{"applied": k, "count": v} for k, v in counts.items()], ["applied"])
	return _finish(VerificationReport(suite="theorem1", checked=len(checked), violations=violations,
									  table=table, note=ONE_SIDED_NOTE))


@time_function
def check_theorem2_boundary(entries: Sequence[CatalogEntry]) -> VerificationReport:
	"""
	On the boundary 2 dim Z = n + i_Y - 1 every pair with i_X > i_Y has to look like (Y_n, X_n).
	"""
	boundary = [e for e in _both_fano(entries) if e.theorem_flags.boundary]
	rows = []
	violations = []
	for e in boundary:
		ry, rx = e.report_y, e.report_x
		exception = rx.pseudo_index > ry.pseudo_index
		matches = matches_prop1_signature(e.n, e.dim_z, ry, rx) if exception else None
		if exception and not matches:
			violations.append(_violation(e.label, "boundary_exception_signature", n=e.n, dim_z=e.dim_z,
										 i_y=ry.pseudo_index, i_x=rx.pseudo_index))
		rows.append({"label": e.label, "n": e.n, "dim_z": e.dim_z, "i_y": ry.pseudo_index,
					 "i_x": rx.pseudo_index, "exception": exception, "prop1_signature": matches})
	return _finish(VerificationReport(suite="theorem2", checked=len(rows), violations=violations,
									  table=_table(rows, ["label"]), note=ONE_SIDED_NOTE))


@time_function
def check_corollaries(entries: Sequence[CatalogEntry]) -> VerificationReport:
	"""
	If 3 i_Y > n - 3 then i_X <= i_Y; if 3 i_Y = n - 3 and i_X > i_Y then n = 6 and the pair is (Y_6, X_6);
	if n <= 5 then i_X <= i_Y; if n = 6 and i_X > i_Y then the pair is (Y_6, X_6).
	"""
	applied = Counter()
	violations = []
	checked = _both_fano(entries)
	for e in checked:
		n, i_y, i_x = e.n, e.report_y.pseudo_index, e.report_x.pseudo_index
		exception = i_x > i_y
		x6 = n == 6 and matches_prop1_signature(n, e.dim_z, e.report_y, e.report_x)
		checks = {}
		if 3 * i_y > n - 3:
			checks["cor1_i"] = not exception
		if 3 * i_y == n - 3:
			checks["cor1_ii"] = not exception or x6
		if n <= 5:
			checks["cor2_i"] = not exception
		if n == 6:
			checks["cor2_ii"] = not exception or x6
		applied.update(checks.keys())
		violations += [_violation(e.label, name, n=n, i_y=i_y, i_x=i_x) for name, ok in checks.items() if not ok]
	table = _table([{"clause": k, "applicable": v} for k, v in applied.items()], ["clause"])
	return _finish(VerificationReport(suite="corollaries", checked=len(checked), violations=violations,
									  table=table, note=ONE_SIDED_NOTE))


@time_function
def check_identities_suite(entries: Sequence[CatalogEntry]) -> VerificationReport:
	"""
	Blow-up identities recorded on every entry, plus the fan validation flag when it was computed.
	"""
	failures = Counter()
	violations = []
	for e in entries:
		flags = e.identities.to_dict()
		flags["validated"] = e.validated
		failed = [name for name, ok in flags.items() if ok is False]
		failures.update(failed)
		violations += [_violation(e.label, name) for name in failed]
	table = _table([{"identity": k, "failures": failures.get(k, 0)}
					for k in list(entries[0].identities.to_dict()) + ["validated"]] if entries else [])
	return _finish(VerificationReport(suite="identities", checked=len(entries), violations=violations, table=table))


@time_function
def check_baselines(seed: int = packageConfig.DEFAULT_SEED) -> VerificationReport:
	"""
	Projective spaces up to the configured dimension, F_1 and F_2, and the product law
	i(F x G) = min(i(F), i(G)) on seeded pairs of small Fano fans.
	"""
	violations = []
	checked = 0
	for n in range(1, packageConfig.BASELINE_PROJECTIVE_MAX_DIM + 1):
		report = fano_report(projective_space(n))
		checked += 1
		if (report.pseudo_index, report.fano_index, report.picard_rank) != (n + 1, n + 1, 1):
			violations.append(_violation(f"P{n}", "projective_space", i=report.pseudo_index,
										 r=report.fano_index, rho=report.picard_rank))

	f1 = fano_report(hirzebruch(1))
	checked += 2
	if f1.wall_degree_multiset != {1: 1, 2: 2, 3: 1}:
		violations.append(_violation("F1", "wall_degrees", wall_degrees=f1.to_dict()["wall_degrees"]))
	f2 = fano_report(hirzebruch(2))
	if f2.is_fano or f2.min_degree != 0:
		violations.append(_violation("F2", "not_fano_min_degree_0", is_fano=f2.is_fano, min_degree=f2.min_degree))

	rng = random.Random(seed)
	pairs = []
	for _ in range(packageConfig.PRODUCT_LAW_PAIRS):
		left, right = rng.choice(packageConfig.SMALL_FANO_POOL), rng.choice(packageConfig.SMALL_FANO_POOL)
		f, g = small_fano_fan(left), small_fano_fan(right)
		expected = min(pseudo_index(f), pseudo_index(g))
		got = pseudo_index(product(f, g))
		checked += 1
		pairs.append({"left": left, "right": right, "pseudo_index": got, "expected": expected})
		if got != expected:
			violations.append(_violation(f"{left}x{right}", "product_law", got=got, expected=expected))
	return _finish(VerificationReport(suite="baselines", checked=checked, violations=violations,
									  table=_table(pairs), extras={"seed": seed}))


def _zero_twist_cases() -> list:
	return [((1,), 2), ((2,), 2), ((1,), 3), ((1, 1), 2), ((2, 1), 2), ((1, 2), 3)]


@time_function
def check_cross_construction(m_max: int, workers: int = 1) -> VerificationReport:
	"""
	The family pair (m, 1, m, 1) against the (Y_n, X_n) pair for m = 2..m_max, and bundles with all twists
	zero against the plain product of the base with P^k.
	"""
	rows = []
	violations = []
	for m in range(2, m_max + 1):
		fam, prop = build_entries([make_task("family", a=m, d=1, r=m, s=1), make_task("prop1", m=m)], workers=workers)
		same = (fam.report_y.signature() == prop.report_y.signature()
				and fam.report_x.signature() == prop.report_x.signature())
		rows.append({"case": prop.label, "consistent": same})
		if not same:
			violations.append(_violation(prop.label, "family_vs_prop1"))

	for base_dims, rank in _zero_twist_cases():
		spec = BundleSpec(base_dims=base_dims, twists=((0,) * len(base_dims),) * rank)
		label = f"zero-twist/{spec.to_dict()}"
		plain = reduce(product, [projective_space(a) for a in base_dims] + [projective_space(rank - 1)])
		same = fano_report(projectivized_split_bundle(spec)).signature() == fano_report(plain).signature()
		rows.append({"case": label, "consistent": same})
		if not same:
			violations.append(_violation(label, "zero_twist_vs_product"))
	return _finish(VerificationReport(suite="cross", checked=len(rows), violations=violations, table=_table(rows)))
