"""
Blow-up pairs (Y, center) of the example families and the checks that apply to a single pair:
the blow-up identities and the pseudo-index inequality clauses.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from .constructionUtils import (BlowupResult, BundleSpec, exceptional_divisor, exceptional_fiber_walls,
								linear_center, projective_space, projectivized_split_bundle, pullback_divisor,
								star_subdivision, subbundle_center_cone)
from .exceptions import DivisorialCenterError, ToricError
from .fanUtils import Cone, Fan, enumerate_walls
from .invariantUtils import FanoReport, ToricDivisor, divisor_degree, fano_report, picard_rank


def prop1_spec(m: int) -> BundleSpec:
	"""
	O^m + O(1) over P^m.
	"""
	return BundleSpec(base_dims=(m,), twists=((0,),) * m + ((1,),))


def family_spec(a: int, d: int, r: int, s: int) -> BundleSpec:
	"""
	O^r + O(d)^s over P^a.
	"""
	return BundleSpec(base_dims=(a,), twists=((0,),) * r + ((d,),) * s)


def blown_up_prop1_spec(m: int) -> BundleSpec:
	"""
	O + O(1,1) over P^(m-1) x P^m, the P^1-bundle the blow-up X_(2m) is isomorphic to.
	"""
	return BundleSpec(base_dims=(m - 1, m), twists=((0, 0), (1, 1)))


def build_prop1_pair(m: int) -> Tuple[Fan, Cone]:
	"""
	Y_n = P(O^m + O(1)) over P^m (n = 2m) with the cone of Z = P(O(1)), cut out by the m trivial
	fiber coordinates.

	:raises DivisorialCenterError: If m < 2
	"""
	if not isinstance(m, int) or m < 2:
		raise DivisorialCenterError(f"The (Y_n, X_n) pair needs m >= 2, got {m!r} (m = 1 has a divisorial center)")
	spec = prop1_spec(m)
	return projectivized_split_bundle(spec), subbundle_center_cone(spec, range(m))


def build_family_pair(a: int, d: int, r: int, s: int) -> Tuple[Fan, Cone]:
	"""
	Y = P(O^r + O(d)^s) over P^a with the cone of Z = P(O(d)^s), of codimension r.

	:raises DivisorialCenterError: If r < 2
	"""
	if any(not isinstance(x, int) or x < 1 for x in (a, d, r, s)):
		raise ToricError(f"Family parameters must be positive integers, got {(a, d, r, s)}")
	if r < 2:
		raise DivisorialCenterError(f"Family pair needs r >= 2, got r = {r} (divisorial center)")
	spec = family_spec(a, d, r, s)
	return projectivized_split_bundle(spec), subbundle_center_cone(spec, range(r))


def build_linear_pair(n: int, k: int) -> Tuple[Fan, Cone]:
	"""
	P^n with the cone of a coordinate P^k, 0 <= k <= n - 2; the blow-up is Bl_(P^k) P^n.

	:raises DivisorialCenterError: If k = n - 1
	:raises CenterError: If k is out of range
	"""
	center = linear_center(n, k)
	return projective_space(n), center


def family_closed_forms(a: int, d: int, r: int, s: int) -> dict:
	"""
	Fano criteria and pseudo-indices of the family, from its closed forms.
	Pseudo-indices are None unless both Y and X are Fano.
	"""
	y_fano = a >= r * d
	x_fano = a >= d
	both = y_fano and x_fano
	return {
		"y_fano": y_fano,
		"x_fano": x_fano,
		"i_y": min(r + s, 1 + a - r * d) if both else None,
		"i_x": min(r - 1, s + 1, 1 + a - d) if both else None,
	}


@dataclass(frozen=True)
class IdentityRecord:
	n: int
	dim_z: int
	discrepancy_ok: bool
	picard_increment_ok: bool
	cone_count_ok: bool
	exceptional_fiber_ok: bool
	pullback_nef_ok: Optional[bool]
	gcd_index_ok: Optional[bool]

	@property
	def ok(self) -> bool:
		return all(v is not False for v in (self.discrepancy_ok, self.picard_increment_ok, self.cone_count_ok,
											  self.exceptional_fiber_ok, self.pullback_nef_ok, self.gcd_index_ok))

	def to_dict(self) -> dict:
		return {
			"discrepancy": self.discrepancy_ok,
			"picard_increment": self.picard_increment_ok,
			"cone_count": self.cone_count_ok,
			"exceptional_fiber": self.exceptional_fiber_ok,
			"pullback_nef": self.pullback_nef_ok,
			"gcd_index": self.gcd_index_ok,
		}


@dataclass(frozen=True)
class PairAnalysis:
	blowup: BlowupResult
	report_y: FanoReport
	report_x: FanoReport
	identities: IdentityRecord


def analyze_pair(y: Fan, center: Cone) -> PairAnalysis:
	"""
	Blow up Y along V(center), compute both Fano reports and check the blow-up identities:
	-K_X = pi^*(-K_Y) - (codim - 1) E coefficientwise, Picard rank +1, the cone count of the star
	subdivision, degree codim - 1 of -K_X and degree 0 of pi^*(-K_Y) on the exceptional fiber lines,
	pi^*(-K_Y) nonnegative on every wall when Y is Fano, and r_X = gcd(r_Y, n - dim Z - 1) when both are Fano.
	"""
	b = star_subdivision(y, center)
	x = b.fan_x
	report_y = fano_report(y)
	report_x = fano_report(x)

	pulled = pullback_divisor(b, ToricDivisor.anticanonical(y))
	discrepancy_ok = pulled + exceptional_divisor(b).scaled(-b.discrepancy) == ToricDivisor.anticanonical(x)

	expected_cones = y.n_cones + len(y.cones_containing(b.center)) * (b.codim - 1)
	fiber_walls = exceptional_fiber_walls(b)
	anticanonical_x = ToricDivisor.anticanonical(x)
	exceptional_fiber_ok = bool(fiber_walls) and all(
		divisor_degree(x, pulled, w) == 0 and divisor_degree(x, anticanonical_x, w) == b.discrepancy
		for w in fiber_walls)

	pullback_nef_ok = None
	if report_y.is_fano:
		pullback_nef_ok = all(divisor_degree(x, pulled, w) >= 0 for w in enumerate_walls(x))

	gcd_index_ok = None
	if report_y.is_fano and report_x.is_fano:
		gcd_index_ok = report_x.fano_index == math.gcd(report_y.fano_index, b.discrepancy)

	identities = IdentityRecord(
		n=y.dim,
		dim_z=b.dim_z,
		discrepancy_ok=discrepancy_ok,
		picard_increment_ok=picard_rank(x) == picard_rank(y) + 1,
		cone_count_ok=x.n_cones == expected_cones,
		exceptional_fiber_ok=exceptional_fiber_ok,
		pullback_nef_ok=pullback_nef_ok,
		gcd_index_ok=gcd_index_ok,
	)
	if not identities.ok:
		logging.warning(f"Blow-up identity failure at center {list(center)}: {identities.to_dict()}")
	return PairAnalysis(blowup=b, report_y=report_y, report_x=report_x, identities=identities)


def check_blowup_identities(y: Fan, center: Cone) -> IdentityRecord:
	return analyze_pair(y, center).identities


@dataclass(frozen=True)
class Theorem1Verdict:
	both_fano: bool
	clauses: Tuple[str, ...]
	applied: str
	boundary: bool
	conclusion: Optional[bool]

	@property
	def violated(self) -> bool:
		return self.both_fano and bool(self.clauses) and not self.conclusion

	def to_dict(self) -> dict:
		return {
			"both_fano": self.both_fano,
			"clauses": list(self.clauses),
			"applied": self.applied,
			"boundary": self.boundary,
			"conclusion": self.conclusion,
		}


def theorem1_verdict(n: int, dim_z: int, report_y: FanoReport, report_x: FanoReport) -> Theorem1Verdict:
	"""
	Evaluate the three hypotheses of the blow-up pseudo-index inequality:
	(i) 2 dim Z < n + i_Y - 1, (ii) 2 dim Z = n + i_Y - 1 and i_Y >= 2, (iii) dim Z < n / 2.
	The conclusion i_X <= i_Y is only meaningful when both varieties are Fano.
	"""
	if not (report_y.is_fano and report_x.is_fano):
		return Theorem1Verdict(both_fano=False, clauses=(), applied="not-fano", boundary=False, conclusion=None)

	i_y = report_y.pseudo_index
	clauses = []
	if 2 * dim_z < n + i_y - 1:
		clauses.append("i")
	if 2 * dim_z == n + i_y - 1 and i_y >= 2:
		clauses.append("ii")
	if 2 * dim_z < n:
		clauses.append("iii")
	boundary = 2 * dim_z == n + i_y - 1
	if clauses:
		applied = clauses[0]
	elif boundary:
		applied = "boundary"
	else:
		applied = "none"
	return Theorem1Verdict(both_fano=True, clauses=tuple(clauses), applied=applied, boundary=boundary,
						   conclusion=report_x.pseudo_index <= i_y)


def check_theorem1(y: Fan, center: Cone) -> Theorem1Verdict:
	analysis = analyze_pair(y, center)
	return theorem1_verdict(y.dim, analysis.blowup.dim_z, analysis.report_y, analysis.report_x)


@lru_cache(maxsize=None)
def prop1_signatures(m: int) -> Tuple[tuple, tuple]:
	"""
	Invariant signatures (Y_n, X_n) of the pair built by build_prop1_pair with n = 2m.
	"""
	y, center = build_prop1_pair(m)
	analysis = analyze_pair(y, center)
	return analysis.report_y.signature(), analysis.report_x.signature()


def matches_prop1_signature(n: int, dim_z: int, report_y: FanoReport, report_x: FanoReport) -> bool:
	"""
	True iff the pair looks like the exceptional pair (Y_n, X_n): n even and >= 6, i_Y = 1, i_X = 2,
	dim Z = n / 2, and both signatures equal those of the constructed pair of the same dimension.
	"""
	if n < 6 or n % 2:
		return False
	if report_y.pseudo_index != 1 or report_x.pseudo_index != 2 or 2 * dim_z != n:
		return False
	sig_y, sig_x = prop1_signatures(n // 2)
	return report_y.signature() == sig_y and report_x.signature() == sig_x


def check_isomorphism_signature(m: int) -> bool:
	"""
	Compare the blow-up X_(2m) with the P^1-bundle P(O + O(1,1)) over
	P^(m-1) x P^m by invariant signature.
	"""
	_, sig_x = prop1_signatures(m)
	bundle = projectivized_split_bundle(blown_up_prop1_spec(m))
	return fano_report(bundle).signature() == sig_x
