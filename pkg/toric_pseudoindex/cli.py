"""
Command-line entry point (`python -m toric_pseudoindex` or `toric-pseudoindex`).

Exit codes: 0 when everything passed, 1 when verification found violations,
2 on malformed input or a failed precondition. Reports go to stdout, logs to stderr.
"""
import argparse
import json
import logging
import sys

import polars as pl

from . import helperUtils as hu
from . import ioUtils as iou
from . import logUtils
from . import packageConfig
from . import verifyUtils as vu
from .catalogUtils import CatalogLimits, build_catalog
from .constructionUtils import (BundleSpec, exceptional_divisor, product, projective_space, projectivized_split_bundle,
								pullback_divisor, star_subdivision)
from .exceptions import BundleSpecError, FanStructureError
from .fanUtils import Fan, validate_fan
from .invariantUtils import ToricDivisor, fano_report

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_BAD_INPUT = 2

VERIFY_SUITES = ("prop1", "family", "theorem1", "theorem2", "corollaries", "identities", "baselines", "cross")
_CATALOG_SUITES = {
	"theorem1": vu.check_theorem1_suite,
	"theorem2": vu.check_theorem2_boundary,
	"corollaries": vu.check_corollaries,
	"identities": vu.check_identities_suite,
}


# OUTPUT
def _print_json(data: dict):
	print(json.dumps(data, indent=packageConfig.JSON_INDENT, sort_keys=True))


def _print_mapping(data: dict):
	for key, value in data.items():
		print(f"{key}: {value}")


def _emit(data: dict, as_json: bool):
	if as_json:
		_print_json(data)
	else:
		_print_mapping(data)


def _print_report(report: vu.VerificationReport):
	print(f"suite: {report.suite}")
	print(f"checked: {report.checked}  passed: {report.passed}  failed: {report.failed}")
	if report.scan_checks:
		print(f"scan checks: {report.scan_checks}")
	if report.table is not None and len(report.table):
		with pl.Config(tbl_rows=-1, tbl_cols=-1):
			print(report.table)
	for key, values in report.extras.items():
		if isinstance(values, list):
			print(f"{key}: {len(values)}")
			for value in values:
				print(f"  {json.dumps(value, sort_keys=True)}")
		else:
			print(f"{key}: {values}")
	if report.violations:
		print("violations:")
		for v in report.violations:
			print(f"  {json.dumps(v, sort_keys=True)}")
	if report.note:
		print(f"note: {report.note}")


# INPUT
def _load_valid_fan(path: str, seed: int) -> Fan:
	fan = iou.read_fan(path)
	report = validate_fan(fan, seed=seed)
	if not report.ok:
		raise FanStructureError(f"{path}: " + "; ".join(str(d) for d in report.defects))
	return fan


def _bundle_spec(args) -> BundleSpec:
	if args.spec:
		if args.base or args.twists:
			raise BundleSpecError("Give either --spec or --base/--twists, not both")
		return iou.read_bundle_spec(args.spec)
	if not (args.base and args.twists):
		raise BundleSpecError("pbundle needs --base and --twists (or --spec)")
	return BundleSpec(base_dims=tuple(hu.parse_int_list(args.base)), twists=hu.parse_int_matrix(args.twists))


def _write_or_print_fan(fan: Fan, output: str, as_json: bool):
	if output:
		iou.write_fan(output, fan)
		_emit({"output": output, "dim": fan.dim, "n_rays": fan.n_rays, "n_cones": fan.n_cones}, as_json)
	else:
		_print_json(iou.fan_to_dict(fan))


# COMMANDS
def _cmd_validate(args) -> int:
	report = validate_fan(iou.read_fan(args.fan), seed=args.seed)
	if args.json:
		_print_json(report.to_dict())
	else:
		print(f"well_formed: {report.well_formed}\nsmooth: {report.smooth}\ncomplete: {report.complete}")
		for defect in report.defects:
			print(f"  defect: {defect}")
	return EXIT_OK if report.ok else EXIT_BAD_INPUT


def _cmd_invariants(args) -> int:
	report = fano_report(_load_valid_fan(args.fan, args.seed))
	_emit(report.to_dict(), args.json)
	return EXIT_OK


def _cmd_construct(args) -> int:
	if args.construct == "pspace":
		fan = projective_space(args.n)
	elif args.construct == "product":
		fan = product(_load_valid_fan(args.f, args.seed), _load_valid_fan(args.g, args.seed))
	else:
		fan = projectivized_split_bundle(_bundle_spec(args))
	_write_or_print_fan(fan, args.output, args.json)
	return EXIT_OK


def _cmd_blowup(args) -> int:
	fan = _load_valid_fan(args.fan, args.seed)
	b = star_subdivision(fan, hu.parse_int_list(args.cone))
	iou.write_fan(args.output, b.fan_x)
	summary = {
		"output": args.output,
		"center": list(b.center),
		"codim": b.codim,
		"dim_z": b.dim_z,
		"discrepancy": b.discrepancy,
		"e_ray": b.e_ray,
		"n_rays": b.fan_x.n_rays,
		"n_cones": b.fan_x.n_cones,
	}
	if args.emit_pullback:
		summary["pullback_anticanonical"] = list(pullback_divisor(b, ToricDivisor.anticanonical(fan)).coeffs)
		summary["exceptional"] = list(exceptional_divisor(b).coeffs)
		summary["anticanonical_x"] = list(ToricDivisor.anticanonical(b.fan_x).coeffs)
	_emit(summary, args.json)
	return EXIT_OK


def _cmd_verify(args) -> int:
	if args.suite == "prop1":
		report = vu.check_prop1(args.m_max, workers=args.workers)
	elif args.suite == "family":
		report = vu.check_family(args.max, workers=args.workers)
	elif args.suite == "baselines":
		report = vu.check_baselines(args.seed)
	elif args.suite == "cross":
		report = vu.check_cross_construction(args.m_max, workers=args.workers)
	else:
		limits = CatalogLimits.from_text(args.catalog) if args.catalog else CatalogLimits()
		catalog = build_catalog(limits, workers=args.workers)
		report = _CATALOG_SUITES[args.suite](catalog.entries)

	if args.json:
		_print_json(report.to_dict())
	else:
		_print_report(report)
	return EXIT_OK if report.ok else EXIT_VIOLATIONS


def _cmd_catalog(args) -> int:
	limits = CatalogLimits(m_max=args.m_max, max_param=args.max, n_max=args.n_max, max_entries=args.max_entries)
	catalog = build_catalog(limits, workers=args.workers, validate=args.validate)
	if args.output.endswith(".parquet"):
		iou.write_catalog_parquet(args.output, catalog)
	else:
		iou.write_catalog_jsonl(args.output, catalog)
	invalid = [e.label for e in catalog.entries if e.validated is False]
	kinds = {kind: len(catalog.of_kind(kind)) for kind in sorted({e.kind for e in catalog.entries})}
	_emit({"output": args.output, "entries": len(catalog.entries), "kinds": kinds, "truncated": catalog.truncated,
		   "invalid_fans": invalid}, args.json)
	return EXIT_VIOLATIONS if invalid else EXIT_OK


# PARSER
def _common_options(suppress: bool) -> argparse.ArgumentParser:
	"""
	Options accepted before and after the subcommand. Subcommand copies default to SUPPRESS so they
	do not overwrite a value given before the subcommand.
	"""
	def default(value):
		return argparse.SUPPRESS if suppress else value

	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--seed", type=int, default=default(packageConfig.DEFAULT_SEED),
						help="Seed of the completeness point sample and of the product-law pairs")
	common.add_argument("--json", action="store_true", default=default(False), help="Print JSON instead of text")
	common.add_argument("--verbose", action="store_true", default=default(False), help="Debug logging on stderr")
	common.add_argument("--workers", type=int, default=default(1), help="Worker processes for catalog building")
	return common


def build_parser() -> argparse.ArgumentParser:
	limits = packageConfig.DEFAULT_CATALOG_LIMITS
	common = _common_options(suppress=True)
	parser = argparse.ArgumentParser(prog="toric-pseudoindex", description=__doc__,
									 formatter_class=argparse.RawDescriptionHelpFormatter,
									 parents=[_common_options(suppress=False)])
	commands = parser.add_subparsers(dest="command", required=True)

	p = commands.add_parser("validate", parents=[common], help="Check a fan for smoothness and completeness")
	p.add_argument("fan")
	p.set_defaults(handler=_cmd_validate)

	p = commands.add_parser("invariants", parents=[common], help="Fano report of a fan")
	p.add_argument("fan")
	p.set_defaults(handler=_cmd_invariants)

	p = commands.add_parser("construct", help="Build a fan")
	kinds = p.add_subparsers(dest="construct", required=True)
	k = kinds.add_parser("pspace", parents=[common])
	k.add_argument("--n", type=int, required=True)
	k.add_argument("-o", "--output")
	k = kinds.add_parser("product", parents=[common])
	k.add_argument("f")
	k.add_argument("g")
	k.add_argument("-o", "--output")
	k = kinds.add_parser("pbundle", parents=[common])
	k.add_argument("--base", help="Base dimensions, e.g. 1,2")
	k.add_argument("--twists", help="Twist rows, e.g. '0,0;1,1'")
	k.add_argument("--spec", help="Bundle spec JSON file")
	k.add_argument("-o", "--output")
	p.set_defaults(handler=_cmd_construct)

	p = commands.add_parser("blowup", parents=[common], help="Star subdivision along a cone")
	p.add_argument("fan")
	p.add_argument("--cone", required=True, help="Ray indices of the center cone, e.g. 0,1")
	p.add_argument("-o", "--output", required=True)
	p.add_argument("--emit-pullback", action="store_true")
	p.set_defaults(handler=_cmd_blowup)

	p = commands.add_parser("verify", parents=[common], help="Run a verification suite")
	p.add_argument("suite", choices=VERIFY_SUITES)
	p.add_argument("--m-max", type=int, default=limits['m_max'])
	p.add_argument("--max", type=int, default=limits['max_param'])
	p.add_argument("--catalog", help="Catalog limits M,P,N for the catalog based suites")
	p.set_defaults(handler=_cmd_verify)

	p = commands.add_parser("catalog", parents=[common], help="Write the catalog of blow-up pairs")
	p.add_argument("--m-max", type=int, default=limits['m_max'])
	p.add_argument("--max", type=int, default=limits['max_param'])
	p.add_argument("--n-max", type=int, default=limits['n_max'])
	p.add_argument("--max-entries", type=int)
	p.add_argument("--validate", action="store_true", help="Validate every constructed fan")
	p.add_argument("-o", "--output", required=True, help="Output path (.jsonl, or .parquet for a flat table)")
	p.set_defaults(handler=_cmd_catalog)
	return parser


def run(argv=None) -> int:
	parser = build_parser()
	try:
		args = parser.parse_args(argv)
	except SystemExit as e:
		return e.code if isinstance(e.code, int) else EXIT_BAD_INPUT

	logUtils.setup_logging()
	if args.verbose:
		logUtils.override_stream_log_level(logging.DEBUG)

	try:
		return args.handler(args)
	except (ValueError, OSError) as e:
		logging.error(f"{args.command} failed: {e}")
		print(f"error: {e}", file=sys.stderr)
		return EXIT_BAD_INPUT


def main():
	sys.exit(run(sys.argv[1:]))
