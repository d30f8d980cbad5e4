import os
import json
import logging

import polars as pl

from . import packageConfig
from .constructionUtils import BundleSpec
from .decorators import time_function
from .exceptions import FanFormatError
from .fanUtils import Fan

_FAN_KEYS = ("dim", "rays", "max_cones")
_BUNDLE_KEYS = ("base_dims", "twists")
TRUNCATION_MARKER = "__truncated__"


## Directory ops
def create_folder_if_not_exists(path: str):
	"""
	Create a folder and any necessary parent folders if they do not exist.

	:param path: The folder path
	"""
	if path and not os.path.exists(path):
		os.makedirs(path, exist_ok=True)
		logging.info(f"Created folder: {path}")


def _prepare_output(file_path: str):
	create_folder_if_not_exists(os.path.dirname(os.path.abspath(file_path)))


# READING
def read_dict_from_json(json_file: str) -> dict:
	"""
	:raises FanFormatError: If the file is not valid JSON
	:raises OSError: If the file cannot be read
	"""
	with open(json_file, encoding="utf8") as f:
		try:
			return json.load(f)
		except json.JSONDecodeError as e:
			raise FanFormatError(f"{json_file} is not valid JSON: {e}") from e


def _is_int(x) -> bool:
	return isinstance(x, int) and not isinstance(x, bool)


def _check_keys(data, expected: tuple, what: str):
	if not isinstance(data, dict):
		raise FanFormatError(f"{what} must be a JSON object, got {type(data).__name__}")
	unknown = sorted(set(data) - set(expected))
	if unknown:
		raise FanFormatError(f"{what} has unknown key(s) {unknown}")
	missing = [k for k in expected if k not in data]
	if missing:
		raise FanFormatError(f"{what} is missing key(s) {missing}")


def _int_rows(value, name: str) -> tuple:
	if not isinstance(value, list) or any(not isinstance(row, list) for row in value):
		raise FanFormatError(f"'{name}' must be an array of integer arrays")
	for idx, row in enumerate(value):
		if not all(_is_int(x) for x in row):
			raise FanFormatError(f"'{name}'[{idx}] contains a non-integer entry: {row}")
	return tuple(tuple(row) for row in value)


def fan_from_dict(data) -> Fan:
	"""
	Parse the fan interchange object {"dim": int, "rays": [[int]], "max_cones": [[int]]}.
	Only the format is checked here; geometry is checked by validate_fan.

	:raises FanFormatError: On unknown or missing keys, or non-integer data
	"""
	_check_keys(data, _FAN_KEYS, "Fan")
	if not _is_int(data["dim"]):
		raise FanFormatError(f"'dim' must be an integer, got {data['dim']!r}")
	return Fan(dim=data["dim"], rays=_int_rows(data["rays"], "rays"),
			   max_cones=_int_rows(data["max_cones"], "max_cones"))


def fan_to_dict(fan: Fan) -> dict:
	return {"dim": fan.dim, "rays": [list(r) for r in fan.rays], "max_cones": [list(c) for c in fan.max_cones]}


def read_fan(path: str) -> Fan:
	logging.info(f"Reading fan from {path}")
	fan = fan_from_dict(read_dict_from_json(path))
	logging.info(f"Read fan: dim {fan.dim}, {fan.n_rays} rays, {fan.n_cones} cones")
	return fan


def bundle_spec_from_dict(data) -> BundleSpec:
	"""
	Parse {"base_dims": [int], "twists": [[int]]}; the fiber rank is the number of twist rows.

	:raises FanFormatError: On unknown or missing keys, or non-integer data
	"""
	_check_keys(data, _BUNDLE_KEYS, "Bundle spec")
	base_dims = data["base_dims"]
	if not isinstance(base_dims, list) or not all(_is_int(a) for a in base_dims):
		raise FanFormatError(f"'base_dims' must be an array of integers, got {base_dims!r}")
	return BundleSpec(base_dims=tuple(base_dims), twists=_int_rows(data["twists"], "twists"))


def read_bundle_spec(path: str) -> BundleSpec:
	return bundle_spec_from_dict(read_dict_from_json(path))


# WRITING
def write_dict_to_json(file_path: str, dictionary: dict, indent: int = packageConfig.JSON_INDENT):
	_prepare_output(file_path)
	with open(file_path, "w", encoding="utf8") as outfile:
		json.dump(dictionary, outfile, indent=indent)
		outfile.write("\n")
	logging.info(f"Wrote {file_path}")


def write_fan(file_path: str, fan: Fan):
	write_dict_to_json(file_path, fan_to_dict(fan))


def catalog_lines(catalog) -> list:
	"""
	One JSON line per entry with sorted keys, followed by a marker line when the catalog was truncated.
	"""
	lines = [json.dumps(e.to_dict(), sort_keys=True) for e in catalog.entries]
	if catalog.truncated:
		lines.append(json.dumps({TRUNCATION_MARKER: True, "entries": len(catalog.entries),
								 "max_entries": catalog.limits.max_entries}, sort_keys=True))
	return lines


@time_function
def write_catalog_jsonl(file_path: str, catalog):
	_prepare_output(file_path)
	with open(file_path, "w", encoding="utf8") as outfile:
		for line in catalog_lines(catalog):
			outfile.write(line + "\n")
	logging.info(f"Wrote catalog of {len(catalog.entries)} entries to {file_path}")


###TRANSFORM

def catalog_to_polars(catalog) -> pl.DataFrame:
	"""
	Flat one-row-per-entry view of a catalog.
	"""
	rows = [{
		"label": e.label,
		"kind": e.kind,
		"n": e.n,
		"dim_z": e.dim_z,
		"y_fano": e.report_y.is_fano,
		"x_fano": e.report_x.is_fano,
		"i_y": e.report_y.pseudo_index,
		"i_x": e.report_x.pseudo_index,
		"r_y": e.report_y.fano_index,
		"r_x": e.report_x.fano_index,
		"rho_y": e.report_y.picard_rank,
		"rho_x": e.report_x.picard_rank,
		"identities_ok": e.identities.ok,
		"theorem_applied": e.theorem_flags.applied,
		"theorem_violated": e.theorem_flags.violated,
	} for e in catalog.entries]
	return pl.DataFrame(rows, infer_schema_length=None)


@time_function
def write_catalog_parquet(file_path: str, catalog):
	_prepare_output(file_path)
	df = catalog_to_polars(catalog).with_columns(pl.lit(catalog.truncated).alias("truncated"))
	if catalog.truncated:
		logging.warning(f"Catalog written to {file_path} is truncated at {len(catalog.entries)} entries")
	df.write_parquet(file_path)
	logging.info(f"Wrote catalog table to {file_path}. n={len(df)} rows.")
