DEFAULT_SEED = 2003

# completeness certificate: seeded point location
COMPLETENESS_SAMPLES = 256
SAMPLE_COORD_RANGE = 10 ** 6

DEFAULT_CATALOG_LIMITS = {
	'm_max': 8,
	'max_param': 6,
	'n_max': 8,
}

LABEL_INDEX_LENGTH = 2
JSON_INDENT = 2

PRODUCT_LAW_PAIRS = 20
BASELINE_PROJECTIVE_MAX_DIM = 8

# small Fano fans drawn from by the product law check
SMALL_FANO_POOL = ('P1', 'P2', 'P3', 'P4', 'F1', 'BlptP3')

LOG_CONFIG_ENV_KEY = "LOG_CONFIG"

# time_function logs calls at least this slow at info level
SLOW_CALL_SECONDS = 0.5
