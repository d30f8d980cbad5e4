# Initialization for the toric_pseudoindex package
#
from .exceptions import *
from .fanUtils import Fan, Wall, ValidationReport, validate_fan, enumerate_walls, primitive_vector
from .invariantUtils import (ToricDivisor, FanoReport, WallRelation, wall_relation, wall_relations,
							 anticanonical_degree, divisor_degree, is_fano, pseudo_index, fano_index, picard_rank,
							 minimizing_walls, fano_report)
from .constructionUtils import (BundleSpec, BlowupResult, projective_space, product, projectivized_split_bundle,
								subbundle_center_cone, star_subdivision, pullback_divisor, exceptional_divisor,
								hirzebruch, linear_center)
from .pairUtils import (build_prop1_pair, build_family_pair, build_linear_pair, check_blowup_identities,
						check_theorem1)
from .catalogUtils import CatalogLimits, CatalogEntry, Catalog, build_catalog
from .verifyUtils import (VerificationReport, check_prop1, check_family, check_theorem2_boundary, check_corollaries,
						  check_theorem1_suite, check_identities_suite, check_baselines, check_cross_construction)
