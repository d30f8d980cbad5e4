class ToricError(ValueError):
	"""Base class for every error raised on bad toric input."""


class FanFormatError(ToricError):
	"""The fan (or bundle spec) interchange data is malformed."""


class FanStructureError(ToricError):
	"""The fan is not smooth, or not convex at some wall."""


class CompletenessError(FanStructureError):
	"""A wall does not have exactly two adjacent maximal cones."""


class NotFanoError(ToricError):
	pass


class CenterError(ToricError):
	"""The blow-up center is not a cone of the fan, or is empty / everything."""


class DivisorialCenterError(CenterError):
	pass


class DivisorMismatchError(ToricError):
	pass


class BundleSpecError(ToricError):
	pass
