import functools
import logging
from timeit import default_timer as timer

from . import packageConfig


def time_function(func):
	"""
	Log the wall time of a call; calls faster than packageConfig.SLOW_CALL_SECONDS are logged at debug level.
	"""
	@functools.wraps(func)
	def wrapper(*args, **kwargs):
		start = timer()
		result = func(*args, **kwargs)
		elapsed = timer() - start
		level = logging.INFO if elapsed >= packageConfig.SLOW_CALL_SECONDS else logging.DEBUG
		logging.log(level, f"{func.__module__}.{func.__name__}() executed in {elapsed:.6f}s")
		return result
	return wrapper
