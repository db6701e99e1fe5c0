"""Biquaternion integral-theorem checks: algebra, maps, curve integrals and the verify harness."""

from ._cquat import *  # noqa: F401,F403
from ._cquat import __version__  # noqa: F401
