"""Growth experiments in SL_n(F_p): exact matrix arithmetic, word balls,
tori, trace machinery and additive energy."""

from ._slgrowth import *  # noqa: F401,F403
from ._slgrowth import __version__  # noqa: F401
