from ._xtropy import *  # noqa: F401,F403
from ._xtropy import __version__  # noqa: F401
