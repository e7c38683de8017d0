"""Edge-magic labeled digraphs: constructions, transforms and oracles."""

from ._magiclab import *  # noqa: F401,F403
from ._magiclab import __doc__  # noqa: F401
