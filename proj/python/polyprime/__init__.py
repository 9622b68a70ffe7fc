from ._polyprime import *  # noqa: F401,F403
from ._polyprime import __doc__  # noqa: F401
