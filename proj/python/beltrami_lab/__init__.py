from ._beltrami import *  # noqa: F401,F403
