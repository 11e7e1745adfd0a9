from ._afkit import *  # noqa: F401,F403
from ._afkit import AF, extensions, kernel, equivalent, realize, realizable  # noqa: F401
