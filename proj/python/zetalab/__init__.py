"""Python face of the zetalab C++ core.

Everything lives in the compiled module; this package re-exports it so
`import zetalab` works both for wheel installs and for PYTHONPATH pointing
at a CMake build directory.
"""

from _zetalab import *  # noqa: F401,F403
from _zetalab import __doc__  # noqa: F401
