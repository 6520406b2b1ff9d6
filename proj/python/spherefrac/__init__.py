"""Fractional Laplacians on the sphere S^{n-1}.

Thin Python facade over the C++ core: spectral and kernel routes for
(-Delta)^{+-s}, the Dirichlet-to-Neumann splitting, heat/Poisson semigroups,
the extension problem and the circle kernels.
"""

try:
    from ._spherefrac import *  # noqa: F401,F403
    from ._spherefrac import circle, specfun  # noqa: F401
except ImportError:  # module built out-of-tree (plain CMake build dir on PYTHONPATH)
    from _spherefrac import *  # noqa: F401,F403
    from _spherefrac import circle, specfun  # noqa: F401

__version__ = "0.1.0"
