"""Adaptive plane-wave discontinuous Galerkin solver for time-harmonic waves."""

try:
    from dgpwnn._dgpwnn import *  # noqa: F401,F403
    from dgpwnn._dgpwnn import __version__  # noqa: F401
except ImportError:  # build-tree layout: extension next to the package
    from _dgpwnn import *  # noqa: F401,F403
    from _dgpwnn import __version__  # noqa: F401
