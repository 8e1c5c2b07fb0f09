"""Dowling and Rhodes lattices over a finite group, with the complexes they
Boolean-represent and minimal matrix representations."""

try:
    from ._core import *  # noqa: F401,F403
except ImportError:  # built in-tree: the extension sits on sys.path directly
    from _core import *  # noqa: F401,F403
