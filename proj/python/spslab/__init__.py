"""Finite state property systems and closure spaces."""

try:
    from ._spslab import (
        ClosureSpace,
        ParseError,
        Sps,
        enumerate_spaces,
        isomorphic,
        parse,
        random_space,
    )
except ImportError:  # development layout: extension next to the build tree
    from _spslab import (
        ClosureSpace,
        ParseError,
        Sps,
        enumerate_spaces,
        isomorphic,
        parse,
        random_space,
    )

__all__ = [
    "ClosureSpace",
    "ParseError",
    "Sps",
    "enumerate_spaces",
    "isomorphic",
    "parse",
    "random_space",
]
