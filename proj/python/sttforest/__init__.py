"""Dynamic forests on 2-cut search trees on trees."""

from ._core import (
    Forest,
    ParseError,
    PreconditionError,
    RootedForest,
    bench,
    collab_msf,
    gen_script,
    impl_names,
    msf_impl_names,
    msf_total,
    synthetic_collab,
    verify,
)

__all__ = [
    "Forest",
    "ParseError",
    "PreconditionError",
    "RootedForest",
    "bench",
    "collab_msf",
    "gen_script",
    "impl_names",
    "msf_impl_names",
    "msf_total",
    "synthetic_collab",
    "verify",
]
