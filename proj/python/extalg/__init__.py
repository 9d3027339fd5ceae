from _extalg import (
    Algebra,
    ext_dim,
    hilbert,
    load,
    parse,
    resolve,
    serialize,
    verify_m11,
)

__all__ = [
    "Algebra",
    "ext_dim",
    "hilbert",
    "load",
    "parse",
    "resolve",
    "serialize",
    "verify_m11",
]
