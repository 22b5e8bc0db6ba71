"""Python bindings for the ecumen core library."""

from ._ecumen import (  # noqa: F401
    Base,
    Formula,
    NDError,
    ParseError,
    Universe,
    check_proof,
    counterexample,
    decide_strong,
    parse,
    render,
    roundtrip,
    weak_global,
    weak_local,
    weak_suite,
    weak_valid,
)

__all__ = [name for name in dir() if not name.startswith("_")]
