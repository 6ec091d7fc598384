"""Digit systems over algebraic bases.

Thin wrappers over the compiled module; results come back as dicts parsed from
the library's JSON, with big integers kept as decimal strings.
"""

import json

from . import _algradix
from ._algradix import Error

__version__ = _algradix.version


def _wrap(fn):
    def call(*args, **kwargs):
        return json.loads(fn(*args, **kwargs))

    call.__name__ = fn.__name__
    call.__doc__ = fn.__doc__
    return call


analyze = _wrap(_algradix.analyze)
expand = _wrap(_algradix.expand)
periodic = _wrap(_algradix.periodic)
is_ns = _wrap(_algradix.is_ns)
rational_digits = _wrap(_algradix.rational_digits)
rational_verify = _wrap(_algradix.rational_verify)
rational_transduce = _wrap(_algradix.rational_transduce)
zero_automaton = _wrap(_algradix.zero_automaton)
min_height = _wrap(_algradix.min_height)
count = _wrap(_algradix.count)
sweep_quadratic = _wrap(_algradix.sweep_quadratic)

__all__ = [
    "Error",
    "analyze",
    "count",
    "expand",
    "is_ns",
    "min_height",
    "periodic",
    "rational_digits",
    "rational_transduce",
    "rational_verify",
    "sweep_quadratic",
    "zero_automaton",
]
