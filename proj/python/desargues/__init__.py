"""Exact pencil-of-conics toolkit.

Thin Python layer over the C++ core: the full CLI (`run`) plus direct
entry points for the most used operations. All coordinates and results are
exact — rational strings like ``"3/4"`` or quadratic-extension objects like
``{"a": "0", "b": "1", "d": "2"}`` — never floats.
"""

from ._core import (
    __version__,
    butterfly_point,
    eleven_point,
    harmonic,
    involution,
    run,
)

__all__ = [
    "__version__",
    "butterfly_point",
    "eleven_point",
    "harmonic",
    "involution",
    "run",
]
