"""Path homology and discrete Morse theory for digraphs.

Digraphs are given as a list of vertex labels plus a list of (from, to)
label pairs; vertex values as a dict label -> value, where a value is an
int or a rational string like "3/2". Every computation is exact.
"""

from pathmorse._core import (
    allowed_paths,
    collapse,
    critical_paths,
    generate,
    homology,
    matching,
    morse_complex,
    validate_morse,
    verify_theorem_1,
    verify_theorem_2,
)

__all__ = [
    "allowed_paths",
    "collapse",
    "critical_paths",
    "generate",
    "homology",
    "matching",
    "morse_complex",
    "validate_morse",
    "verify_theorem_1",
    "verify_theorem_2",
]
