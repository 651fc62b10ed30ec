"""Exact criteria, embeddings and experiments for one-relator groups.

The heavy lifting lives in the C++ extension module ``onerel._core``; this
package re-exports its operations. Words are passed as strings in compact
form (``"abAB"``: lowercase letters are generators, uppercase their
inverses) or indexed form (``"x1 X2"``).
"""

from onerel._core import (  # noqa: F401
    brown_criterion,
    check_small_cancellation,
    corner_count,
    corners,
    count_words,
    cyclic_reduce,
    embed_to_two_generators,
    embeddable_criterion,
    estimate_probability,
    event_registry,
    exponent_sums,
    free_reduce,
    hkiw_presentation,
    insert_commutator,
    is_bad,
    magnus_table,
    max_piece_length,
    render_svg,
    sample_words,
    shift_automorphism,
    substitute,
    touching_hyperplane,
    walk,
    word_family,
    z_extend,
)

__all__ = [
    "brown_criterion",
    "check_small_cancellation",
    "corner_count",
    "corners",
    "count_words",
    "cyclic_reduce",
    "embed_to_two_generators",
    "embeddable_criterion",
    "estimate_probability",
    "event_registry",
    "exponent_sums",
    "free_reduce",
    "hkiw_presentation",
    "insert_commutator",
    "is_bad",
    "magnus_table",
    "max_piece_length",
    "render_svg",
    "sample_words",
    "shift_automorphism",
    "substitute",
    "touching_hyperplane",
    "walk",
    "word_family",
    "z_extend",
]

__version__ = "0.1.0"
