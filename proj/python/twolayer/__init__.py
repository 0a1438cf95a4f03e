"""Two-layer comparator-network prefixes modulo symmetry.

Generation, counting and canonicalization of the two-layer prefixes relevant
to depth-optimal sorting-network search, with brute-force cross-checks.
"""

from twolayer._core import (
    Network,
    ResourceLimitError,
    apply,
    brute_force_table,
    check_conjecture,
    count_classes,
    enumerate_canonical_words,
    equivalent,
    first_layer_parberry,
    first_layer_reflective,
    g_count,
    generate_classes,
    is_canonical,
    is_redundant,
    is_saturated,
    is_saturated_syntactic,
    is_sorting_network,
    labeled_count,
    net_of_sentence,
    orbit_size,
    outputs,
    permute,
    read_network,
    reflect,
    reflect_sentence,
    reflect_word,
    sentence_of,
    untangle,
    word_saturation_check,
    write_network,
)

__all__ = [
    "Network",
    "ResourceLimitError",
    "apply",
    "brute_force_table",
    "check_conjecture",
    "count_classes",
    "enumerate_canonical_words",
    "equivalent",
    "first_layer_parberry",
    "first_layer_reflective",
    "g_count",
    "generate_classes",
    "is_canonical",
    "is_redundant",
    "is_saturated",
    "is_saturated_syntactic",
    "is_sorting_network",
    "labeled_count",
    "net_of_sentence",
    "orbit_size",
    "outputs",
    "permute",
    "read_network",
    "reflect",
    "reflect_sentence",
    "reflect_word",
    "sentence_of",
    "untangle",
    "word_saturation_check",
    "write_network",
]
