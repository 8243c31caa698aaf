"""Text codecs for words, graphs, dissections and factorization files."""

from surface_bundles.formats.bundle import (  # noqa: F401
    format_bundle,
    parse_bundle,
    read_bundle,
    write_bundle,
)
from surface_bundles.formats.dissection import format_dissection, parse_dissection  # noqa: F401
from surface_bundles.formats.graph import format_graph_text, parse_graph_text  # noqa: F401
from surface_bundles.formats.words import (  # noqa: F401
    format_braid_text,
    format_braid_word,
    format_symbol_word,
    format_twist_text,
    format_twist_word,
    parse_braid_text,
    parse_braid_word,
    parse_symbol_word,
    parse_twist_text,
    parse_twist_word,
)
