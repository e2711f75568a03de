"""Letter graphs: decoding, recognition, certificates, and obstruction search.

Thin wrapper over the C++ core. The main entry points are:

- ``parse_edge_list`` / ``parse_graph6`` and the ``Graph`` type
- ``decode(decoder, word)``: decode a word into a graph
- ``lettericity(graph, max_k=4, method="dp")``: certificate dict or ``None``
- ``verify(graph, decoder, word, order)``: realisation check
- ``linear_rankwidth(graph)``, ``cutrank(graph, vertices)``
- ``enumerate_graphs(n)``, ``is_obstruction(graph, k)``, ``find_obstructions(k, max_n)``
- ``bound_table(k)``, ``word_stats(word)``
"""

from ._core import (
    CapError,
    Graph,
    ParseError,
    bound_table,
    canonical_form,
    complement,
    cutrank,
    decode,
    enumerate_graphs,
    find_obstructions,
    induced_subgraph,
    is_critical,
    is_obstruction,
    lettericity,
    lettericity_value,
    linear_rankwidth,
    parse_edge_list,
    parse_graph6,
    to_edge_list,
    to_graph6,
    twin_classes,
    verify,
    word_stats,
)

__all__ = [
    "CapError",
    "Graph",
    "ParseError",
    "bound_table",
    "canonical_form",
    "complement",
    "cutrank",
    "decode",
    "enumerate_graphs",
    "find_obstructions",
    "induced_subgraph",
    "is_critical",
    "is_obstruction",
    "lettericity",
    "lettericity_value",
    "linear_rankwidth",
    "parse_edge_list",
    "parse_graph6",
    "to_edge_list",
    "to_graph6",
    "twin_classes",
    "verify",
    "word_stats",
]
