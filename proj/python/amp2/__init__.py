"""Exact m=2 amplituhedron cell collections."""

from ._core import (
    bruhat_leq,
    cli,
    decperm,
    enumerate_explicit,
    generate_collection,
    le_diagram,
    length,
    parse_dotted,
    positive_subexpression,
    positroid,
    render_dotted,
    verify_recursive_identity,
    wj_word,
    word_to_perm,
)

__all__ = [
    "bruhat_leq",
    "cli",
    "decperm",
    "enumerate_explicit",
    "generate_collection",
    "le_diagram",
    "length",
    "parse_dotted",
    "positive_subexpression",
    "positroid",
    "render_dotted",
    "verify_recursive_identity",
    "wj_word",
    "word_to_perm",
]
