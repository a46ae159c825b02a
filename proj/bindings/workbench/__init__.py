"""Exact-arithmetic workbench for Hom-, biHom-, and dendriform-type algebras.

Documents are opaque handles produced by parse_document / parse_document_file;
check and construct return the same canonical JSON reports the CLI emits.
"""

from workbench._workbench import (
    ConstructionRefused,
    Document,
    all_check_ids,
    applicable_check_ids,
    check,
    construct,
    construction_ids,
    parse_document,
    parse_document_file,
    report_text,
    serialize_document,
)

__all__ = [
    "ConstructionRefused",
    "Document",
    "all_check_ids",
    "applicable_check_ids",
    "check",
    "construct",
    "construction_ids",
    "parse_document",
    "parse_document_file",
    "report_text",
    "serialize_document",
]
