"""Turing machine lab: run, encode and check the universal machines."""

from ._tmlab import (
    CodecError,
    ContractError,
    EncodingError,
    Machine,
    ParseError,
    bundled_ids,
    decode_config,
    encode,
    encode_program,
    encoded_length,
    experiment,
    load_machine,
    parse_table,
    rna_decode,
    rna_encode,
    run,
    stats,
    trace,
    verify,
)

__all__ = [
    "CodecError",
    "ContractError",
    "EncodingError",
    "Machine",
    "ParseError",
    "bundled_ids",
    "decode_config",
    "encode",
    "encode_program",
    "encoded_length",
    "experiment",
    "load_machine",
    "parse_table",
    "rna_decode",
    "rna_encode",
    "run",
    "stats",
    "trace",
    "verify",
]
