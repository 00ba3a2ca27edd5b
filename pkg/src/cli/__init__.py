from .app import main, build_parser
from .matrix_file import parse_matrix, load_matrix, serialize_matrix, format_decimal

__all__ = ["main", "build_parser", "parse_matrix", "load_matrix", "serialize_matrix", "format_decimal"]
