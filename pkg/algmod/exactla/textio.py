"""Text format for matrices.

A block starts with a header line

    matrix field=<p>^<k> poly=<c0,...,ck> rows=<r> cols=<c>

(``poly`` only for k > 1) followed by r lines of c integers in [0, p^k).
Blank lines and lines starting with '#' are ignored everywhere. The header
parsing helpers are shared with the module and permutation formats.
"""

import typing

import numpy as np

from algmod.exactla import field as field_module
from algmod.exactla import matrix
from algmod.globals import errors


class LineReader(object):
    """Cursor over the significant lines of a text, with 1-based numbers."""

    def __init__(self, text: str) -> None:
        self.__lines = [
            (number, line.strip())
            for number, line in enumerate(text.splitlines(), start=1)
            if line.strip() and not line.strip().startswith("#")
        ]
        self.__position = 0

    @property
    def line(self) -> int:
        """Number of the next line (or of the last one at the end)."""
        if self.__position < len(self.__lines):
            return self.__lines[self.__position][0]
        return self.__lines[-1][0] if self.__lines else 0

    def at_end(self) -> bool:
        return self.__position >= len(self.__lines)

    def next(self) -> typing.Tuple[int, str]:
        if self.at_end():
            raise errors.ParseError("Unexpected end of input.", self.line)
        item = self.__lines[self.__position]
        self.__position += 1
        return item


def parse_header(line: str, kind: str, number: int) -> typing.Dict[str, str]:
    tokens = line.split()
    if not tokens or tokens[0] != kind:
        msg = "Expected a '{}' header and not '{}'.".format(kind, line)
        raise errors.ParseError(msg, number)
    fields = {}
    for token in tokens[1:]:
        key, sep, value = token.partition("=")
        if not sep or not value:
            msg = "Malformed header field '{}'.".format(token)
            raise errors.ParseError(msg, number)
        fields[key] = value
    return fields


def header_int(fields: dict, key: str, number: int) -> int:
    if key not in fields:
        msg = "Header misses the field '{}'.".format(key)
        raise errors.ParseError(msg, number)
    try:
        value = int(fields[key])
    except ValueError:
        msg = "Header field '{}' has to be an integer and not '{}'.".format(
            key, fields[key]
        )
        raise errors.ParseError(msg, number)
    if value < 0:
        msg = "Header field '{}' can't be negative.".format(key)
        raise errors.ParseError(msg, number)
    return value


def header_field(fields: dict, number: int) -> field_module.FieldSpec:
    if "field" not in fields:
        raise errors.ParseError("Header misses the field 'field'.", number)
    p, sep, k = fields["field"].partition("^")
    try:
        p, k = int(p), int(k) if sep else 1
        poly = None
        if k > 1:
            if "poly" not in fields:
                raise errors.ParseError(
                    "Extension fields need a 'poly' header field.", number
                )
            poly = tuple(int(c) for c in fields["poly"].split(","))
        return field_module.field_make(p, k, poly)
    except ValueError as error:
        if isinstance(error, errors.ParseError):
            raise
        raise errors.ParseError(str(error), number)


def parse_row(
    line: str, number: int, width: int, bound: int
) -> typing.List[int]:
    try:
        values = [int(token) for token in line.split()]
    except ValueError:
        msg = "Row '{}' doesn't consist of integers.".format(line)
        raise errors.ParseError(msg, number)
    if len(values) != width:
        msg = "Expected {} entries and not {}.".format(width, len(values))
        raise errors.ParseError(msg, number)
    for value in values:
        if not 0 <= value < bound:
            msg = "Entry {} is out of range [0, {}).".format(value, bound)
            raise errors.ParseError(msg, number)
    return values


def read_matrix(reader: LineReader) -> matrix.Matrix:
    number, line = reader.next()
    fields = parse_header(line, "matrix", number)
    field = header_field(fields, number)
    rows = header_int(fields, "rows", number)
    cols = header_int(fields, "cols", number)
    entries = np.zeros((rows, cols), dtype=np.int64)
    for r in range(rows):
        row_number, row = reader.next()
        entries[r] = parse_row(row, row_number, cols, field.order)
    return matrix.Matrix(field, entries)


def format_matrix(m: matrix.Matrix) -> str:
    lines = [
        "matrix {} rows={} cols={}".format(m.field.header(), m.rows, m.cols)
    ]
    lines.extend(" ".join(str(int(x)) for x in row) for row in m.entries)
    return "\n".join(lines)


def parse_matrices(text: str) -> typing.List[matrix.Matrix]:
    reader = LineReader(text)
    matrices = []
    while not reader.at_end():
        matrices.append(read_matrix(reader))
    return matrices


def format_matrices(matrices: typing.Sequence[matrix.Matrix]) -> str:
    return "\n".join(format_matrix(m) for m in matrices) + "\n"
