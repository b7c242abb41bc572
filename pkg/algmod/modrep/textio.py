"""Module bundle, permutation and subgroup-word files.

    module field=<p>^<k> [poly=<...>] dim=<n> gens=<g>
    <g matrix blocks>

    perm degree=<d> gens=<g>
    <g lines of 1-based images>

    words gens=<g> count=<w>
    <w lines of tokens i or i^-1, 1-based>

A module file defines its group by its own matrices, so modules read from a
file can be enumerated (faithful fixtures) and restricted along word files.
"""

import typing

from algmod.exactla import textio
from algmod.globals import errors
from algmod.modrep import groups
from algmod.modrep import modules


def parse_module(text: str, group: groups.GroupSpec = None) -> modules.ModuleRep:
    reader = textio.LineReader(text)
    number, line = reader.next()
    fields = textio.parse_header(line, "module", number)
    field = textio.header_field(fields, number)
    dim = textio.header_int(fields, "dim", number)
    ngens = textio.header_int(fields, "gens", number)
    action = []
    for _ in range(ngens):
        block_line = reader.line
        m = textio.read_matrix(reader)
        if m.field != field:
            msg = "Matrix over {} in a module over {}.".format(m.field, field)
            raise errors.ParseError(msg, block_line)
        if m.shape != (dim, dim):
            msg = "Matrix is {}x{} in a module of dimension {}.".format(
                m.rows, m.cols, dim
            )
            raise errors.ParseError(msg, block_line)
        if m.rank() != dim:
            raise errors.ParseError("Action matrix is singular.", block_line)
        action.append(m)
    if not reader.at_end():
        raise errors.ParseError("Trailing data after the last matrix.", reader.line)
    if group is None:
        group = groups.GroupSpec.from_matrices(action)
    return modules.ModuleRep(group, action, check=False, field=field, dim=dim)


def format_module(m: modules.ModuleRep) -> str:
    header = "module {} dim={} gens={}".format(m.field.header(), m.dim, m.group.ngens)
    return "\n".join([header] + [textio.format_matrix(a) for a in m.action]) + "\n"


def parse_permutations(text: str) -> groups.GroupSpec:
    reader = textio.LineReader(text)
    number, line = reader.next()
    fields = textio.parse_header(line, "perm", number)
    degree = textio.header_int(fields, "degree", number)
    ngens = textio.header_int(fields, "gens", number)
    perms = []
    for _ in range(ngens):
        row_number, row = reader.next()
        images = textio.parse_row(row, row_number, degree, degree + 1)
        perm = tuple(image - 1 for image in images)
        if not groups.is_permutation(perm, degree):
            msg = "Images {} don't form a permutation of 1..{}.".format(images, degree)
            raise errors.ParseError(msg, row_number)
        perms.append(perm)
    if not reader.at_end():
        raise errors.ParseError("Trailing data after the last permutation.", reader.line)
    return groups.GroupSpec.from_permutations(perms)


def format_permutations(g: groups.GroupSpec) -> str:
    lines = ["perm degree={} gens={}".format(g.degree, g.ngens)]
    lines.extend(" ".join(str(i + 1) for i in perm) for perm in g.realization)
    return "\n".join(lines) + "\n"


def parse_words(text: str) -> typing.Tuple[int, groups.SubgroupSpec]:
    """Returns the ambient generator count and the subgroup."""
    reader = textio.LineReader(text)
    number, line = reader.next()
    fields = textio.parse_header(line, "words", number)
    ngens = textio.header_int(fields, "gens", number)
    count = textio.header_int(fields, "count", number)
    words = []
    for _ in range(count):
        row_number, row = reader.next()
        try:
            words.append(groups.validate_word(groups.parse_word(row), ngens))
        except errors.BadWord as error:
            raise errors.ParseError(str(error), row_number)
    if not reader.at_end():
        raise errors.ParseError("Trailing data after the last word.", reader.line)
    return ngens, groups.SubgroupSpec(words, ngens)


def format_words(ngens: int, h: groups.SubgroupSpec) -> str:
    lines = ["words gens={} count={}".format(ngens, len(h))]
    lines.extend(groups.format_word(word) for word in h.words)
    return "\n".join(lines) + "\n"


def read_text(path: str) -> str:
    with open(path, "r") as f:
        return f.read()


def load_module(path: str) -> modules.ModuleRep:
    return parse_module(read_text(path))


def load_permutations(path: str) -> groups.GroupSpec:
    return parse_permutations(read_text(path))


def load_words(path: str) -> typing.Tuple[int, groups.SubgroupSpec]:
    return parse_words(read_text(path))
