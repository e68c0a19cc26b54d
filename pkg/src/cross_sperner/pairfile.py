"""Plain-text serialization of family pairs.

The format is line oriented. Lines whose first non-blank character is
'#' are comments; blank lines are ignored. The first significant line
must read ``n=<int>``. Set lines follow, one per member: elements as
space-separated positive integers, or ``{}`` for the empty set. A single
``---`` line separates the first family from the second. Either section
may be empty. Files are read and written in ascending mask order, so
parse(format(pair)) == pair.
"""

from __future__ import annotations

import re

from .families import MAX_GROUND, Family, FamilyPair, GroundSet

_HEADER = re.compile(r"^n\s*=\s*(\d+)$")
SEPARATOR = "---"


class ParseError(ValueError):
    """Malformed pair file; carries the offending 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def _parse_set_line(lineno: int, line: str, ground: GroundSet) -> int:
    if line == "{}":
        return 0
    bits = 0
    for tok in line.split():
        try:
            el = int(tok)
        except ValueError:
            raise ParseError(lineno, f"not an integer: {tok!r}") from None
        if not 1 <= el <= ground.n:
            raise ParseError(
                lineno, f"element {el} out of range 1..{ground.n}"
            )
        bit = 1 << (el - 1)
        if bits & bit:
            raise ParseError(lineno, f"duplicate element {el} in set")
        bits |= bit
    return bits


def parse_family_file(text: str) -> FamilyPair:
    """Parse the text of a pair file. Raises ParseError on bad input."""
    ground = None
    sections: list[list[int]] = [[]]
    seen: list[set[int]] = [set()]
    laste = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        laste = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ground is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(lineno, "expected n=<int> header")
            n = int(m.group(1))
            if not 1 <= n <= MAX_GROUND:
                raise ParseError(
                    lineno, f"n must be between 1 and {MAX_GROUND}, got {n}"
                )
            ground = GroundSet(n)
            continue
        if line == SEPARATOR:
            if len(sections) == 2:
                raise ParseError(lineno, "more than one separator")
            sections.append([])
            seen.append(set())
            continue
        bits = _parse_set_line(lineno, line, ground)
        if bits in seen[-1]:
            raise ParseError(lineno, "duplicate set in family")
        seen[-1].add(bits)
        sections[-1].append(bits)
    if ground is None:
        raise ParseError(laste + 1, "missing n=<int> header")
    if len(sections) != 2:
        raise ParseError(laste + 1, "missing separator between families")
    return FamilyPair(
        Family.from_bits(ground, sections[0]),
        Family.from_bits(ground, sections[1]),
    )


def _format_set(ground: GroundSet, bits: int) -> str:
    if bits == 0:
        return "{}"
    return " ".join(str(e) for e in ground.elements_of(bits))


def format_family_file(pair: FamilyPair) -> str:
    """Render a pair to text; inverse of parse_family_file."""
    ground = pair.ground
    lines = [f"n={ground.n}"]
    lines += [_format_set(ground, m.bits) for m in pair.f.members]
    lines.append(SEPARATOR)
    lines += [_format_set(ground, m.bits) for m in pair.g.members]
    return "\n".join(lines) + "\n"
