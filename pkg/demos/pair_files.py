"""The plain-text pair format, round trips, and parse diagnostics."""

from cross_sperner import (
    GroundSet,
    ParseError,
    balanced_split,
    format_family_file,
    parse_family_file,
    type_xy,
)

SAMPLE = """\
# hand-written pair over {1..4}
n=4

1 2
1 2 3
---
3 4
1 3 4
"""

BROKEN = "n=3\n1 2\n2 7\n---\n3\n"


def main() -> None:
    pair = parse_family_file(SAMPLE)
    print("parsed:", pair)
    print("\nround trip (comments drop out, members sort):")
    print(format_family_file(pair))

    constructed = type_xy(balanced_split(GroundSet(5)))
    text = format_family_file(constructed)
    print("a constructed pair serializes and reparses to itself:",
          parse_family_file(text) == constructed)

    print("\nparse errors carry 1-based line numbers:")
    try:
        parse_family_file(BROKEN)
    except ParseError as exc:
        print(f"  {exc} (line_number attribute = {exc.line_number})")


if __name__ == "__main__":
    main()
