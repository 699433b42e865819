"""Reading and writing integer sequences in OEIS b-file form.

A b-file is plain text: optional leading comment lines starting with
'#', then one "index value" pair per line with indices stepping by
exactly 1, and a trailing newline.  Values may be arbitrarily large.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .counting import Count, CountSequence


@dataclass(frozen=True)
class BFile:
    """Parsed or to-be-rendered b-file content."""

    entries: tuple[tuple[int, Count], ...]
    comments: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        indices = [i for i, _ in self.entries]
        for prev, cur in zip(indices, indices[1:]):
            if cur != prev + 1:
                raise ValueError(
                    f"b-file indices must step by 1, got {prev} then {cur}"
                )

    def render(self) -> str:
        lines = [f"# {c}" if c else "#" for c in self.comments]
        lines.extend(f"{i} {v}" for i, v in self.entries)
        return "\n".join(lines) + "\n"


def parse_bfile(text: str) -> BFile:
    """Parse b-file text, enforcing the index-step rule."""
    comments: list[str] = []
    entries: list[tuple[int, Count]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            if entries:
                raise ValueError(f"line {lineno}: comment after data lines")
            comments.append(line[1:].strip())
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer token in {raw!r}") from None
        entries.append((index, value))
    return BFile(tuple(entries), tuple(comments))


def bfile_from_sequence(
    sequence: CountSequence, offset: int = 1, comments: tuple[str, ...] = ()
) -> BFile:
    """b-file entries (n, count) for offset <= n <= the sequence end."""
    if not 0 <= offset <= sequence.n_max:
        raise ValueError(
            f"offset {offset} outside the computed range 0..{sequence.n_max}"
        )
    entries = tuple(
        (n, sequence[n]) for n in range(offset, sequence.n_max + 1)
    )
    return BFile(entries, comments)
