"""The ``equicolor v1`` coloring file format.

Bit-exact layout, designed so golden files diff cleanly:

* line 1: ``equicolor v1``
* line 2: ``m=<m> n=<n> k=<k>``
* lines 3..k+2: ``<class-index>: (i,j) (i,j) ...`` — classes in index
  order starting at 1, vertices sorted row-major, single ASCII spaces,
  no trailing spaces.  An empty class is written as ``<class-index>:``.

Lines end with LF.  The writer always terminates the file with a final
LF; the parser accepts its absence but nothing else.  The parser checks
structure and grid bounds only — semantic judgement (partition,
independence, balance) belongs to :func:`equicolor.grid.verify`, and a
file may well parse cleanly yet describe an invalid coloring.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import ColoringFileError
from .grid import Coloring, Vertex

HEADER = "equicolor v1"

_SIZE_LINE = re.compile(r"^m=(\d+) n=(\d+) k=(\d+)$")
_CLASS_LINE = re.compile(r"^(\d+):((?: \(\d+,\d+\))*)$")
_VERTEX = re.compile(r"\((\d+),(\d+)\)")


def format_coloring(coloring: Coloring) -> str:
    """Serialize a coloring, normalizing vertex order within classes."""
    lines = [HEADER, f"m={coloring.m} n={coloring.n} k={coloring.k}"]
    for index, cls in enumerate(coloring.classes, start=1):
        if cls:
            cells = " ".join(f"({i},{j})" for i, j in sorted(cls))
            lines.append(f"{index}: {cells}")
        else:
            lines.append(f"{index}:")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    """Parse ``equicolor v1`` text into a Coloring.

    Raises:
        ColoringFileError: on any structural defect, with the 1-based
            line number of the first offending line.
    """
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # the canonical trailing LF
    if not lines or lines[0] != HEADER:
        raise ColoringFileError(f"expected header {HEADER!r}", 1)
    if len(lines) < 2:
        raise ColoringFileError("missing size line 'm=<m> n=<n> k=<k>'", 2)
    size_match = _SIZE_LINE.match(lines[1])
    if size_match is None:
        raise ColoringFileError(
            f"malformed size line {lines[1]!r}; expected 'm=<m> n=<n> k=<k>'", 2
        )
    m, n, k = (int(g) for g in size_match.groups())
    if m < 1 or n < 1 or k < 1:
        raise ColoringFileError(f"m, n, k must all be >= 1, got m={m} n={n} k={k}", 2)
    if len(lines) != 2 + k:
        raise ColoringFileError(
            f"expected exactly {k} class lines for k={k}, found {len(lines) - 2}",
            min(len(lines), 2 + k) + 1,
        )
    classes: list[tuple[Vertex, ...]] = []
    for pos in range(k):
        line_no = 3 + pos
        line = lines[2 + pos]
        class_match = _CLASS_LINE.match(line)
        if class_match is None:
            raise ColoringFileError(
                f"malformed class line {line!r}; expected "
                f"'<class-index>: (i,j) (i,j) ...'",
                line_no,
            )
        index = int(class_match.group(1))
        if index != pos + 1:
            raise ColoringFileError(
                f"class index {index} out of order; expected {pos + 1}", line_no
            )
        cells = []
        for vm in _VERTEX.finditer(class_match.group(2)):
            i, j = int(vm.group(1)), int(vm.group(2))
            if not (1 <= i <= m and 1 <= j <= n):
                raise ColoringFileError(
                    f"vertex ({i},{j}) outside the {m}x{n} grid", line_no
                )
            cells.append(Vertex(i, j))
        classes.append(tuple(cells))
    return Coloring(m, n, tuple(classes))


def write_coloring(path: str | Path, coloring: Coloring) -> None:
    """Write the coloring to ``path`` in canonical form (LF endings)."""
    Path(path).write_bytes(format_coloring(coloring).encode("ascii"))


def read_coloring(path: str | Path) -> Coloring:
    """Read and parse a coloring file."""
    return parse_coloring(Path(path).read_text(encoding="ascii"))
