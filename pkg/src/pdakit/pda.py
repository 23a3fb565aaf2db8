"""Placement delivery arrays: the grid type, validator, and file formats.

A PDA with parameters (K, F, Q, S) is an F x K grid where each cell is either
a star or a symbol in 1..S.  Stars mark cached rows; each symbol names one
broadcast transmission.  The validator checks the three defining conditions:

  C1: every column holds exactly Q stars,
  C2: every symbol 1..S occurs somewhere,
  C3: two cells sharing a symbol sit in distinct rows and columns, and both
      "crossing" cells are stars.
"""

from dataclasses import dataclass
from fractions import Fraction

STAR = 0  # grid sentinel for '*'; real symbols are 1..s


class PdaFormatError(ValueError):
    """Malformed PDA text or JSON, as opposed to a condition violation."""


@dataclass(frozen=True)
class Pda:
    k: int  # columns (users)
    f: int  # rows (packets per file)
    q: int  # declared stars per column
    s: int  # declared number of symbols
    grid: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.grid) != self.f:
            raise ValueError(f"grid has {len(self.grid)} rows, declared F={self.f}")
        for row in self.grid:
            if len(row) != self.k:
                raise ValueError(f"grid row has {len(row)} entries, declared K={self.k}")
            if any(not isinstance(v, int) or v < 0 for v in row):
                raise ValueError("grid entries must be STAR or positive symbol ints")


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    condition: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_pda(p: Pda) -> ValidationReport:
    """Exhaustively check the declared parameters and conditions C1, C2, C3."""
    if min(p.k, p.f, p.q, p.s) < 1:
        return ValidationReport(False, "params", "K, F, Q, S must all be positive")
    if p.q >= p.f:
        return ValidationReport(False, "params", f"need Q < F, got Q={p.q}, F={p.f}")
    for j, row in enumerate(p.grid):
        for k, v in enumerate(row):
            if v != STAR and not 1 <= v <= p.s:
                return ValidationReport(False, "range",
                    f"cell ({j},{k}) holds {v}, outside 1..{p.s}")
    for k in range(p.k):
        stars = sum(1 for j in range(p.f) if p.grid[j][k] == STAR)
        if stars != p.q:
            return ValidationReport(False, "C1",
                f"column {k} has {stars} stars, declared Q={p.q}")
    cells: dict[int, list[tuple[int, int]]] = {}
    for j, row in enumerate(p.grid):
        for k, v in enumerate(row):
            if v != STAR:
                cells.setdefault(v, []).append((j, k))
    for sym in range(1, p.s + 1):
        if sym not in cells:
            return ValidationReport(False, "C2", f"symbol {sym} never occurs")
    for sym, occ in cells.items():
        for a in range(len(occ)):
            j1, k1 = occ[a]
            for b in range(a + 1, len(occ)):
                j2, k2 = occ[b]
                if j1 == j2 or k1 == k2:
                    return ValidationReport(False, "C3",
                        f"symbol {sym} repeats in a row or column at ({j1},{k1}) and ({j2},{k2})")
                if p.grid[j1][k2] != STAR or p.grid[j2][k1] != STAR:
                    return ValidationReport(False, "C3",
                        f"cells ({j1},{k1}) and ({j2},{k2}) share symbol {sym} "
                        f"but a crossing cell is not a star")
    return ValidationReport(True)


def scheme_parameters(p: Pda) -> tuple[int, int, Fraction, Fraction]:
    """(K, subpacketization F, cache fraction M/N, rate R), fractions exact."""
    return p.k, p.f, Fraction(p.q, p.f), Fraction(p.s, p.f)


def canonical_relabel(p: Pda) -> Pda:
    """Renumber symbols 1..S in first-occurrence row-major order."""
    mapping: dict[int, int] = {}
    rows = []
    for row in p.grid:
        out = []
        for v in row:
            if v == STAR:
                out.append(STAR)
            else:
                if v not in mapping:
                    mapping[v] = len(mapping) + 1
                out.append(mapping[v])
        rows.append(tuple(out))
    return Pda(p.k, p.f, p.q, len(mapping), tuple(rows))


# --- text format ----------------------------------------------------------
#
# First line: "K F Q S".  Then F lines of K whitespace-separated tokens, each
# "*" or a decimal symbol.


def format_pda(p: Pda) -> str:
    lines = [f"{p.k} {p.f} {p.q} {p.s}"]
    for row in p.grid:
        lines.append(" ".join("*" if v == STAR else str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_pda(text: str) -> Pda:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PdaFormatError("empty PDA file")
    header = lines[0].split()
    if len(header) != 4:
        raise PdaFormatError(f"header must be 'K F Q S', got {lines[0]!r}")
    try:
        k, f, q, s = (int(x) for x in header)
    except ValueError:
        raise PdaFormatError(f"non-integer header field in {lines[0]!r}") from None
    if len(lines) - 1 != f:
        raise PdaFormatError(f"expected {f} grid rows, found {len(lines) - 1}")
    grid = []
    for ln in lines[1:]:
        row = []
        for tok in ln.split():
            if tok == "*":
                row.append(STAR)
            elif tok.isdigit() and tok[0] != "0":
                row.append(int(tok))
            else:
                raise PdaFormatError(f"bad token {tok!r}; want '*' or a positive decimal")
        if len(row) != k:
            raise PdaFormatError(f"row {ln!r} has {len(row)} entries, expected {k}")
        grid.append(tuple(row))
    return Pda(k, f, q, s, tuple(grid))


# --- JSON variant ---------------------------------------------------------


def pda_to_json(p: Pda, provenance: dict | None = None) -> dict:
    out = {
        "K": p.k, "F": p.f, "Q": p.q, "S": p.s,
        "grid": [["*" if v == STAR else v for v in row] for row in p.grid],
    }
    if provenance is not None:
        out["provenance"] = provenance
    return out


def pda_from_json(obj: dict) -> Pda:
    try:
        k, f, q, s = (int(obj[key]) for key in ("K", "F", "Q", "S"))
        grid = []
        for row in obj["grid"]:
            cells = []
            for v in row:
                if v == "*":
                    cells.append(STAR)
                elif isinstance(v, int) and v > 0:
                    cells.append(v)
                else:
                    raise PdaFormatError(f"bad grid value {v!r}")
            grid.append(tuple(cells))
    except PdaFormatError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise PdaFormatError(f"malformed PDA object: {exc}") from None
    try:
        return Pda(k, f, q, s, tuple(grid))
    except ValueError as exc:
        raise PdaFormatError(str(exc)) from None
