"""Integral structure: tableaux, lattice points, Kostka numbers, Ehrhart counts.

Integral members of GT(lambda, mu) correspond one-to-one with
semistandard Young tableaux of shape lambda and content mu: reading the
pattern rows bottom-up as a growing chain of partitions, the cells added
by row j are filled with the letter j.  Lattice points are enumerated
directly from the interlacing and row-sum constraints, and the Kostka
number is their count.

The dilation counting function m -> #(GT(m*lambda, m*mu) lattice
points) agrees with a single polynomial; `ehrhart_polynomial`
interpolates it exactly and re-checks the interpolant at extra
dilations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import GTPattern, PolytopeSpec, rational_to_json
from .errors import InputError, ShapeError


@dataclass(frozen=True)
class Tableau:
    """Semistandard Young tableau: weakly increasing rows, strictly
    increasing columns, positive integer entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for r, row in enumerate(self.rows):
            if not row:
                raise ShapeError(f"tableau row {r + 1} is empty; drop empty rows")
            if any(not isinstance(v, int) or isinstance(v, bool) or v < 1 for v in row):
                raise ShapeError(f"tableau row {r + 1} has a non-positive-integer entry")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ShapeError(f"tableau row {r + 1} is not weakly increasing")
        for r, (row, below) in enumerate(zip(self.rows, self.rows[1:])):
            if len(below) > len(row):
                raise ShapeError(f"tableau shape is not weakly decreasing at row {r + 1}")
            if any(row[c] >= below[c] for c in range(len(below))):
                raise ShapeError(f"column not strictly increasing between rows {r + 1} and {r + 2}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    def content(self, n: Optional[int] = None) -> tuple[int, ...]:
        """Multiplicity vector of the letters 1..n."""
        top = n if n is not None else max((v for row in self.rows for v in row), default=0)
        counts = [0] * top
        for row in self.rows:
            for v in row:
                if v > top:
                    raise InputError(f"tableau entry {v} exceeds n={top}")
                counts[v - 1] += 1
        return tuple(counts)

    @classmethod
    def from_json(cls, obj) -> "Tableau":
        rows = obj["rows"] if isinstance(obj, dict) else obj
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ShapeError("tableau JSON must be a list of rows (or {'rows': [...]})")
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(row) for row in self.rows]}


def pattern_to_tableau(x: GTPattern) -> Tableau:
    """The tableau whose letter-j cells are the boxes added by pattern row j."""
    if not x.is_integral():
        raise InputError("only integral patterns correspond to tableaux")
    n = x.n
    filling: list[list[int]] = [[] for _ in range(n)]
    prev = [0] * n
    for j in range(1, n + 1):
        cur = [int(v) for v in x.row(j)] + [0] * (n - j)
        for i in range(n):
            if cur[i] < prev[i]:
                raise InputError(f"row {j} does not contain row {j - 1}: pattern invalid")
            filling[i].extend([j] * (cur[i] - prev[i]))
        prev = cur
    return Tableau(tuple(tuple(row) for row in filling if row))


def tableau_to_pattern(t: Tableau, n: int) -> GTPattern:
    """Inverse of `pattern_to_tableau`: row j collects counts of letters <= j."""
    if any(v > n for row in t.rows for v in row):
        raise InputError(f"tableau entries exceed n={n}")
    rows = []
    for j in range(1, n + 1):
        row = []
        for i in range(1, j + 1):
            tab_row = t.rows[i - 1] if i <= len(t.rows) else ()
            row.append(Fraction(sum(1 for v in tab_row if v <= j)))
        rows.append(tuple(row))
    return GTPattern(tuple(rows))


def enumerate_lattice_points(spec: PolytopeSpec) -> list[GTPattern]:
    """All integral members of GT(spec), duplicate-free.

    Rows are generated top-down (row n is pinned to lambda), each row an
    integer vector interlacing the one above with the prescribed sum;
    the output is sorted lexicographically by rows bottom-up.
    """
    n = spec.n
    lam = spec.lam
    targets = spec.row_targets()
    if sum(lam) != targets[-1] or any(v < 0 for v in lam):
        return []
    results: list[tuple[tuple[int, ...], ...]] = []

    def descend(stack: list[tuple[int, ...]]) -> None:
        j = n - len(stack)  # length of the next row down
        if j == 0:
            results.append(tuple(reversed(stack)))
            return
        above = stack[-1]
        target = targets[j - 1]
        los = [above[i + 1] for i in range(j)]
        his = [above[i] for i in range(j)]
        lo_suffix = [0] * (j + 1)
        hi_suffix = [0] * (j + 1)
        for i in range(j - 1, -1, -1):
            lo_suffix[i] = lo_suffix[i + 1] + los[i]
            hi_suffix[i] = hi_suffix[i + 1] + his[i]

        row: list[int] = []

        def pick(idx: int, acc: int) -> None:
            if idx == j:
                descend(stack + [tuple(row)])
                return
            for a in range(los[idx], his[idx] + 1):
                rest = target - acc - a
                if lo_suffix[idx + 1] <= rest <= hi_suffix[idx + 1]:
                    row.append(a)
                    pick(idx + 1, acc + a)
                    row.pop()

        pick(0, 0)

    descend([tuple(lam)])
    results.sort()
    return [GTPattern(tuple(tuple(Fraction(v) for v in row) for row in rows))
            for rows in results]


def enumerate_tableaux(shape: Sequence[int], content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of the given shape and content.

    Direct cell-by-cell backtracking, independent of the lattice-point
    enumeration; intended for cross-checking counts on small inputs.
    """
    shape = [int(v) for v in shape if int(v) > 0]
    if any(a < b for a, b in zip(shape, shape[1:])):
        return []
    letters = len(content)
    remaining = [int(c) for c in content]
    if sum(remaining) != sum(shape) or any(c < 0 for c in remaining):
        return []
    grid = [[0] * width for width in shape]
    out: list[Tableau] = []
    cells = [(r, c) for r, width in enumerate(shape) for c in range(width)]

    def fill(pos: int) -> None:
        if pos == len(cells):
            out.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        r, c = cells[pos]
        low = grid[r][c - 1] if c else 1
        if r:
            low = max(low, grid[r - 1][c] + 1)
        for v in range(low, letters + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                fill(pos + 1)
                grid[r][c] = 0
                remaining[v - 1] += 1

    if shape:
        fill(0)
    else:
        out.append(Tableau(()))
    return out


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of lattice points of GT(lam, mu) = #SSYT(lam, mu)."""
    if len(lam) != len(mu):
        raise InputError("lambda and mu must have equal lengths")
    return len(enumerate_lattice_points(PolytopeSpec(tuple(lam), tuple(mu))))


@dataclass(frozen=True)
class EhrhartSample:
    m: int
    count: int

    def to_json(self) -> dict:
        return {"m": self.m, "count": self.count}


def ehrhart_values(spec: PolytopeSpec, m_max: int) -> list[EhrhartSample]:
    """Lattice-point counts of the dilations GT(m*lambda, m*mu), m = 1..m_max."""
    if m_max < 1:
        raise InputError(f"m_max must be at least 1, got {m_max}")
    return [EhrhartSample(m, len(enumerate_lattice_points(spec.dilate(m))))
            for m in range(1, m_max + 1)]


def _interpolate(points: Sequence[tuple[int, int]]) -> list[Fraction]:
    """Exact coefficients (ascending degree) of the interpolating polynomial."""
    coeffs = [Fraction(0)] * len(points)
    for xi, yi in points:
        # Lagrange basis polynomial for xi, expanded incrementally
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xj * basis[t + 1]
        scale = Fraction(yi) / denom
        for t, b in enumerate(basis):
            coeffs[t] += scale * b
    return coeffs


def evaluate_polynomial(coeffs: Sequence[Fraction], m: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(list(coeffs)):
        acc = acc * m + c
    return acc


@dataclass(frozen=True)
class EhrhartReport:
    """Interpolated counting polynomial plus its verification record."""

    degree: int
    coefficients: tuple[Fraction, ...]
    samples: tuple[EhrhartSample, ...]
    checks: tuple[dict, ...]
    all_match: bool

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": [rational_to_json(c) for c in self.coefficients],
            "samples": [s.to_json() for s in self.samples],
            "checks": list(self.checks),
            "all_match": self.all_match,
        }


def ehrhart_polynomial(spec: PolytopeSpec, degree_hint: Optional[int] = None,
                       extra_checks: int = 3) -> EhrhartReport:
    """Interpolate the dilation counting function and verify the interpolant.

    The interpolation degree D is the polytope dimension (computed from
    the enumerated vertices unless ``degree_hint`` overrides it); counts
    at m = 1..D+1 determine the polynomial, which is then compared
    against the true counts at ``extra_checks`` further dilations.  A
    mismatch is reported, never swallowed.
    """
    if degree_hint is not None:
        degree = degree_hint
    else:
        from .oracle import polytope_dimension

        degree = polytope_dimension(spec)
        if degree < 0:
            raise InputError("polytope is empty; no counting polynomial exists")
    if degree < 0:
        raise InputError(f"degree hint must be nonnegative, got {degree}")
    samples = ehrhart_values(spec, degree + 1 + extra_checks)
    base = [(s.m, s.count) for s in samples[:degree + 1]]
    coeffs = _interpolate(base)
    checks = []
    all_match = True
    for s in samples[degree + 1:]:
        predicted = evaluate_polynomial(coeffs, s.m)
        match = predicted == s.count
        all_match = all_match and match
        checks.append({"m": s.m, "expected": s.count,
                       "interpolated": rational_to_json(predicted), "match": match})
    return EhrhartReport(degree, tuple(coeffs), tuple(samples), tuple(checks), all_match)
