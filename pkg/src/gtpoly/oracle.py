"""Independent polyhedral route: tight-constraint ranks, vertex
enumeration, and member sampling.

Everything here works directly with the defining linear system of
GT(lambda, mu) -- top-row and row-sum equalities plus nonnegativity and
interlacing inequalities -- and never looks at tilings, so its answers
cross-check the tiling-based certification independently.

Vertex enumeration restricts to the affine hull of the equality system
and runs an exact double-description sweep over the homogenized
inequality cone.  It is guarded to pattern sizes n <= 6 by default
(override with the GTPOLY_SCALE_GUARD environment variable, at your own
risk: the ray count grows quickly).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .combinatorics import enumerate_lattice_points
from .core import GTPattern, PolytopeSpec, pattern_cells, require_membership
from .errors import InputError, ScaleGuardError, VerificationError

DEFAULT_SCALE_GUARD = 6


def scale_guard() -> int:
    value = os.environ.get("GTPOLY_SCALE_GUARD")
    return int(value) if value else DEFAULT_SCALE_GUARD


@dataclass(frozen=True)
class ConstraintSystem:
    """The defining equalities and inequalities of GT(lambda, mu).

    Coordinates follow the cell scan order (bottom row to top, left to
    right).  Inequality rows mean ``coeffs . x >= rhs``.
    """

    n: int
    cells: tuple[tuple[int, int], ...]
    equalities: tuple[tuple[tuple[int, ...], int], ...]
    inequalities: tuple[tuple[tuple[int, ...], int], ...]

    def coordinates(self, x: GTPattern) -> list[Fraction]:
        return [x.entry(i, j) for (i, j) in self.cells]

    def pattern(self, coords: Sequence[Fraction]) -> GTPattern:
        rows = []
        pos = 0
        for j in range(1, self.n + 1):
            rows.append(tuple(Fraction(v) for v in coords[pos:pos + j]))
            pos += j
        return GTPattern(tuple(rows))


def constraint_system(spec: PolytopeSpec) -> ConstraintSystem:
    n = spec.n
    cells = tuple(pattern_cells(n))
    index = {cell: k for k, cell in enumerate(cells)}
    nvars = len(cells)

    def unit(cell, value=1):
        row = [0] * nvars
        row[index[cell]] = value
        return row

    equalities = []
    for i in range(1, n + 1):
        equalities.append((tuple(unit((i, n))), spec.lam[i - 1]))
    equalities.append((tuple(unit((1, 1))), spec.mu[0]))
    for j in range(2, n + 1):
        row = [0] * nvars
        for i in range(1, j + 1):
            row[index[(i, j)]] = 1
        for i in range(1, j):
            row[index[(i, j - 1)]] = -1
        equalities.append((tuple(row), spec.mu[j - 1]))

    inequalities = []
    for cell in cells:
        inequalities.append((tuple(unit(cell)), 0))
    for j in range(1, n):
        for i in range(1, j + 1):
            row = unit((i, j + 1))
            row[index[(i, j)]] -= 1
            inequalities.append((tuple(row), 0))
            row = unit((i, j))
            row[index[(i + 1, j + 1)]] -= 1
            inequalities.append((tuple(row), 0))
    return ConstraintSystem(n, cells, tuple(equalities), tuple(inequalities))


def face_dimension_oracle(x: GTPattern, spec: PolytopeSpec) -> int:
    """Minimal-face dimension from tight constraints alone.

    The minimal face containing a member is the solution set of the
    equalities together with every inequality that is tight at the
    member; its dimension is the ambient dimension minus the rank of
    that system.
    """
    require_membership(x, spec)
    cs = constraint_system(spec)
    coords = cs.coordinates(x)
    tight = [row for row, rhs in cs.equalities]
    for row, rhs in cs.inequalities:
        if sum(c * v for c, v in zip(row, coords)) == rhs:
            tight.append(row)
    return len(cs.cells) - linalg.rank(tight, cols=len(cs.cells))


def _dot(row: Sequence[int], vec: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(row, vec))


def _dd_extreme_rays(rows: list[tuple[int, ...]], dim: int) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone {z : row . z >= 0 for all rows}.

    Standard double-description sweep: start from a simplicial subcone
    cut out by `dim` independent rows, then add the remaining rows one
    at a time, keeping exact integer ray vectors and combinatorial
    tight-set adjacency.
    """
    selected: list[int] = []
    elim: list[list[Fraction]] = []
    for idx, row in enumerate(rows):
        vec = [Fraction(v) for v in row]
        for basis_row in elim:
            lead = next((k for k, v in enumerate(basis_row) if v != 0), None)
            if lead is not None and vec[lead] != 0:
                f = vec[lead] / basis_row[lead]
                vec = [a - f * b for a, b in zip(vec, basis_row)]
        if any(v != 0 for v in vec):
            elim.append(vec)
            selected.append(idx)
            if len(selected) == dim:
                break
    if len(selected) < dim:
        raise VerificationError("inequality normals do not span; cone is not pointed")

    order = selected + [i for i in range(len(rows)) if i not in set(selected)]
    base = [list(rows[i]) for i in selected]
    rays: list[tuple[int, ...]] = []
    for j in range(dim):
        rhs = [Fraction(1 if i == j else 0) for i in range(dim)]
        col = linalg.solve(base, rhs, cols=dim)
        rays.append(linalg.primitive_integer(col, fix_sign=False))

    def tight_mask(vec: tuple[int, ...], upto: int) -> int:
        mask = 0
        for pos in range(upto):
            if _dot(rows[order[pos]], vec) == 0:
                mask |= 1 << pos
        return mask

    current: list[tuple[tuple[int, ...], int]] = [
        (r, tight_mask(r, dim)) for r in rays
    ]
    for pos in range(dim, len(order)):
        row = rows[order[pos]]
        vals = [_dot(row, vec) for vec, _ in current]
        if all(v >= 0 for v in vals):
            current = [
                (vec, mask | (1 << pos) if v == 0 else mask)
                for (vec, mask), v in zip(current, vals)
            ]
            continue
        keep = []
        positives = []
        negatives = []
        for (vec, mask), v in zip(current, vals):
            if v > 0:
                keep.append((vec, mask))
                positives.append((vec, mask, v))
            elif v == 0:
                keep.append((vec, mask | (1 << pos)))
            else:
                negatives.append((vec, mask, v))
        fresh: dict[tuple[int, ...], int] = {}
        for pvec, pmask, pval in positives:
            for nvec, nmask, nval in negatives:
                common = pmask & nmask
                adjacent = True
                for ovec, omask in current:
                    if ovec is pvec or ovec is nvec:
                        continue
                    if common & ~omask == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [pval * b - nval * a for a, b in zip(pvec, nvec)]
                new_vec = linalg.primitive_integer(
                    [Fraction(v) for v in combo], fix_sign=False)
                if new_vec not in fresh:
                    fresh[new_vec] = tight_mask(new_vec, pos + 1)
        current = keep + list(fresh.items())
    return [vec for vec, _ in current]


def enumerate_vertices(spec: PolytopeSpec) -> list[GTPattern]:
    """Every vertex of GT(spec), exactly, in canonical order.

    Solves the equality system, rewrites the inequalities on the affine
    hull, and extracts the extreme rays of the homogenized cone.  Empty
    polytopes give an empty list.  Guarded to n <= 6 by default.
    """
    guard = scale_guard()
    if spec.n > guard:
        raise ScaleGuardError(
            f"vertex enumeration guarded to n <= {guard} (got n={spec.n}); "
            "set GTPOLY_SCALE_GUARD to override")
    cs = constraint_system(spec)
    nvars = len(cs.cells)
    eq_rows = [list(row) for row, _ in cs.equalities]
    eq_rhs = [Fraction(rhs) for _, rhs in cs.equalities]
    x0 = linalg.solve(eq_rows, eq_rhs, cols=nvars)
    if x0 is None:
        return []
    basis = linalg.kernel_basis(eq_rows, cols=nvars)
    d = len(basis)
    if d == 0:
        point = cs.pattern(x0)
        ok = all(sum(c * v for c, v in zip(row, x0)) >= rhs
                 for row, rhs in cs.inequalities)
        return [point] if ok else []

    projected: dict[tuple[int, ...], None] = {}
    for row, rhs in cs.inequalities:
        normal = [Fraction(_dot(row, b)) for b in basis]
        offset = Fraction(rhs) - sum((c * v for c, v in zip(row, x0)), Fraction(0))
        if all(v == 0 for v in normal):
            if offset > 0:
                return []
            continue
        hom = linalg.primitive_integer([-offset] + normal, fix_sign=False)
        projected.setdefault(hom)
    hom_rows = [tuple([1] + [0] * d)] + list(projected)

    rays = _dd_extreme_rays(hom_rows, d + 1)
    patterns = []
    for ray in rays:
        if ray[0] <= 0:
            raise VerificationError(
                "double description produced a recession ray for a bounded polytope")
        coords = list(x0)
        for t_val, b in zip(ray[1:], basis):
            scale = Fraction(t_val, ray[0])
            coords = [c + scale * bv for c, bv in zip(coords, b)]
        pattern = cs.pattern(coords)
        require_membership(pattern, spec)
        patterns.append(pattern)
    patterns.sort(key=lambda p: p.rows)
    return patterns


def polytope_dimension(spec: PolytopeSpec) -> int:
    """Dimension of GT(spec): affine rank of its vertex set (-1 if empty)."""
    vertices = enumerate_vertices(spec)
    if not vertices:
        return -1
    cs = constraint_system(spec)
    first = cs.coordinates(vertices[0])
    diffs = [
        [a - b for a, b in zip(cs.coordinates(v), first)]
        for v in vertices[1:]
    ]
    if not diffs:
        return 0
    return linalg.rank(diffs, cols=len(cs.cells))


def sample_points(spec: PolytopeSpec, count: int, seed: int) -> list[GTPattern]:
    """Deterministic members: lattice points, midpoints, vertex combinations.

    Cycles through the three kinds, falling back to vertex combinations
    when the polytope has no lattice points.  Every output is checked
    for membership before it is returned.
    """
    vertices = enumerate_vertices(spec)
    if not vertices:
        raise InputError("cannot sample from an empty polytope")
    lattice = enumerate_lattice_points(spec)
    rng = random.Random(seed)
    cs = constraint_system(spec)
    vertex_coords = [cs.coordinates(v) for v in vertices]
    lattice_coords = [cs.coordinates(p) for p in lattice]
    out = []
    for idx in range(count):
        kind = idx % 3
        if kind == 0 and lattice:
            coords = list(lattice_coords[rng.randrange(len(lattice))])
        elif kind == 1 and lattice:
            a = rng.randrange(len(lattice))
            b = rng.randrange(len(lattice))
            if len(lattice) > 1:
                while b == a:
                    b = rng.randrange(len(lattice))
            coords = [(u + v) / 2 for u, v in zip(lattice_coords[a], lattice_coords[b])]
        else:
            picks = [rng.randrange(len(vertices)) for _ in range(1 + rng.randrange(3))]
            weights = [1 + rng.randrange(5) for _ in picks]
            total = sum(weights)
            coords = [Fraction(0)] * len(cs.cells)
            for p, w in zip(picks, weights):
                coords = [c + Fraction(w, total) * v
                          for c, v in zip(coords, vertex_coords[p])]
        pattern = cs.pattern(coords)
        require_membership(pattern, spec)
        out.append(pattern)
    return out
