"""Minimal-face dimensions, vertex certification, and non-integrality
certificates, all through the tiling matrix.

The dimension of the minimal face of GT(lambda, mu) containing a member
x equals the kernel dimension of the tiling matrix of x.  A kernel
basis lifts to explicit face directions: spreading the k-th coordinate
of a kernel vector over the k-th free tile gives an array y with zero
row sums that vanishes on the fixed cells, and x +/- c*y stays in the
polytope for a small enough scale c.

Non-integral vertices are certified in both directions: a vertex with
entry denominators of lcm q yields an integer vector xi with
A xi = 0 (mod q) and a coordinate coprime to q, and conversely such a
vector plus an integral carrier pattern rebuilds a non-integral vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from . import linalg
from .core import (
    GTPattern,
    PolytopeSpec,
    membership,
    rational_to_json,
    require_membership,
    spec_of,
    validate_pattern,
)
from .errors import InputError, TilingDriftError, VerificationError
from .tiling import Tiling, compute_tiling, tiling_matrix_of

DirectionRows = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class FaceCertificate:
    """Kernel basis, face directions and a safe perturbation scale.

    ``face_directions[m]`` is a pattern-layout array (bottom-up rows,
    like GTPattern.rows) that is constant on each free tile and zero
    elsewhere; ``x + scale*y`` and ``x - scale*y`` are members for every
    direction y.  The directions span the linear space parallel to the
    minimal face containing x.
    """

    face_dimension: int
    kernel_basis: tuple[tuple[int, ...], ...]
    face_directions: tuple[DirectionRows, ...]
    scale: Fraction
    transcript: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "face_dimension": self.face_dimension,
            "kernel_basis": [list(v) for v in self.kernel_basis],
            "directions": [
                [[rational_to_json(v) for v in row] for row in reversed(rows)]
                for rows in self.face_directions
            ],
            "scale": rational_to_json(self.scale),
            "transcript": list(self.transcript),
        }


@dataclass(frozen=True)
class NonIntegralityCertificate:
    """Witness that a vertex is non-integral with denominator lcm q."""

    q: int
    xi: tuple[int, ...]
    unit_index: int

    def to_json(self) -> dict:
        return {"q": self.q, "xi": list(self.xi), "unit_index": self.unit_index}


@dataclass(frozen=True)
class ConstructionResult:
    """Outcome of rebuilding a (possibly non-integral) vertex."""

    pattern: GTPattern
    spec: PolytopeSpec
    non_integral: bool
    transcript: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "pattern": self.pattern.to_json(),
            "spec": self.spec.to_json(),
            "non_integral": self.non_integral,
            "transcript": list(self.transcript),
        }


def face_dimension(x: GTPattern, spec: PolytopeSpec) -> int:
    """Dimension of the minimal face of GT(spec) containing x."""
    require_membership(x, spec)
    a = tiling_matrix_of(compute_tiling(x))
    return a.cols - linalg.rank(a.entries, cols=a.cols)


def is_vertex(x: GTPattern, spec: PolytopeSpec) -> bool:
    """True iff x is a vertex, i.e. its tiling matrix has trivial kernel."""
    return face_dimension(x, spec) == 0


def direction_from_kernel_vector(tiling: Tiling, eps: Sequence[Fraction]) -> DirectionRows:
    """Pattern-layout array with eps[k] on free tile k and 0 elsewhere."""
    values = {}
    for k, tile_index in enumerate(tiling.free):
        for cell in tiling.tiles[tile_index]:
            values[cell] = Fraction(eps[k])
    return tuple(
        tuple(values.get((i, j), Fraction(0)) for i in range(1, j + 1))
        for j in range(1, tiling.n + 1)
    )


def _shifted(x: GTPattern, direction: DirectionRows, factor: Fraction) -> GTPattern:
    rows = tuple(
        tuple(v + factor * d for v, d in zip(row, drow))
        for row, drow in zip(x.rows, direction)
    )
    return GTPattern(rows)


def face_basis(x: GTPattern, spec: PolytopeSpec) -> FaceCertificate:
    """Explicit basis of the minimal face containing x.

    The perturbation scale is one third of the smallest gap between
    distinct entry values, divided by the largest kernel coordinate, so
    every direction stays strictly inside the half-gap bound that keeps
    x +/- scale*y inside the polytope.  The certificate is verified
    before it is returned.
    """
    require_membership(x, spec)
    til = compute_tiling(x)
    a = tiling_matrix_of(til)
    kernel = linalg.kernel_basis(a.entries, cols=a.cols)
    d = len(kernel)
    transcript = [{"check": "kernel-dimension", "pass": True, "dimension": d}]

    distinct = sorted(set(x.values()))
    gaps = [b - a_ for a_, b in zip(distinct, distinct[1:])]
    if d == 0 or not gaps:
        scale = Fraction(1)
    else:
        max_eps = max(abs(e) for vec in kernel for e in vec)
        scale = min(gaps) / 3 / max_eps

    directions = tuple(direction_from_kernel_vector(til, vec) for vec in kernel)
    for m, direction in enumerate(directions):
        ok_plus = membership(_shifted(x, direction, scale), spec)
        ok_minus = membership(_shifted(x, direction, -scale), spec)
        transcript.append({"check": f"membership x +/- scale*y[{m + 1}]",
                           "pass": ok_plus and ok_minus})
        if not (ok_plus and ok_minus):
            raise VerificationError(
                f"face direction {m + 1} leaves the polytope at scale {scale}")
    if kernel and linalg.rank(kernel) != d:
        raise VerificationError("kernel basis is not linearly independent")
    return FaceCertificate(d, tuple(kernel), directions, scale, tuple(transcript))


def nonintegrality_certificate(x: GTPattern, spec: PolytopeSpec
                               ) -> Optional[NonIntegralityCertificate]:
    """Certificate that the vertex x is non-integral, or None if integral.

    For a non-integral vertex with entry-denominator lcm q, the vector
    xi with xi_k = q * (value of free tile k) mod q satisfies
    A xi = 0 (mod q) and has a coordinate coprime to q.  Both facts are
    re-verified before the certificate is returned.
    """
    require_membership(x, spec)
    til = compute_tiling(x)
    a = tiling_matrix_of(til)
    if a.cols != linalg.rank(a.entries, cols=a.cols):
        raise InputError("pattern is not a vertex; no non-integrality certificate applies")
    q = x.denominator_lcm()
    if q == 1:
        return None
    xi = []
    for tile_index in til.free:
        i, j = til.tiles[tile_index][0]
        scaled = x.entry(i, j) * q
        assert scaled.denominator == 1
        xi.append(int(scaled) % q)
    for row in a.entries:
        if sum(av * xv for av, xv in zip(row, xi)) % q != 0:
            raise VerificationError("tiling matrix does not annihilate xi mod q")
    unit_index = next((k for k, v in enumerate(xi) if gcd(v, q) == 1), None)
    if unit_index is None:
        # can only happen when the lcm q is assembled from strictly
        # smaller per-tile denominators; no single tile then witnesses q
        raise VerificationError(
            f"no free-tile value has denominator exactly {q}; certificate undefined")
    return NonIntegralityCertificate(q, tuple(xi), unit_index)


def truncate_integral(x: GTPattern, tiling: Optional[Tiling] = None) -> GTPattern:
    """Drop the fractional parts on the free tiles of x.

    Cells outside free tiles must already be integral (for polytope
    members they always are: such cells carry top-row or bottom values).
    """
    til = tiling if tiling is not None else compute_tiling(x)
    free_cells = {cell for t in til.free for cell in til.tiles[t]}
    rows = []
    for j in range(1, x.n + 1):
        row = []
        for i in range(1, j + 1):
            v = x.entry(i, j)
            if (i, j) in free_cells:
                row.append(Fraction(v.numerator // v.denominator))
            elif v.denominator != 1:
                raise InputError(f"cell ({i},{j}) is outside every free tile but non-integral")
            else:
                row.append(v)
        rows.append(tuple(row))
    return GTPattern(tuple(rows))


def _same_partition(a: Tiling, b: Tiling) -> bool:
    if a.n != b.n:
        return False
    if {frozenset(t) for t in a.tiles} != {frozenset(t) for t in b.tiles}:
        return False
    return ({frozenset(a.tiles[k]) for k in a.free}
            == {frozenset(b.tiles[k]) for k in b.free})


def _check_tiling_structure(til: Tiling, x_int: GTPattern) -> None:
    cells = set(x_int.cells())
    seen: set[tuple[int, int]] = set()
    for tile in til.tiles:
        for cell in tile:
            if cell not in cells or cell in seen:
                raise InputError("supplied tiling does not partition the pattern's cells")
            seen.add(cell)
    if seen != cells:
        raise InputError("supplied tiling does not cover every pattern cell")
    for t, tile in enumerate(til.tiles):
        is_free = (1, 1) not in tile and all(j != til.n for (_, j) in tile)
        if is_free != (t in til.free):
            raise InputError(f"tile {t} has the wrong free/fixed status")
        values = {x_int.entry(i, j) for (i, j) in tile}
        if len(values) != 1:
            raise InputError(f"carrier pattern is not constant on tile {t}")


def construct_nonintegral_vertex(x_int: GTPattern, xi: Sequence[int], q: int,
                                 tiling: Optional[Tiling] = None) -> ConstructionResult:
    """Rebuild a vertex from an integral carrier pattern and a mod-q kernel vector.

    Adds xi_k / q to every cell of free tile k of the tiling (the
    carrier's own tiling unless one is supplied explicitly; an explicit
    tiling must be a partition on which the carrier is constant).  The
    result is only returned after verifying that it is a valid pattern,
    that its tiling is exactly the one built from, and that it is a
    vertex whose entry denominators have lcm q; any drift fails loudly.
    """
    report = validate_pattern(x_int)
    if report:
        raise InputError(f"carrier pattern is invalid ({len(report)} violations)")
    if not x_int.is_integral():
        raise InputError("carrier pattern must be integral")
    if q < 2:
        raise InputError(f"modulus must be at least 2, got {q}")
    til = tiling if tiling is not None else compute_tiling(x_int)
    if til.n != x_int.n:
        raise InputError(f"tiling has n={til.n} but pattern has n={x_int.n}")
    _check_tiling_structure(til, x_int)

    xi = [int(v) for v in xi]
    if len(xi) != len(til.free):
        raise InputError(f"xi has {len(xi)} coordinates but the tiling has {len(til.free)} free tiles")
    if any(not 0 <= v < q for v in xi):
        raise InputError("xi coordinates must satisfy 0 <= xi_k < q")

    a = tiling_matrix_of(til)
    if linalg.rank(a.entries, cols=a.cols) != a.cols:
        raise InputError("tiling matrix must have trivial kernel (the carrier must be a vertex)")
    for row in a.entries:
        if sum(av * xv for av, xv in zip(row, xi)) % q != 0:
            raise InputError("tiling matrix does not annihilate xi mod q")

    transcript = [{"check": "preconditions", "pass": True}]
    if all(v == 0 for v in xi):
        transcript.append({"check": "xi-zero", "pass": True,
                           "detail": "xi = 0 rebuilds the integral carrier itself"})
        return ConstructionResult(x_int, spec_of(x_int), False, tuple(transcript))
    if all(gcd(v, q) != 1 for v in xi):
        raise InputError("no coordinate of xi is a unit mod q")

    direction = direction_from_kernel_vector(til, [Fraction(v, q) for v in xi])
    x = _shifted(x_int, direction, Fraction(1))

    bad = validate_pattern(x)
    transcript.append({"check": "perturbed-pattern-valid", "pass": not bad})
    if bad:
        raise TilingDriftError(
            f"adding xi/q breaks {len(bad)} pattern constraints; tiling not preserved")
    new_til = compute_tiling(x)
    same = _same_partition(new_til, til)
    transcript.append({"check": "tiling-preserved", "pass": same})
    if not same:
        raise TilingDriftError("adding xi/q merged or split tiles; construction rejected")

    out_spec = spec_of(x)
    vertex = is_vertex(x, out_spec)
    transcript.append({"check": "is-vertex", "pass": vertex})
    if not vertex:
        raise VerificationError("constructed pattern is not a vertex")
    lcm_ok = x.denominator_lcm() == q
    transcript.append({"check": "denominator-lcm", "pass": lcm_ok, "q": q})
    if not lcm_ok:
        raise VerificationError(
            f"constructed pattern has denominator lcm {x.denominator_lcm()}, expected {q}")
    return ConstructionResult(x, out_spec, True, tuple(transcript))
