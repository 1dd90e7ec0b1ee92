"""Shared generators and independent oracles for the test suite.

The oracles here deliberately avoid the library's algorithms: homology
ranks come from plain Gaussian elimination, bottleneck values from
permutation enumeration.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import permutations

from fcw import Bar, Barcode, Cell, FilteredComplex, NEG_INF, POS_INF

WEIGHT_POOL = [
    Fraction(-1),
    Fraction(0),
    Fraction(1, 2),
    Fraction(1),
    Fraction(3, 2),
    Fraction(2),
    Fraction(7, 3),
    Fraction(4),
]

NONNEG_POOL = [w for w in WEIGHT_POOL if w >= 0]


def torus(a, b, c) -> FilteredComplex:
    """Basepoint, two 1-cells and one 2-cell, all boundaries zero mod 2."""
    return FilteredComplex(
        [
            Cell("pt", 0, NEG_INF),
            Cell("a", 1, Fraction(a)),
            Cell("b", 1, Fraction(b)),
            Cell("f", 2, Fraction(c)),
        ],
        "pt",
    )


def two_sphere_two_peaks() -> FilteredComplex:
    """Height model with two maxima: 1-cell at 1/2 bounded by both 2-cells at 1."""
    return FilteredComplex(
        [
            Cell("pt", 0, NEG_INF),
            Cell("m", 1, Fraction(1, 2)),
            Cell("n1", 2, Fraction(1), ["m"]),
            Cell("n2", 2, Fraction(1), ["m"]),
        ],
        "pt",
    )


# -- random valid complexes ---------------------------------------------------


def _cycle_space(cells: dict[str, Cell], eligible: list[str]) -> list[frozenset]:
    """Basis of the mod-2 cycles supported on the given cells."""
    rows: dict[str, int] = {}
    vectors = []
    for cid in eligible:
        vec = 0
        for ref in cells[cid].boundary:
            row = rows.setdefault(ref, len(rows))
            vec |= 1 << row
        vectors.append((vec, cid))
    pivots: dict[int, tuple[int, set]] = {}
    kernel = []
    for vec, cid in vectors:
        combo = {cid}
        while vec:
            top = vec.bit_length() - 1
            if top not in pivots:
                pivots[top] = (vec, combo)
                combo = None
                break
            pvec, pcombo = pivots[top]
            vec ^= pvec
            combo ^= pcombo
        if combo is not None:
            kernel.append(frozenset(combo))
    return kernel


def random_complex(
    rng: random.Random,
    max_cells: int = 12,
    dims=(0, 1, 1, 2, 2, 3),
    weights=WEIGHT_POOL,
    eternal_prob: float = 0.15,
) -> FilteredComplex:
    """A random valid complex: each boundary is a random cycle at or below its weight."""
    cells = {"pt": Cell("pt", 0, NEG_INF)}
    order = ["pt"]
    for i in range(rng.randint(1, max_cells)):
        dim = rng.choice(dims)
        weight = NEG_INF if rng.random() < eternal_prob else rng.choice(weights)
        if dim == 0:
            boundary = frozenset()
        else:
            eligible = [
                cid
                for cid in order
                if cells[cid].dim == dim - 1 and cells[cid].weight <= weight
            ]
            boundary = frozenset()
            for basis_elt in _cycle_space(cells, eligible):
                if rng.random() < 0.5:
                    boundary ^= basis_elt
        cid = f"c{i}"
        cells[cid] = Cell(cid, dim, weight, boundary)
        order.append(cid)
    return FilteredComplex(cells.values(), "pt")


def random_linearizable_complex(rng: random.Random, max_cells: int = 10) -> FilteredComplex:
    """Random complex with no finite-weight 0-cells and nonnegative weights."""
    return random_complex(rng, max_cells, dims=(1, 1, 2, 2, 3), weights=NONNEG_POOL)


def random_barcode(rng: random.Random, max_bars: int = 8, dims=(0, 1, 2)) -> Barcode:
    bars = []
    for _ in range(rng.randint(0, max_bars)):
        dim = rng.choice(dims)
        birth = NEG_INF if rng.random() < 0.2 else rng.choice(WEIGHT_POOL)
        if rng.random() < 0.25:
            death = POS_INF
        else:
            later = [w for w in WEIGHT_POOL if birth is NEG_INF or w > birth]
            death = rng.choice(later) if later else POS_INF
        bars.append(Bar(dim, birth, death))
    return Barcode(bars)


# -- homology oracle ----------------------------------------------------------


def _gf2_rank(columns: list[int]) -> int:
    basis: dict[int, int] = {}
    for vec in columns:
        while vec:
            top = vec.bit_length() - 1
            if top not in basis:
                basis[top] = vec
                break
            vec ^= basis[top]
    return len(basis)


def homology_ranks(x: FilteredComplex, level) -> dict[int, int]:
    """Betti numbers of the sublevel complex via Gaussian elimination."""
    sub = x.sublevel(level)
    by_dim: dict[int, list[Cell]] = {}
    for c in sub.cells:
        by_dim.setdefault(c.dim, []).append(c)
    boundary_rank: dict[int, int] = {}
    for d, group in by_dim.items():
        rows = {c.id: k for k, c in enumerate(by_dim.get(d - 1, []))}
        columns = []
        for c in group:
            vec = 0
            for ref in c.boundary:
                vec |= 1 << rows[ref]
            columns.append(vec)
        boundary_rank[d] = _gf2_rank(columns)
    betti = {}
    for d, group in by_dim.items():
        cycles = len(group) - boundary_rank.get(d, 0)
        betti[d] = cycles - boundary_rank.get(d + 1, 0)
    return betti


def bars_alive(bc: Barcode, level) -> dict[int, int]:
    alive: dict[int, int] = {}
    for bar in bc.bars:
        if bar.birth <= level and level < bar.death:
            alive[bar.dim] = alive.get(bar.dim, 0) + 1
    return alive


# -- bottleneck oracle ----------------------------------------------------------


def _finite(v) -> bool:
    return not (v is NEG_INF or v is POS_INF)


def _gap(a, b):
    if not (_finite(a) and _finite(b)):
        return Fraction(0) if a is b else None
    return abs(a - b)


def _pair_cost(u: Bar, v: Bar):
    births, deaths = _gap(u.birth, v.birth), _gap(u.death, v.death)
    if births is None or deaths is None:
        return None
    return max(births, deaths)


def _diag(u: Bar):
    if _finite(u.birth) and _finite(u.death):
        return (u.death - u.birth) / 2
    return None


def brute_bottleneck_single(bars1, bars2):
    """Minimum over all complete matchings (with diagonal slots) of the max cost.

    Returns None for +inf.  Only usable for a handful of bars per side.
    """
    n1, n2 = len(bars1), len(bars2)
    m = n1 + n2
    if m == 0:
        return Fraction(0)

    def cost(i, j):
        if i < n1 and j < n2:
            return _pair_cost(bars1[i], bars2[j])
        if i < n1:
            return _diag(bars1[i])
        if j < n2:
            return _diag(bars2[j])
        return Fraction(0)

    best = None
    for perm in permutations(range(m)):
        worst = Fraction(0)
        for i, j in enumerate(perm):
            c = cost(i, j)
            if c is None:
                worst = None
                break
            if c > worst:
                worst = c
        if worst is not None and (best is None or worst < best):
            best = worst
    return best


def brute_bottleneck(b1: Barcode, b2: Barcode):
    best = Fraction(0)
    for d in sorted(set(b1.dims()) | set(b2.dims())):
        value = brute_bottleneck_single(b1.restrict(d).bars, b2.restrict(d).bars)
        if value is None:
            return None
        if value > best:
            best = value
    return best
