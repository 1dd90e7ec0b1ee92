"""Exact bottleneck distance against a permutation-enumeration oracle."""

from __future__ import annotations

import random
from fractions import Fraction

from helpers import brute_bottleneck, random_barcode, two_sphere_two_peaks

from fcw import (
    Bar,
    Barcode,
    NEG_INF,
    POS_INF,
    barcode,
    bottleneck,
    sphere,
)

F = Fraction


def test_two_sphere_models_are_a_quarter_apart():
    left = barcode(sphere(2, 1))
    right = barcode(two_sphere_two_peaks())
    assert bottleneck(left, right) == F(1, 4)


def test_distance_to_self_is_zero():
    bc = barcode(two_sphere_two_peaks())
    assert bottleneck(bc, bc) == 0


def test_unmatched_infinite_bar_gives_infinity():
    assert bottleneck(Barcode([Bar(2, 1, POS_INF)]), Barcode()) is POS_INF


def test_unmatched_eternal_bar_gives_infinity():
    assert bottleneck(Barcode([Bar(0, NEG_INF, 1)]), Barcode()) is POS_INF


def test_eternal_births_match_at_death_gap():
    left = Barcode([Bar(0, NEG_INF, 1)])
    right = Barcode([Bar(0, NEG_INF, 3)])
    assert bottleneck(left, right) == 2


def test_eternal_cannot_match_finite_birth():
    left = Barcode([Bar(0, NEG_INF, POS_INF)])
    right = Barcode([Bar(0, 0, POS_INF)])
    assert bottleneck(left, right) is POS_INF


def test_finite_bars_prefer_diagonal_when_cheaper():
    left = Barcode([Bar(1, 0, 1)])
    right = Barcode([Bar(1, 10, 11)])
    # matching the two bars costs 10; each to the diagonal costs 1/2
    assert bottleneck(left, right) == F(1, 2)


def test_dim_restriction():
    left = Barcode([Bar(0, 0, 4), Bar(1, 0, 1)])
    right = Barcode([Bar(0, 0, 4)])
    assert bottleneck(left, right, dim=0) == 0
    assert bottleneck(left, right, dim=1) == F(1, 2)
    assert bottleneck(left, right) == F(1, 2)
    assert bottleneck(left, right, dim=7) == 0


def test_matches_brute_force_on_small_barcodes():
    rng = random.Random(211)
    for _ in range(120):
        left = random_barcode(rng, max_bars=3, dims=(0, 1))
        right = random_barcode(rng, max_bars=3, dims=(0, 1))
        expected = brute_bottleneck(left, right)
        got = bottleneck(left, right)
        if expected is None:
            assert got is POS_INF
        else:
            assert got == expected


def test_pseudometric_axioms_on_random_barcodes():
    rng = random.Random(223)
    for _ in range(60):
        a = random_barcode(rng, max_bars=6)
        b = random_barcode(rng, max_bars=6)
        c = random_barcode(rng, max_bars=6)
        d_ab = bottleneck(a, b)
        d_ba = bottleneck(b, a)
        d_bc = bottleneck(b, c)
        d_ac = bottleneck(a, c)
        assert d_ab == d_ba
        assert bottleneck(a, a) == 0
        if d_ab is POS_INF or d_bc is POS_INF:
            continue
        assert d_ac is not POS_INF
        assert d_ac <= d_ab + d_bc


def test_empty_barcodes_are_at_distance_zero():
    assert bottleneck(Barcode(), Barcode()) == 0
