"""Tests for the GF(2) linear algebra layer."""

import random

import pytest

from simpleloop.gf2 import (
    GF2Matrix,
    dot,
    rank,
    kernel_basis,
    matmul,
    quotient_coordinates,
)


def vec(*bits):
    out = 0
    for i, b in enumerate(bits):
        if b:
            out |= 1 << i
    return out


def brute_kernel(m):
    """Oracle: enumerate every vector and keep those killed by all rows."""
    out = []
    for x in range(1 << m.cols):
        if all(dot(r, x) == 0 for r in m.data):
            out.append(x)
    return set(out)


def span(vectors):
    out = {0}
    for v in vectors:
        out |= {w ^ v for w in out}
    return out


def test_rank_identity():
    m = GF2Matrix(3, 3, (vec(1, 0, 0), vec(0, 1, 0), vec(0, 0, 1)))
    assert rank(m) == 3


def test_rank_dependent_rows():
    m = GF2Matrix(3, 3, (vec(1, 1, 0), vec(0, 1, 1), vec(1, 0, 1)))
    assert rank(m) == 2


def test_kernel_small_example():
    m = GF2Matrix(2, 3, (vec(1, 1, 0), vec(0, 1, 1)))
    basis = kernel_basis(m)
    assert basis == [vec(1, 1, 1)]
    # oracle agreement: the kernel as a set matches brute enumeration
    assert span(basis) == brute_kernel(m)


def test_kernel_of_zero_matrix_is_everything():
    m = GF2Matrix(2, 4, (0, 0))
    basis = kernel_basis(m)
    assert len(basis) == 4
    assert span(basis) == set(range(16))


def test_kernel_trivial():
    m = GF2Matrix(2, 2, (vec(1, 0), vec(0, 1)))
    assert kernel_basis(m) == []


def test_kernel_oracle_random_small():
    rng = random.Random(7)
    for _ in range(200):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 7)
        m = GF2Matrix(rows, cols, tuple(rng.randrange(1 << cols) for _ in range(rows)))
        assert span(kernel_basis(m)) == brute_kernel(m)


def test_rank_nullity_random():
    rng = random.Random(11)
    for _ in range(100):
        rows = rng.randrange(1, 60)
        cols = rng.randrange(1, 60)
        m = GF2Matrix(rows, cols, tuple(rng.randrange(1 << cols) for _ in range(rows)))
        assert rank(m) + len(kernel_basis(m)) == m.cols


def test_matmul_kernel_members():
    rng = random.Random(13)
    for _ in range(50):
        rows, cols = rng.randrange(1, 30), rng.randrange(1, 30)
        m = GF2Matrix(rows, cols, tuple(rng.randrange(1 << cols) for _ in range(rows)))
        for x in kernel_basis(m):
            assert all(dot(r, x) == 0 for r in m.data)


def test_matmul_associativity():
    rng = random.Random(17)
    for _ in range(20):
        a = GF2Matrix(4, 5, tuple(rng.randrange(32) for _ in range(4)))
        b = GF2Matrix(5, 3, tuple(rng.randrange(8) for _ in range(5)))
        c = GF2Matrix(3, 6, tuple(rng.randrange(64) for _ in range(3)))
        assert matmul(matmul(a, b), c) == matmul(a, matmul(b, c))


def test_quotient_whole_space_no_boundaries():
    q = quotient_coordinates([vec(1, 0), vec(0, 1)], [0], 2)
    assert q.dim == 2
    seen = {q.coords(v) for v in (0, 1, 2, 3)}
    assert seen == {0, 1, 2, 3}
    assert q.coords(0) == 0


def test_quotient_everything_bounds():
    cycles = [vec(1, 1, 0), vec(0, 1, 1)]
    q = quotient_coordinates(cycles, cycles, 3)
    assert q.dim == 0
    for c in cycles:
        assert q.coords(c) == 0


def test_quotient_rejects_boundary_outside_cycles():
    with pytest.raises(ValueError):
        quotient_coordinates([vec(1, 1, 0)], [vec(0, 0, 1)], 3)


def test_quotient_rejects_non_cycle_vector():
    q = quotient_coordinates([vec(1, 1, 0)], [], 3)
    with pytest.raises(ValueError):
        q.coords(vec(1, 0, 0))


def test_quotient_vanishes_exactly_on_boundaries_brute():
    rng = random.Random(23)
    for _ in range(60):
        n = rng.randrange(3, 12)
        nz = rng.randrange(1, min(n, 8) + 1)
        cycles_raw = [rng.randrange(1, 1 << n) for _ in range(nz)]
        cyc_span = span(cycles_raw)
        boundaries = [rng.choice(sorted(cyc_span)) for _ in range(rng.randrange(0, 3))]
        q = quotient_coordinates(cycles_raw, boundaries, n)
        b_span = span(boundaries)
        for w in cyc_span:
            if w in b_span:
                assert q.coords(w) == 0
            else:
                assert q.coords(w) != 0
        # linearity makes the induced quotient map injective
        images = {}
        for w in sorted(cyc_span):
            images.setdefault(q.coords(w), set()).add(w)
        for img, pre in images.items():
            first = min(pre)
            assert all((w ^ first) in b_span for w in pre)


def test_quotient_basis_cycles_hit_unit_coordinates():
    rng = random.Random(29)
    for _ in range(40):
        n = rng.randrange(3, 12)
        cycles = [rng.randrange(1, 1 << n) for _ in range(rng.randrange(1, 7))]
        boundaries = [rng.choice(sorted(span(cycles))) for _ in range(rng.randrange(0, 3))]
        q = quotient_coordinates(cycles, boundaries, n)
        basis = q.basis_cycles()
        assert len(basis) == q.dim
        for j, c in enumerate(basis):
            assert q.coords(c) == 1 << j
