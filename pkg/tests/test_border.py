import random

import pytest

from gen import F5, P, Q, rand_evr, rand_full_degree
from ndlrs import (
    DomainError,
    Region,
    WindowSequence,
    beta0,
    beta0_direct,
    beta_k,
    beta_k_direct,
    border_cell,
    classify,
    decompose,
    evr_seq_new,
    is_char_window,
    truncated_product,
)
from ndlrs import regions as rg
from ndlrs.border import default_depth


def example_a(ctx=Q):
    return evr_seq_new([P("X1", ctx), P("X2 - 1", ctx)], [1])


def fib():
    return evr_seq_new([P("X1^2 - X1 - 1", Q, 1)], [1, 1])


def const1():
    return evr_seq_new([P("X1 - 1", Q, 1)], [1])


# --- partition ----------------------------------------------------------


def test_border_cell_examples():
    assert border_cell(0, (1, 1)) == Region((1, 1), (1, 1), "border-cell")
    assert border_cell(3, (2, 3)) == Region((None, None), (0, 0), "border-cell")
    assert border_cell(1, (2, 3)) == Region((None, 1), (0, 3), "border-cell")
    with pytest.raises(DomainError):
        border_cell(4, (1, 1))
    with pytest.raises(DomainError):
        border_cell(0, (0, 1))


def test_classify_examples():
    assert classify((1, 1), (1, 1)) == 0
    assert classify((0, 1), (1, 1)) == 1
    assert classify((-5, -5), (2, 2)) == 3
    assert classify((-5, -5, -5), (1, 2, 3)) == 7
    with pytest.raises(DomainError):
        classify((2, 0), (1, 1))


def test_partition_property():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(1, 3)
        d = tuple(rng.randint(1, 3) for _ in range(n))
        m = rng.randint(0, 3)
        for a in rg.box_points((-m,) * n, d):
            hits = [k for k in range(2 ** n) if a in border_cell(k, d)]
            assert hits == [classify(a, d)]


# --- beta_0 -------------------------------------------------------------


def test_beta0_examples():
    s = example_a()
    assert beta0(P("X1*X2 - X1"), s) == P("X1*X2")
    assert beta0(P("X1^2 - X1 - 1", Q, 1), fib()) == P("X1^2", Q, 1)
    assert beta0(P("X1^2 - 3*X1 + 2", Q, 1), const1()) == P("X1^2 - 2*X1", Q, 1)


def test_beta0_direct_examples():
    s = example_a()
    assert beta0_direct(P("X1*X2 - X1"), s) == P("X1*X2")
    assert beta0_direct(P("X1^2 - X1 - 1", Q, 1), fib()) == P("X1^2", Q, 1)
    assert beta0_direct(P("X1^2 - 3*X1 + 2", Q, 1), const1()) == P("X1^2 - 2*X1", Q, 1)
    assert beta0_direct(P("X1*X2"), s) == P("X1*X2")
    zero = WindowSequence(Q, (-2, -2), [0] * 9)
    assert beta0_direct(P("X1*X2 + X1^2*X2"), zero).is_zero()


def test_beta0_errors():
    with pytest.raises(DomainError):
        beta0(P("X1 + 1"), example_a())
    with pytest.raises(DomainError):
        beta0(P("X1*X2", F5), example_a())


def test_beta0_divisible_and_supported():
    rng = random.Random(32)
    for _ in range(60):
        n = rng.randint(1, 3)
        s, _ = rand_evr(rng, F5, tuple(rng.randint(1, 3) for _ in range(n)))
        d = tuple(rng.randint(1, 3) for _ in range(n))
        f = rand_full_degree(rng, F5, n, d)
        b = beta0(f, s)
        assert b == beta0_direct(f, s)
        assert all(rg.leq(rg.ones(n), e) and rg.leq(e, d) for e in b.terms)


# --- beta_k / decomposition --------------------------------------------


def test_beta_k_examples():
    s = example_a()
    f = P("X1*X2 - 1")
    b2 = beta_k(f, s, 2, (0, 3))
    assert dict(b2.terms) == {(1, -j): 1 for j in range(4)}
    assert beta_k(f, s, 1, (3, 3)).is_zero()
    g = P("X1*X2 - X1")
    for k in (1, 2):
        assert beta_k(g, s, k, (4, 4)).is_zero()


def test_decompose_example():
    s = example_a()
    parts = decompose(P("X1*X2 - 1"), s, (3, 3))
    assert dict(parts[0].terms) == {(1, 1): 1}
    assert parts[1].is_zero()
    assert dict(parts[2].terms) == {(1, -j): 1 for j in range(4)}
    assert dict(parts[3].terms) == {(0, -j): -1 for j in range(4)}


def test_decompose_fibonacci_and_zero():
    parts = decompose(P("X1^2 - X1 - 1", Q, 1), fib(), (7,))
    assert parts[0].to_poly() == P("X1^2", Q, 1)
    assert parts[1].is_zero()
    zero = WindowSequence(Q, (-6, -6), [0] * 49)
    assert all(p.is_zero() for p in decompose(P("X1*X2 + 1"), zero, (3, 3)))


def test_default_depth():
    assert default_depth(P("X1^2*X2 + 1")) == (6, 4)


def test_beta_k_matches_direct_random():
    rng = random.Random(33)
    for _ in range(40):
        n = rng.randint(1, 3)
        s, _ = rand_evr(rng, F5, tuple(rng.randint(1, 2) for _ in range(n)))
        d = tuple(rng.randint(1, 2) for _ in range(n))
        f = rand_full_degree(rng, F5, n, d)
        depth = tuple(rng.randint(0, 3) for _ in range(n))
        for k in range(2 ** n):
            assert beta_k(f, s, k, depth).same_terms(beta_k_direct(f, s, k, depth))


def test_beta_k_on_window_sequence():
    rng = random.Random(34)
    vals = [rng.randrange(5) for _ in range(8 * 8)]
    s = WindowSequence(F5, (-7, -7), vals)
    f = rand_full_degree(rng, F5, 2, (2, 1))
    for k in range(4):
        assert beta_k(f, s, k, (3, 3)).same_terms(beta_k_direct(f, s, k, (3, 3)))


def test_evr_product_has_no_border_terms():
    rng = random.Random(35)
    for _ in range(20):
        n = rng.randint(2, 3)
        s, w = rand_evr(rng, F5, tuple(rng.randint(1, 2) for _ in range(n)))
        parts = decompose(w.product, s, (3,) * n)
        assert all(p.is_zero() for p in parts[1:])


def test_truncated_product_region_checks():
    with pytest.raises(DomainError):
        beta_k(P("X1*X2"), example_a(), 1, (-1, 0))


# --- characteristic window test ----------------------------------------


def test_is_char_window_examples():
    s = example_a()
    box = Region.box((-3, -3), (0, 0))
    assert is_char_window(P("X2 - 1"), s, box)
    assert not is_char_window(P("X1 - 1"), s, box)
    diag = WindowSequence.from_function(Q, (-6, -6), lambda a: int(a[0] == a[1]))
    assert is_char_window(P("X1*X2 - 1"), diag, Region.box((-4, -4), (0, 0)))
    with pytest.raises(DomainError):
        is_char_window(P("X1*X2 - 1"), diag, Region.box((-6, -6), (0, 0)))


def test_char_window_implies_border_support():
    # when f annihilates s, f*Gamma(s) on a generous box lives in [1, deg f]
    rng = random.Random(36)
    for _ in range(20):
        s, w = rand_evr(rng, F5, (2, 2))
        f = w.product
        d = (4, 4)
        box = Region.box((-6, -6), d)
        assert is_char_window(f, s, Region.box((-6, -6), (0, 0)))
        G = truncated_product(f, s, box)
        assert all(rg.leq((1, 1), e) for e in G.terms)
