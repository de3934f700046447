import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from galois_hull.codes import (
    LinearCode,
    code_from_generator,
    galois_dual,
    galois_form,
    hull,
    hull_decompose,
    is_galois_lcd,
    is_mds,
    macwilliams,
    min_distance,
)
from galois_hull.errors import (
    FieldMismatch,
    LengthMismatch,
    RequiresExactDistance,
    SOutOfRange,
    ZeroCode,
)
from galois_hull.field import field_from_order
from galois_hull.linalg import intersect, sum_space

from oracles import annihilator, as_set, of_for, pairing, span, min_weight

FIELDS = [2, 3, 4, 5, 8, 9]


@st.composite
def codes(draw, max_n=5, fields=FIELDS):
    q = draw(st.sampled_from(fields))
    n_cap = max_n if q <= 5 else min(max_n, 4)
    n = draw(st.integers(1, n_cap))
    k = draw(st.integers(1, n))
    rows = draw(
        st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k).filter(
            lambda rs: any(any(r) for r in rs)
        )
    )
    f = field_from_order(q)
    s = draw(st.integers(0, f.m - 1))
    return code_from_generator(f, rows), rows, s


def oracle_weights(of, rows, n):
    w = np.count_nonzero(span(of, rows, n), axis=1)
    return [int((w == i).sum()) for i in range(n + 1)]


@given(codes())
@settings(max_examples=200, deadline=None)
def test_dual_is_the_annihilator(case):
    code, rows, s = case
    of = of_for(code.field)
    assert code.space.dim == code.k
    want = annihilator(of, rows, code.n, s)
    dual = galois_dual(code, s)
    assert as_set(span(of, dual.rows, code.n)) == as_set(want)


@given(codes())
@settings(max_examples=200, deadline=None)
def test_hull_and_lcd_agree_with_enumeration(case):
    code, rows, s = case
    of = of_for(code.field)
    cwords = as_set(span(of, rows, code.n))
    brute_hull = cwords & as_set(annihilator(of, rows, code.n, s))
    h = hull(code, s)
    assert as_set(span(of, h.rows, code.n)) == brute_hull
    assert is_galois_lcd(code, s)[0] == (len(brute_hull) == 1)


@given(codes())
@settings(max_examples=200, deadline=None)
def test_decomposition_invariants(case):
    code, rows, s = case
    dec = hull_decompose(code, s)
    assert dec.h + dec.complement.k == code.k
    assert sum_space(dec.hull.space, dec.complement.space).basis == code.generator
    assert intersect(dec.hull.space, dec.complement.space).dim == 0
    assert dec.certificate_nonsingular
    if not dec.complement.is_zero:
        assert is_galois_lcd(dec.complement, s)[0]
        assert hull(dec.complement, s).is_zero


@given(codes(max_n=6, fields=[2, 3, 4]))
@settings(max_examples=200, deadline=None)
def test_min_distance_matches_enumeration(case):
    code, rows, _ = case
    of = of_for(code.field)
    rep = min_distance(code)
    assert rep.exact
    assert rep.value == min_weight(span(of, rows, code.n))
    assert is_mds(code, rep) == (rep.value == code.n - code.k + 1)


@given(codes(max_n=5, fields=[2, 3, 4, 5]))
@settings(max_examples=150, deadline=None)
def test_macwilliams_recovers_weights(case):
    code, rows, _ = case
    of = of_for(code.field)
    n = code.n
    dual = galois_dual(code, 0)
    dual_w = oracle_weights(of, dual.rows, n) if not dual.is_zero else [1] + [0] * n
    assert macwilliams(dual_w, n, code.q) == oracle_weights(of, rows, n)


def test_both_distance_routes_are_exercised():
    f = field_from_order(3)
    rng = random.Random(7)
    methods = set()
    for _ in range(40):
        n = rng.randint(2, 6)
        k = rng.randint(1, n)
        rows = [[rng.randrange(3) for _ in range(n)] for _ in range(k)]
        if not any(map(any, rows)):
            continue
        code = code_from_generator(f, rows)
        rep = min_distance(code)
        methods.add(rep.method)
        assert rep.value == min_weight(span(of_for(f), rows, n))
    assert methods == {"exhaustive_messages", "exhaustive_codewords"}


def test_distance_budget_gives_lower_bound():
    f = field_from_order(9)
    code = code_from_generator(f, [[1, 2, 3, 4, 5, 6, 7, 8], [0, 1, 1, 1, 1, 1, 1, 1], [0, 0, 1, 2, 3, 4, 5, 6]])
    rep = min_distance(code, budget=10)
    assert rep.exactness == "lower_bound" and rep.value == 1
    with pytest.raises(RequiresExactDistance):
        is_mds(code, rep)


def test_pairing_matches_oracle():
    f = field_from_order(8)
    of = of_for(f)
    x, y = [3, 5, 7], [6, 1, 2]
    for s in range(3):
        want = int(pairing(of, np.array([x]), np.array([y]), s)[0, 0])
        assert galois_form([f(v) for v in x], [f(v) for v in y], s).value == want


def test_spec_examples():
    f2, f3, f4, f5 = (field_from_order(q) for q in (2, 3, 4, 5))
    assert code_from_generator(f3, [[1, 1], [2, 2]]).rows == ((1, 1),)
    rep5 = code_from_generator(f2, [[1] * 5])
    assert (rep5.n, rep5.k) == (5, 1)
    d = min_distance(rep5)
    assert d.value == 5 and d.exact and is_mds(rep5, d)
    full = code_from_generator(f3, [[1, 0], [0, 1]])
    assert min_distance(full).value == 1 and is_mds(full, 1)
    assert galois_dual(full, 0).is_zero
    assert galois_dual(code_from_generator(f3, [[1, 0]]), 0).rows == ((0, 1),)
    c4 = code_from_generator(f4, [[1, 1]])
    assert galois_dual(c4, 1).rows == ((1, 1),)
    assert hull(c4, 1).k == 1 and hull(c4, 0).k == 1
    assert not is_galois_lcd(c4, 1)[0]
    assert hull(code_from_generator(f3, [[1, 1]]), 0).is_zero
    ok, cert = is_galois_lcd(code_from_generator(f3, [[1, 1]]), 0)
    assert ok and cert.entries == ((2,),)
    assert is_galois_lcd(code_from_generator(f3, [[1, 0]]), 0)[0]
    a = f4.primitive_element
    assert galois_form([f4.one, a], [f4.one, a], 1) == f4.zero
    assert galois_form([f2.one, f2.one], [f2.one, f2.one], 0) == f2.zero
    c = code_from_generator(f4, [[1, 0, 1], [0, 1, 1]])
    dec = hull_decompose(c, 1)
    assert dec.h + dec.complement.k == 2 and dec.certificate_nonsingular
    brute = as_set(span(of_for(f4), c.rows, 3)) & as_set(annihilator(of_for(f4), c.rows, 3, 1))
    assert 4**dec.h == len(brute)
    assert not is_mds(code_from_generator(f2, [[1, 1, 0, 0], [0, 0, 1, 1]]), 2)
    assert code_from_generator(f5, [[1, 2]]).rows == ((1, 2),)


def test_decomposition_of_lcd_code_is_trivial():
    f3 = field_from_order(3)
    full = code_from_generator(f3, [[1, 0], [0, 1]])
    dec = hull_decompose(full, 0)
    assert dec.h == 0 and dec.complement == full


def test_code_errors():
    f = field_from_order(9)
    with pytest.raises(ZeroCode):
        code_from_generator(f, [[0, 0]])
    code = code_from_generator(f, [[1, 2]])
    with pytest.raises(SOutOfRange):
        galois_dual(code, 2)
    with pytest.raises(ZeroCode):
        min_distance(LinearCode.zero(f, 3))
    with pytest.raises(LengthMismatch):
        galois_form([f.one], [f.one, f.one], 0)
    with pytest.raises(FieldMismatch):
        galois_form([f.one], [field_from_order(3).one], 0)
