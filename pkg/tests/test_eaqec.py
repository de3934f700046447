import pytest
from hypothesis import given, settings, strategies as st

from galois_hull.codes import code_from_generator, hull, min_distance
from galois_hull.constructions import (
    MatrixProductSpec,
    gabidulin_code,
    gabidulin_spec,
    matrix_product_code,
    ones_minus_ones,
    qpower_to_galois_index,
)
from galois_hull.eaqec import (
    EaqecParams,
    classify_me,
    eaqec_from_hull_decomposition,
    eaqec_from_lcd,
    family_cor41,
    family_cor42,
    family_cor43,
    family_thm52_53,
    gabidulin_pair_hull_dim,
)
from galois_hull.errors import BranchAmbiguous, NotLCD, PreconditionViolated
from galois_hull.field import field_from_order
from galois_hull.linalg import MatrixGF

from test_codes import codes


def triple(row):
    o = row.output
    return (o.n, o.k, o.d, o.c)


def test_lcd_route_examples():
    f3 = field_from_order(3)
    rep = code_from_generator(f3, [[1] * 5])
    p = eaqec_from_lcd(rep, 0, min_distance(rep))
    assert (p.n, p.k, p.d, p.c, p.q) == (5, 1, 5, 4, 3) and p.is_me and not p.d_is_lower_bound
    assert p.label() == "[[5,1,5;4]]_3"
    full = code_from_generator(f3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    p = eaqec_from_lcd(full, 0, min_distance(full))
    assert (p.n, p.k, p.d, p.c) == (3, 3, 1, 0)
    with pytest.raises(NotLCD):
        c4 = code_from_generator(field_from_order(4), [[1, 1]])
        eaqec_from_lcd(c4, 1, min_distance(c4))


def test_hull_route_examples():
    f3 = field_from_order(3)
    rep = code_from_generator(f3, [[1] * 5])
    d = min_distance(rep)
    assert eaqec_from_hull_decomposition(rep, 0, d) == eaqec_from_lcd(rep, 0, d)
    c4 = code_from_generator(field_from_order(4), [[1, 1]])
    p = eaqec_from_hull_decomposition(c4, 1)
    assert (p.n, p.k, p.d, p.c) == (2, 0, 2, 2)
    assert p.degenerate and p.d_is_lower_bound and p.is_me


@given(codes(max_n=5, fields=[2, 3, 4, 9]))
@settings(max_examples=150, deadline=None)
def test_hull_route_is_always_me_and_distance_is_sound(case):
    code, _, s = case
    p = eaqec_from_hull_decomposition(code, s)
    h = hull(code, s).k
    assert (p.n, p.k, p.c) == (code.n, code.k - h, code.n - code.k + h)
    assert p.is_me
    assert p.d >= min_distance(code).value
    if not p.d_is_lower_bound:
        assert p.provenance["distance_complement"]["exactness"] == "exact"


def test_me_classification_and_invariants():
    assert classify_me(EaqecParams(5, 1, 5, False, 4, 3))
    assert classify_me(EaqecParams(4, 4, 1, False, 0, 2))
    assert not classify_me(EaqecParams(8, 2, 3, False, 1, 2))
    for bad in [(3, 4, 1, False, 0, 2), (3, 1, 0, False, 0, 2), (3, 1, 1, False, 4, 2)]:
        with pytest.raises(ValueError):
            EaqecParams(*bad)


def test_cor41_rows():
    # n = r(q-1)/(p^s-1) gives 312 and 468 for q = 5^4; q = 3^4 gives 80 and 120
    rows = family_cor41(5**4, 1, 2, 14, 1)
    assert [triple(r) for r in rows] == [(312, 13, 299, 299), (313, 13, 300, 300), (314, 13, 301, 301)]
    assert all(r.output.is_me and r.output.d_is_lower_bound for r in rows)
    assert triple(family_cor41(5**4, 1, 3, 20, 1)[0]) == (468, 19, 449, 449)
    assert family_cor41(3**4, 1, 2, 1, 0)[0].output.n == 80
    lcd = family_cor41(5**4, 1, 2, 14, 0)[0].output
    assert lcd.c == lcd.n - lcd.k


def test_cor42_rows():
    # with x1 = 364 the length is r(q-1)/gcd(x1, q-1) = 2r, so only k = 1 fits
    rows = family_cor42(3**6, 1, 364, 24, 2, 1, 0)
    assert [triple(r) for r in rows] == [(4, 1, 4, 3), (5, 1, 5, 4), (6, 1, 6, 5)]
    with pytest.raises(PreconditionViolated, match="k <= 1"):
        family_cor42(3**6, 1, 364, 24, 1, 6, 1)
    # a hypothetical large-length instance: q = 7^2, x1 = 8, x2 = 48, n = 6r
    rows = family_cor42(7**2, 1, 8, 48, 6, 5, 4)
    assert [triple(r) for r in rows] == [(36, 1, 32, 35), (37, 1, 33, 36), (38, 1, 34, 37)]


def test_cor43_rows():
    rows = family_cor43(7**6, 1, 1, 4, 2, 4, 1)
    assert [triple(r) for r in rows] == [(196, 3, 193, 193), (197, 3, 194, 194)]
    assert family_cor43(13**4, 1, 1, 4, 2, 2, 1)[0].output.n == 676


@pytest.mark.parametrize(
    "call",
    [
        lambda: family_cor41(2**4, 1, 1, 1, 0),  # even characteristic
        lambda: family_cor41(3**3, 1, 1, 1, 0),  # 2s does not divide m
        lambda: family_cor41(3**4, 1, 3, 1, 0),  # r too large
        lambda: family_cor41(3**4, 1, 2, 30, 0),  # k above the bound
        lambda: family_cor41(3**4, 1, 2, 3, 3),  # h = k
        lambda: family_cor41(12, 1, 1, 1, 0),  # not a prime power
        lambda: family_cor42(3**6, 1, 363, 24, 1, 6, 1),
        lambda: family_cor42(3**6, 1, 364, 5, 1, 6, 1),
        lambda: family_cor43(7**6, 1, 1, 8, 2, 4, 1),
        lambda: family_cor43(7**6, 1, 1, 4, 6, 4, 1),
        lambda: family_thm52_53(3, 4, 1, 1, 0, "odd"),
        lambda: family_thm52_53(4, 3, 1, 1, 0, "even"),
        lambda: family_thm52_53(3, 3, 4, 1, 0, "odd"),
    ],
)
def test_preconditions_are_enforced(call):
    with pytest.raises(PreconditionViolated):
        call()


@pytest.mark.parametrize("k", [2, 3, 4])
def test_gabidulin_family_examples(k):
    row = family_thm52_53(11, 5, k, k, 1, "odd")
    assert triple(row) == (10, 2 * k - 2, 6 - k, 12 - 2 * k)
    assert row.output.q == 11**5 and row.inputs["a"] == 2
    big = family_thm52_53(2, 100, k, k, 2, "even")
    # the ME relation forces c = 200 - (2k - 4)
    assert triple(big) == (200, 2 * k - 4, 101 - k, 204 - 2 * k)


def test_gabidulin_family_degenerate_and_ambiguous():
    row = family_thm52_53(3, 3, 3, 3, 0, "odd")
    assert row.output.d == 1
    assert gabidulin_pair_hull_dim(5, 3, 1, 2) == 2 + 1
    with pytest.raises(BranchAmbiguous):
        family_thm52_53(3, 5, 1, 3, 2, "odd")


@pytest.mark.parametrize("q,case", [(3, "odd"), (2, "even")])
def test_gabidulin_family_against_direct_construction(q, case):
    """The closed form equals the hull route on the actual matrix-product code."""
    base, m = field_from_order(q), 3
    ext = gabidulin_spec(base, m, 1).ext
    A = ones_minus_ones(ext) if case == "odd" else MatrixGF.identity(ext, 2)
    for k1 in range(1, m + 1):
        for k2 in range(1, m + 1):
            cs = tuple(gabidulin_code(gabidulin_spec(base, m, k)) for k in (k1, k2))
            for s in range(m):
                try:
                    row = family_thm52_53(q, m, k1, k2, s, case)
                except BranchAmbiguous:
                    continue
                gs = qpower_to_galois_index(base, s)
                mp = matrix_product_code(MatrixProductSpec(A, cs, gs), budget=1 << 16)
                direct = eaqec_from_hull_decomposition(mp.code, gs, budget=1 << 16)
                assert (direct.n, direct.k, direct.c) == (row.output.n, row.output.k, row.output.c)
                if mp.code.k <= 3:
                    assert min_distance(mp.code).value >= row.output.d
