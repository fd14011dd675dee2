import itertools
import random

import pytest

from mnrules import characters as ch
from mnrules.characters import (
    CharacterKind,
    IdentityViolation,
    KingTableau,
    RouteMismatchError,
    SpoTableau,
    alternant_minus,
    alternant_plus,
    branch_last_y,
    character,
    checked_character,
    even_orthogonal_char,
    hook_schur,
    king_tableaux,
    odd_orthogonal_char,
    orthosymplectic_char,
    power_sum_bar,
    schur,
    skew_schur,
    spo_power_sum,
    spo_tableaux,
    super_power_sum,
    symplectic_char,
)
from mnrules.laurent import LaurentPoly, exact_divide
from mnrules.partitions import Partition, SkewShape, StaircaseDelta, partitions_up_to

P = Partition
K = CharacterKind


def poly(nx, ny, *terms):
    total = LaurentPoly.zero(nx, ny)
    for c, xs, ys in terms:
        total = total + LaurentPoly.monomial(xs, ys, c, nx, ny)
    return total


# --- frozen values (independently computed with a general computer algebra system) ---

SP_11_N2 = poly(2, 0, (1, (1, 1), ()), (1, (1, -1), ()), (1, (-1, 1), ()), (1, (-1, -1), ()), (1, (0, 0), ()))

SPO_11_N2_M1 = poly(
    2, 1,
    (1, (1, 1), (0,)), (1, (1, -1), (0,)), (1, (-1, 1), (0,)), (1, (-1, -1), (0,)), (1, (0, 0), (0,)),
    (1, (1, 0), (1,)), (1, (-1, 0), (1,)), (1, (0, 1), (1,)), (1, (0, -1), (1,)), (1, (0, 0), (2,)),
)

OE_11_N2 = poly(2, 0, (1, (1, 1), ()), (1, (1, -1), ()), (2, (0, 0), ()), (1, (-1, 1), ()), (1, (-1, -1), ()))

OO_1_N2 = poly(2, 0, (1, (1, 0), ()), (1, (0, 1), ()), (1, (0, 0), ()), (1, (0, -1), ()), (1, (-1, 0), ()))

# A_delta with delta = (2, 1), i.e. doubled (4, 2)
A_DELTA_N2 = poly(
    2, 0,
    (1, (2, 1), ()), (-1, (2, -1), ()), (-1, (1, 2), ()), (1, (1, -2), ()),
    (1, (-1, 2), ()), (-1, (-1, -2), ()), (-1, (-2, 1), ()), (1, (-2, -1), ()),
)


def test_symplectic_display():
    assert symplectic_char(P([1, 1]), 2) == SP_11_N2
    assert symplectic_char(P([1, 1]), 2, route="king") == SP_11_N2


def test_five_king_tableaux_of_column():
    tabs = sorted(t.rows for t in king_tableaux(P([1, 1]), 2))
    # 1 < 1bar < 2 < 2bar coded as 1..4
    assert tabs == [((1,), (3,)), ((1,), (4,)), ((2,), (3,)), ((2,), (4,)), ((3,), (4,))]
    assert str(KingTableau(P([1, 1]), ((2,), (4,)), 2)) == "1bar/2bar"


def test_king_tableau_validity():
    assert KingTableau(P([1, 1]), ((3,), (4,)), 2).is_valid()
    assert not KingTableau(P([1, 1]), ((1,), (2,)), 2).is_valid()  # row 2 entry below 2
    assert not KingTableau(P([2]), ((2, 1),), 2).is_valid()


def test_orthosymplectic_display():
    assert orthosymplectic_char(P([1, 1]), 2, 1) == SPO_11_N2_M1
    assert orthosymplectic_char(P([1, 1]), 2, 1, route="tableaux") == SPO_11_N2_M1
    assert len(SPO_11_N2_M1) == 10


def test_spo_tableau_example_is_valid():
    # rows "2 1' 2'" and "2bar 1'" with n = m = 2; primes coded 5, 6
    t = SpoTableau(P([3, 2]), ((3, 5, 6), (4, 5)), 2, 2)
    assert t.is_valid()
    assert t.weight() == ((0, 0), (2, 1))
    assert str(t) == "2 1' 2'/2bar 1'"
    assert t.rows in {s.rows for s in spo_tableaux(P([3, 2]), 2, 2)}


def test_spo_tableau_rejects_weak_prime_row():
    assert not SpoTableau(P([2]), ((5, 5),), 2, 1).is_valid()
    assert SpoTableau(P([1, 1]), ((5,), (5,)), 2, 1).is_valid()


def test_even_orthogonal_constant_term_is_two():
    assert even_orthogonal_char(P([1, 1]), 2) == OE_11_N2


def test_odd_orthogonal_small():
    assert odd_orthogonal_char(P([1]), 2) == OO_1_N2
    assert odd_orthogonal_char(P([1]), 1) == poly(1, 0, (1, (1,), ()), (1, (0,), ()), (1, (-1,), ()))


def test_alternant_delta():
    assert alternant_minus(StaircaseDelta.symplectic(2).doubled) == A_DELTA_N2


def test_schur_small():
    x1, x2 = LaurentPoly.x(1, 2), LaurentPoly.x(2, 2)
    assert schur(P([1]), 2) == x1 + x2
    assert schur(P([1, 1]), 2) == x1 * x2
    assert schur(P([1, 1, 1]), 2).is_zero()
    assert schur(P(), 0) == 1


def test_characters_vanish_past_n():
    for f in (symplectic_char, odd_orthogonal_char, even_orthogonal_char):
        assert f(P([1, 1, 1]), 2).is_zero()
    assert list(king_tableaux(P([1, 1, 1]), 2)) == []


def test_skew_schur_counts():
    # (2,1)/(1) is two disconnected boxes: s_1^2 in one variable is y^2
    assert skew_schur(SkewShape(P([2, 1]), P([1])), 1) == LaurentPoly.y(1, 0, 1, 2)
    assert skew_schur(SkewShape(P([2, 2]), P([2, 2])), 3) == 1
    assert skew_schur(SkewShape(P([1, 1])), 1).is_zero()


@pytest.mark.parametrize("n", [1, 2, 3])
def test_route_agreement_small(n):
    for lam in partitions_up_to(4, n):
        assert schur(lam, n, "tableaux") == schur(lam, n, "bialternant")
        assert symplectic_char(lam, n, "king") == symplectic_char(lam, n, "weyl")
        for m in (1, 2):
            assert orthosymplectic_char(lam, n, m, "tableaux") == orthosymplectic_char(lam, n, m)


def test_unknown_route():
    with pytest.raises(ValueError):
        schur(P([1]), 2, route="magic")
    with pytest.raises(ValueError):
        symplectic_char(P([1]), 2, route="magic")


def test_checked_character_detects_mismatch(monkeypatch):
    fake = LaurentPoly.constant(7, 2)
    monkeypatch.setattr(ch, "symplectic_char",
                        lambda lam, n, route="weyl": fake if route == "king" else ch.symplectic_weyl(lam, n))
    with pytest.raises(RouteMismatchError):
        checked_character(K.SYMPLECTIC, P([1]), 2)


def random_strict(rng, n, half):
    vals = rng.sample(range(0, 7), n)
    doubled = sorted((2 * v + (1 if half else 0) for v in vals), reverse=True)
    return doubled


@pytest.mark.parametrize("seed", range(8))
def test_alternant_multiplication_identities(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    r = rng.randint(1, 5)
    alpha = random_strict(rng, n, half=rng.random() < 0.5)
    pb = power_sum_bar(r, n)
    for alt in (alternant_minus, alternant_plus):
        rhs = LaurentPoly.zero(n)
        for j in range(n):
            for sgn in (1, -1):
                shifted = list(alpha)
                shifted[j] += sgn * 2 * r
                rhs = rhs + alt(shifted)
        assert pb * alt(alpha) == rhs


@pytest.mark.parametrize("kind, f", [
    ("sp", symplectic_char), ("oo", odd_orthogonal_char), ("oe", even_orthogonal_char),
])
def test_weyl_characters_are_invariant(kind, f):
    n = 3
    for lam in [P([2, 1]), P([1, 1, 1]), P([3])]:
        val = f(lam, n)
        for perm in itertools.permutations(range(1, n + 1)):
            assert val.permute_x(perm) == val
        for i in range(1, n + 1):
            assert val.invert_x(i) == val


def test_hook_schur_supersymmetric():
    n, m = 2, 2
    for lam in partitions_up_to(4):
        h = hook_schur(lam, n, m)
        # substitute x_n = t, y_m = -t: the x_n^a y_m^b coefficients must collapse
        collapsed = {}
        for e, c in h.items():
            a, b = e[n - 1] // 2, e[n + m - 1]
            key = e[: n - 1] + e[n:n + m - 1]
            collapsed.setdefault(key, {})
            deg = a + b
            collapsed[key][deg] = collapsed[key].get(deg, 0) + c * (-1) ** b
        for key, by_deg in collapsed.items():
            assert all(v == 0 for d, v in by_deg.items() if d != 0), (lam, key)


@pytest.mark.parametrize("kind", [K.HOOK_SCHUR, K.ORTHOSYMPLECTIC])
def test_super_characters_vanish_iff_outside_hook(kind):
    for n, m in [(1, 1), (2, 1), (1, 2)]:
        for lam in partitions_up_to(5):
            val = character(kind, lam, n, m)
            assert val.is_zero() == (lam.part(n + 1) > m), (kind, lam, n, m)


def test_spo_without_y_is_symplectic():
    for lam in partitions_up_to(4, 2):
        assert orthosymplectic_char(lam, 2, 0) == symplectic_char(lam, 2)


def test_symmetric_in_y():
    val = orthosymplectic_char(P([2, 1]), 1, 2)
    assert val.permute_y([2, 1]) == val
    val = hook_schur(P([2, 2]), 1, 2)
    assert val.permute_y([2, 1]) == val


@pytest.mark.parametrize("kind", [K.HOOK_SCHUR, K.ORTHOSYMPLECTIC])
def test_branching_rule(kind):
    for lam in partitions_up_to(4):
        for n, m in [(1, 1), (2, 1), (1, 2)]:
            used = branch_last_y(kind, lam, n, m)
            assert (lam, 0) in used


def test_branching_examples():
    used = branch_last_y(K.ORTHOSYMPLECTIC, P([2, 1]), 2, 1)
    assert sorted(used) == [(P([1]), 2), (P([1, 1]), 1), (P([2]), 1), (P([2, 1]), 0)]


def test_branching_rejects_other_kinds():
    with pytest.raises(ValueError):
        branch_last_y(K.SYMPLECTIC, P([1]), 2, 1)


def test_branching_detects_violation(monkeypatch):
    real = ch.character

    def wrong(kind, lam, n, m=0):
        val = real(kind, lam, n, m)
        return val + 1 if m == 1 and lam == P([1]) else val

    monkeypatch.setattr(ch, "character", wrong)
    with pytest.raises(IdentityViolation):
        branch_last_y(K.HOOK_SCHUR, P([1]), 1, 1)


def test_power_sums():
    x1 = LaurentPoly.x(1, 1, 1)
    y1 = LaurentPoly.y(1, 1, 1)
    assert spo_power_sum(2, 1, 1) == x1 ** 2 + x1.bar() ** 2 - y1 ** 2
    assert spo_power_sum(3, 1, 1) == x1 ** 3 + x1.bar() ** 3 + y1 ** 3
    assert super_power_sum(2, 1, 1) == x1 ** 2 - y1 ** 2
    assert power_sum_bar(0, 2) == 1
    assert spo_power_sum(0, 1, 1) == 1


def test_character_lifts_into_super_ring():
    val = character(K.SYMPLECTIC, P([1]), 1, 2)
    assert (val.nx, val.ny) == (1, 2)
    with pytest.raises(ValueError):
        character(K.SKEW_SCHUR, P([1]), 1)


def test_kind_names():
    assert K.from_name("sp") is K.SYMPLECTIC
    assert K.from_name("odd-orthogonal") is K.ODD_ORTHOGONAL
    assert K.from_name("SPO") is K.ORTHOSYMPLECTIC
    assert K.EVEN_ORTHOGONAL.label == "oe"
    with pytest.raises(ValueError):
        K.from_name("so")


def test_even_orthogonal_scale_factor():
    # with lam_n > 0 the ratio is doubled relative to lam_n = 0 normalization
    n = 2
    delta = StaircaseDelta.even_orthogonal(n)
    lam = P([1, 1])
    ratio = exact_divide(alternant_plus(delta.shifted(lam)), alternant_plus(delta.doubled))
    assert even_orthogonal_char(lam, n) == ratio * 2
    lam = P([1])
    ratio = exact_divide(alternant_plus(delta.shifted(lam)), alternant_plus(delta.doubled))
    assert even_orthogonal_char(lam, n) == ratio
    assert even_orthogonal_char(P(), n) == 1
