import json
import math
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from specine import symfunc as sf
from specine.errors import BadConstantTerm, BadLinearTerm, NonZeroConstantTerm

F = Fraction


# --- independent univariate helpers -------------------------------------

def poly_mul(a, b, n):
    out = [F(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def poly_compose(a, b, n):
    """a(b(x)) truncated at degree n; b[0] must be 0."""
    assert b[0] == 0
    out = [F(0)] * (n + 1)
    power = [F(1)] + [F(0)] * n
    for c in a[: n + 1]:
        out = [o + c * p for o, p in zip(out, power)]
        power = poly_mul(power, b, n)
    return out


def power_sum_specialize(f, a, n):
    """Z_f with p_k -> a(x^k), by direct expansion of each monomial."""
    out = [F(0)] * (n + 1)
    for d in range(n + 1):
        for lam, c in f.slice(d).items():
            term = [F(1)] + [F(0)] * n
            for k in lam:
                stretched = [F(0)] * (n + 1)
                for i, x in enumerate(a[: n // k + 1]):
                    stretched[i * k] = x
                term = poly_mul(term, stretched, n)
            out = [o + c * t for o, t in zip(out, term)]
    return out


# --- random finite series -----------------------------------------------

coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def finite_series(draw, lo=0, hi=4, const=None, linear=None):
    slices = []
    for n in range(hi + 1):
        sl = {}
        if n >= lo:
            for lam in sf.partitions(n):
                if draw(st.booleans()):
                    sl[lam] = draw(coeff)
        slices.append(sl)
    if const is not None:
        slices[0] = {(): F(const)} if const else {}
    if linear is not None:
        slices[1] = {(1,): F(linear)}
    return sf.from_slices(slices)


SETTINGS = settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def z_e_n(n):
    return {lam: F(1, sf.z_lambda(lam)) for lam in sf.partitions(n)}


# --- examples -----------------------------------------------------------

def test_add_examples():
    assert (sf.z_X() + sf.z_X()).slice(1) == {(1,): 2}
    e2 = sf.zE_restricted(2, 3)
    assert (e2 + e2).slice(2) == {(1, 1): 1, (2,): 1}
    f = sf.z_E()
    assert (f + sf.zero()).agrees_with(f, 8)


def test_mul_examples():
    assert sf.mul(sf.z_X(), sf.z_X()).slice(2) == {(1, 1): 1}
    e_neg = sf.plethysm(sf.z_E(), -sf.z_X())
    assert sf.mul(sf.z_E(), e_neg).agrees_with(sf.one(), 10)
    e1 = sf.zE_restricted(1, 2)
    lhs = sf.mul(e1, e1).slice(2)
    rhs = (2 * sf.zE_restricted(2, 3) - sf.from_slices([{}, {}, {(2,): 1}])).slice(2)
    assert lhs == {(1, 1): 1}
    assert lhs == {m: c for m, c in rhs.items() if c}


def test_plethysm_examples():
    p2 = sf.from_slices([{}, {}, {(2,): 1}])
    p3 = sf.from_slices([{}, {}, {}, {(3,): 1}])
    assert sf.plethysm(p2, p3).slices(8)[6] == {(6,): 1}
    assert all(not s for i, s in enumerate(sf.plethysm(p2, p3).slices(8)) if i != 6)
    assert sf.plethysm(sf.z_E(), sf.z_X()).agrees_with(sf.z_E(), 10)
    assert sf.type_series(sf.plethysm(sf.z_E(), -sf.z_X())).coefficients(8) == [1, -1] + [0] * 7


def test_plethysm_rejects_constant_term():
    with pytest.raises(NonZeroConstantTerm):
        sf.plethysm(sf.z_E(), sf.z_E()).force(1)


def test_mul_inverse_examples():
    inv = sf.mul_inverse(sf.z_E())
    assert inv.agrees_with(sf.plethysm(sf.z_E(), -sf.z_X()), 10)
    assert sf.mul_inverse(sf.one()).agrees_with(sf.one(), 6)
    assert sf.type_series(inv).coefficients(6) == [1, -1, 0, 0, 0, 0, 0]
    assert sf.mul_inverse(-sf.one()).agrees_with(-sf.one(), 4)


def test_mul_inverse_bad_constant():
    with pytest.raises(BadConstantTerm):
        sf.mul_inverse(2 * sf.z_E()).force(0)
    with pytest.raises(BadConstantTerm):
        sf.mul_inverse(sf.z_X()).force(0)


def test_comp_inverse_examples():
    e_pos = sf.zE_restricted(1)
    omega = sf.comp_inverse(e_pos)
    egf = sf.egf(omega).coefficients(8)
    assert egf == [0] + [(-1) ** (n - 1) * math.factorial(n - 1) for n in range(1, 9)]
    assert sf.comp_inverse(sf.z_X()).agrees_with(sf.z_X(), 8)
    twice = sf.comp_inverse(omega)
    independent = sf.from_slices([{}] + [z_e_n(n) for n in range(1, 11)])
    assert twice.agrees_with(independent, 10)


def test_comp_inverse_negative_linear_term():
    f = -sf.z_X() + sf.zE_restricted(2, 4)
    g = sf.comp_inverse(f)
    assert sf.plethysm(f, g).agrees_with(sf.z_X(), 8)
    assert sf.plethysm(g, f).agrees_with(sf.z_X(), 8)


def test_comp_inverse_bad_linear_term():
    with pytest.raises(BadLinearTerm):
        sf.comp_inverse(2 * sf.z_X()).force(2)
    with pytest.raises(BadLinearTerm):
        sf.comp_inverse(sf.z_E()).force(2)


def test_specialization_examples():
    assert sf.type_series(sf.z_E()).coefficients(6) == [1] * 7
    assert sf.type_series(sf.z_X()).coefficients(3) == [0, 1, 0, 0]
    assert sf.type_series(sf.zE_restricted(2, 3)).coefficients(4) == [0, 0, 1, 0, 0]
    assert sf.egf(sf.z_E()).coefficients(5) == [1] * 6
    assert sf.egf(sf.zE_restricted(2, 3)).coefficients(4) == [0, 0, 1, 0, 0]
    omega = sf.comp_inverse(sf.zE_restricted(1))
    assert sf.egf(omega).coefficients(5) == [0, 1, -1, 2, -6, 24]


def test_z_e_restricted():
    e = sf.zE_restricted(0)
    for n in range(9):
        assert e.slice(n) == z_e_n(n)
    assert sf.zE_restricted(0, 1).agrees_with(sf.one(), 8)
    assert sf.zE_restricted(2, 3).slices(3) == [{}, {}, {(1, 1): F(1, 2), (2,): F(1, 2)}, {}]
    with pytest.raises(ValueError):
        sf.zE_restricted(3, 2)


def test_z_e_equals_exponential():
    # exp(sum p_k / k) expanded directly
    n_max = 8
    log = sf.from_slices([{}] + [{(k,): F(1, k)} for k in range(1, n_max + 1)])
    total = sf.one()
    term = sf.one()
    for j in range(1, n_max + 1):
        term = sf.mul(term, log) * F(1, j)
        total = total + term
    assert total.agrees_with(sf.z_E(), n_max)


def test_z_lambda():
    assert sf.z_lambda((2, 1)) == 2
    assert sf.z_lambda((1, 1, 1)) == 6
    assert sf.z_lambda((2, 2)) == 8
    for n in range(1, 9):
        assert sum(F(1, sf.z_lambda(lam)) for lam in sf.partitions(n)) == 1


def test_graded_determinism():
    a = sf.comp_inverse(sf.zE_restricted(1))
    b = sf.comp_inverse(sf.zE_restricted(1))
    for n in (9, 3, 7, 0):
        a.force(n)
    b.force(9)
    assert a.slices(9) == b.slices(9)
    assert a.truncation_order == 9


def test_slices_have_correct_degree():
    f = sf.plethysm(sf.z_E(), sf.comp_inverse(sf.zE_restricted(1)) - sf.z_X())
    for n, sl in enumerate(f.slices(8)):
        assert all(sum(m) == n for m in sl)


def test_monomial_helpers():
    assert sf.exponents((3, 1, 1)) == {1: 2, 3: 1}
    assert sf.from_exponents({"1": 2, "3": 1}) == (3, 1, 1)
    assert sf.monomial_degree((3, 1, 1)) == 5
    assert sf.z_E().coefficient((1, 2)) == F(1, 2)


def test_from_slices_rejects_wrong_degree():
    with pytest.raises(ValueError):
        sf.from_slices([{}, {(2,): 1}])


def test_json_round_trip():
    f = sf.plethysm(sf.z_E(), -sf.z_X()) + sf.comp_inverse(sf.zE_restricted(1))
    doc = sf.series_to_json(f, 7)
    assert doc["basis"] == "powersum"
    assert doc["slices"][2]["degree"] == 2
    back = sf.series_from_json(json.dumps(doc))
    assert back.agrees_with(f, 7)
    assert sf.type_series(f).to_json(2) == [{"num": 1, "den": 1}, {"num": 0, "den": 1}, {"num": -1, "den": 1}]


def test_substitute_matches_direct_expansion():
    f = sf.comp_inverse(sf.zE_restricted(1))
    a = sf.PowerSeries.from_coefficients([0, 1, -1, 2, F(1, 2)])
    want = power_sum_specialize(f, a.coefficients(9), 9)
    assert sf.substitute(f, a).coefficients(9) == want
    assert all(sf.substitute_coefficient(f, a, n) == want[n] for n in range(10))


def test_power_series_rejects_ambiguous_constructor():
    with pytest.raises(TypeError):
        sf.PowerSeries()


# --- properties ---------------------------------------------------------

@SETTINGS
@given(finite_series(), finite_series())
def test_type_series_is_multiplicative(f, g):
    n = 8
    lhs = sf.type_series(sf.mul(f, g)).coefficients(n)
    assert lhs == poly_mul(sf.type_series(f).coefficients(n), sf.type_series(g).coefficients(n), n)


@SETTINGS
@given(finite_series(hi=3), finite_series(lo=1, hi=3))
def test_egf_commutes_with_plethysm(f, g):
    n = 8
    scale = [F(1, math.factorial(k)) for k in range(n + 1)]
    ef = [c * s for c, s in zip(sf.egf(f).coefficients(n), scale)]
    eg = [c * s for c, s in zip(sf.egf(g).coefficients(n), scale)]
    lhs = [c * s for c, s in zip(sf.egf(sf.plethysm(f, g)).coefficients(n), scale)]
    assert lhs == poly_compose(ef, eg, n)


@SETTINGS
@given(finite_series(hi=3), finite_series(lo=1, hi=3))
def test_type_series_of_plethysm_two_paths(f, g):
    n = 8
    lhs = sf.type_series(sf.plethysm(f, g)).coefficients(n)
    assert lhs == power_sum_specialize(f, sf.type_series(g).coefficients(n), n)
    assert lhs == sf.substitute(f, sf.type_series(g)).coefficients(n)


@SETTINGS
@given(finite_series(hi=3), finite_series(lo=1, hi=3), finite_series(lo=1, hi=2))
def test_plethysm_associative(f, g, h):
    lhs = sf.plethysm(sf.plethysm(f, g), h)
    rhs = sf.plethysm(f, sf.plethysm(g, h))
    assert lhs.agrees_with(rhs, 8)


@SETTINGS
@given(finite_series(hi=4, const=1), st.sampled_from([1, -1]))
def test_mul_inverse_round_trip(f, sign):
    f = f * sign
    assert sf.mul(f, sf.mul_inverse(f)).agrees_with(sf.one(), 10)


@SETTINGS
@given(finite_series(hi=4, lo=2), st.sampled_from([1, -1]))
def test_comp_inverse_round_trip(tail, sign):
    f = sign * sf.z_X() + tail
    g = sf.comp_inverse(f)
    assert sf.plethysm(f, g).agrees_with(sf.z_X(), 10)
    assert sf.plethysm(g, f).agrees_with(sf.z_X(), 8)
