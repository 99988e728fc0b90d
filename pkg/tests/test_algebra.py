import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibhess.algebra import (
    GAUSS,
    INT,
    POLY,
    T,
    ZERO_POLY,
    GaussianInt,
    Poly,
    fib,
    lift,
    lucas,
    one,
    parse,
    render,
    zero,
)

small = st.integers(-50, 50)
gauss = st.builds(GaussianInt, small, small)
poly = st.lists(small, max_size=5).map(Poly)
values = {INT: small, GAUSS: gauss, POLY: poly}


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (6, 8), (0, 0), (-1, 1), (-2, -1), (30, 832040)])
def test_fib_values(n, expected):
    assert fib(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 1), (3, 3), (4, 4), (5, 7), (0, -1)])
def test_lucas_values(n, expected):
    assert lucas(n) == expected


def test_fib_squares_stay_exact():
    assert fib(30) ** 2 == 692290561600
    assert fib(60) == 1548008755920


@pytest.mark.parametrize("n", range(-10, 31))
def test_cassini(n):
    assert fib(n + 1) * fib(n - 1) - fib(n) ** 2 == (-1) ** n


@pytest.mark.parametrize("n", range(0, 31))
def test_negative_index_reflection(n):
    assert fib(-n) == (-1) ** (n + 1) * fib(n)


def test_lucas_recurrence_backwards():
    for n in range(-10, 20):
        assert lucas(n) == lucas(n - 1) + lucas(n - 2)


def test_poly_examples():
    a = Poly.linear(1, 1)
    assert a * a == Poly((1, 2, 1))
    assert Poly.linear(2, 1) * Poly.linear(2, 3) == Poly((3, 8, 4))
    p = Poly.linear(3, 2)
    assert (p + -p).is_zero() and (p + -p) == ZERO_POLY
    assert p.eval(1) == 5
    c3 = T * Poly.const(fib(4)) + Poly.const(fib(3))
    assert c3.eval(-1) == -1
    assert ZERO_POLY.eval(7) == 0


def test_poly_canonical_form():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)).coeffs == ()
    assert ZERO_POLY.degree is None
    assert Poly((5,)).degree == 0
    assert Poly((0, 0, 3)).degree == 2


@pytest.mark.parametrize(
    "p, text",
    [
        (Poly((-16, -34, -15)), "-15t^2-34t-16"),
        (Poly((1, 1)), "t+1"),
        (Poly((0, -1)), "-t"),
        (ZERO_POLY, "0"),
        (Poly((2, 0, 1)), "t^2+2"),
        (Poly((-3,)), "-3"),
    ],
)
def test_poly_rendering(p, text):
    assert str(p) == text
    assert Poly.parse(text) == p


@pytest.mark.parametrize(
    "g, text",
    [
        (GaussianInt(0, 1), "i"),
        (GaussianInt(0, -1), "-i"),
        (GaussianInt(1, 2), "1+2i"),
        (GaussianInt(2, -3), "2-3i"),
        (GaussianInt(3, 0), "3"),
        (GaussianInt(0, 2), "2i"),
        (GaussianInt(0, 0), "0"),
    ],
)
def test_gaussian_rendering(g, text):
    assert str(g) == text
    assert GaussianInt.parse(text) == g


def test_gaussian_unit():
    i = GaussianInt(0, 1)
    assert i * i == GaussianInt(-1, 0)
    assert GaussianInt(1, 2) * GaussianInt(3, 4) == GaussianInt(-5, 10)


def test_lift_and_identities():
    assert lift(3, GAUSS) == GaussianInt(3, 0)
    assert lift(3, POLY) == Poly((3,))
    assert zero(POLY) == ZERO_POLY and one(INT) == 1
    assert parse("t+1", POLY) == Poly((1, 1))
    assert render((Poly((1, 1)), 2)) == "[t+1, 2]"


def test_mixed_tags_rejected():
    with pytest.raises(TypeError):
        GaussianInt(1, 1) + Poly((1,))
    with pytest.raises(TypeError):
        Poly((1,)) * GaussianInt(0, 1)
    with pytest.raises(TypeError):
        lift(True, INT)


@pytest.mark.parametrize("tag", [INT, GAUSS, POLY])
@given(data=st.data())
def test_ring_axioms(tag, data):
    a, b, c = (data.draw(values[tag]) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a * one(tag) == a
    assert a + zero(tag) == a
    assert a + (-a) == zero(tag)


@given(poly, poly, small)
def test_eval_is_a_homomorphism(a, b, x):
    assert (a * b).eval(x) == a.eval(x) * b.eval(x)
    assert (a + b).eval(x) == a.eval(x) + b.eval(x)


@given(small, small)
def test_gaussian_norm(a, b):
    z = GaussianInt(a, b) * GaussianInt(a, -b)
    assert z.im == 0 and z.re == a * a + b * b


@given(poly)
def test_poly_render_round_trip(p):
    assert Poly.parse(str(p)) == p


@given(gauss)
def test_gaussian_render_round_trip(g):
    assert GaussianInt.parse(str(g)) == g
