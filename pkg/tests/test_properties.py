import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from kmrd import bilinear_form, validate_gcm, weyl_vector
from kmrd.gcm import FiniteType, NotSymmetrizable, Singular, pair_with_coroot
from kmrd.rank2 import QuadNum
from kmrd.survey import canonical_matrix
from kmrd.weyl import apply, is_real_root, reflect_simple, word_to_element

FF = ((2, -2, 0), (-2, 2, -1), (0, -1, 2))


def ff_spec():
    return validate_gcm(FF)


rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
)
vectors = st.tuples(rationals, rationals, rationals)
words = st.lists(st.integers(min_value=1, max_value=3), max_size=10)


@settings(max_examples=100, deadline=None)
@given(u=vectors, v=vectors, word=words)
def test_bilinear_form_weyl_invariant(u, v, word):
    spec = ff_spec()
    w = word_to_element(spec, word)
    assert bilinear_form(spec, apply(w, u), apply(w, v)) == bilinear_form(spec, u, v)


@settings(max_examples=60, deadline=None)
@given(v=vectors, word=words)
def test_word_inverse_is_inverse(v, word):
    spec = ff_spec()
    w = word_to_element(spec, word)
    from kmrd.linalg import mat_vec

    assert mat_vec(w.inverse, apply(w, v)) == tuple(v)


@settings(max_examples=60, deadline=None)
@given(v=vectors, i=st.integers(min_value=1, max_value=3))
def test_simple_reflection_involution_and_isometry(v, i):
    spec = ff_spec()
    assert reflect_simple(spec, i, reflect_simple(spec, i, v)) == tuple(v)
    assert bilinear_form(
        spec, reflect_simple(spec, i, v), reflect_simple(spec, i, v)
    ) == bilinear_form(spec, v, v)


@settings(max_examples=60, deadline=None)
@given(
    v=st.tuples(*(st.integers(min_value=-4, max_value=4),) * 3),
    word=words,
)
def test_real_root_orbit_closed(v, word):
    spec = ff_spec()
    if not is_real_root(spec, v):
        return
    image = tuple(int(x) for x in apply(word_to_element(spec, word), v))
    assert is_real_root(spec, image)


@settings(max_examples=100, deadline=None)
@given(
    x=st.fractions(min_value=Fraction(-30), max_value=Fraction(30), max_denominator=9),
    y=st.fractions(min_value=Fraction(-30), max_value=Fraction(30), max_denominator=9),
    rad=st.sampled_from([5, 6, 8, 12, 15]),
)
def test_quadnum_sign_matches_float(x, y, rad):
    value = float(x) + float(y) * math.sqrt(rad)
    expected = 0 if abs(value) < 1e-9 else (1 if value > 0 else -1)
    got = QuadNum(x, y, rad).sign()
    if abs(value) >= 1e-9:
        assert got == expected


@settings(max_examples=60, deadline=None)
@given(
    entries=st.lists(st.integers(min_value=-3, max_value=0), min_size=6, max_size=6),
    perm=st.permutations(list(range(3))),
)
def test_canonical_matrix_invariant(entries, perm):
    m = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
    pairs = [(0, 1), (0, 2), (1, 2)]
    for (i, j), x, y in zip(pairs, entries[:3], entries[3:]):
        m[i][j] = x
        m[j][i] = y
    permuted = tuple(tuple(m[perm[i]][perm[j]] for j in range(3)) for i in range(3))
    assert canonical_matrix(permuted) == canonical_matrix(m)


@settings(max_examples=80, deadline=None)
@given(
    entries=st.lists(st.integers(min_value=-3, max_value=0), min_size=3, max_size=3),
)
def test_symmetrizer_symmetrizes(entries):
    m = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
    pairs = [(0, 1), (0, 2), (1, 2)]
    for (i, j), x in zip(pairs, entries):
        m[i][j] = x
        m[j][i] = x if x else 0
    try:
        spec = validate_gcm(m)
    except (FiniteType, Singular, NotSymmetrizable):
        return
    d = spec.symmetrizer
    assert all(x > 0 for x in d)
    assert math.gcd(*d) == 1
    for i in range(3):
        for j in range(3):
            assert d[i] * m[i][j] == d[j] * m[j][i]
    assert spec.gram == tuple(
        tuple(d[i] * m[i][j] for j in range(3)) for i in range(3)
    )


@settings(max_examples=40, deadline=None)
@given(
    a=st.integers(min_value=2, max_value=6),
    b=st.integers(min_value=2, max_value=6),
)
def test_weyl_vector_property_rank2(a, b):
    if a * b <= 4:
        return
    spec = validate_gcm([[2, -b], [-a, 2]])
    rho = weyl_vector(spec)
    for i in (1, 2):
        assert pair_with_coroot(spec, rho, spec.simple_root(i)) == 1
