import math
from itertools import permutations, product
from math import isqrt

import pytest
from hypothesis import given, settings, strategies as st

from kohnspec.core import (
    InvalidEigenvalue,
    MismatchedSpaces,
    UnsupportedDimension,
    make_lens_space,
)
from kohnspec.isospectral import (
    IsometryWitness,
    c_matrix,
    classify_all,
    condition4_witness,
    d_invariant_check,
    dims_equal,
    span_dimension,
    spectra_equal_up_to,
    t_apply,
    t_inverse,
    verify_witness,
)
from kohnspec.spectrum import multiplicity, multiplicity_table


def units_of(k):
    return [a for a in range(1, k) if math.gcd(a, k) == 1]


def count_divisors(t):
    return sum(2 - (i == t // i) for i in range(1, isqrt(t) + 1) if t % i == 0)


def test_witness_examples():
    w = condition4_witness(make_lens_space(2, 7, [1, 2]), make_lens_space(2, 7, [2, 4]))
    assert w == IsometryWitness(a=2, sigma=(1, 2))

    w = condition4_witness(make_lens_space(2, 5, [1, 2]), make_lens_space(2, 5, [1, 3]))
    assert w == IsometryWitness(a=3, sigma=(2, 1))

    assert (
        condition4_witness(make_lens_space(2, 5, [1, 1]), make_lens_space(2, 5, [1, 2]))
        is None
    )


def test_witness_mismatch_raises():
    with pytest.raises(MismatchedSpaces):
        condition4_witness(make_lens_space(2, 5, [1, 2]), make_lens_space(2, 7, [1, 2]))


@settings(max_examples=50, deadline=None)
@given(st.integers(2, 12), st.integers(0, 10**6), st.integers(0, 10**6))
def test_witness_sound_and_complete(k, seed_a, seed_b):
    units = units_of(k)
    first = make_lens_space(2, k, [units[seed_a % len(units)], units[(seed_a // 7) % len(units)]])
    second = make_lens_space(2, k, [units[seed_b % len(units)], units[(seed_b // 7) % len(units)]])
    witness = condition4_witness(first, second)
    exhaustive = any(
        tuple((a * first.weights[s]) % k for s in sigma) == second.weights
        for a in units
        for sigma in permutations(range(2))
    )
    assert (witness is not None) == exhaustive
    if witness is not None:
        assert verify_witness(first, second, witness)


def test_spectra_equal_examples():
    space = make_lens_space(2, 5, [1, 2])
    assert spectra_equal_up_to(space, space, 200)
    assert spectra_equal_up_to(space, make_lens_space(2, 5, [2, 4]), 500)
    assert not spectra_equal_up_to(make_lens_space(2, 5, [1, 1]), space, 500)


def test_spectra_comparison_across_different_k():
    # same-n different-k spaces are comparable (and differ)
    assert not spectra_equal_up_to(
        make_lens_space(2, 3, [1, 1]), make_lens_space(2, 5, [1, 1]), 200
    )


def test_dims_equal_examples():
    assert dims_equal(make_lens_space(2, 3, [1, 2]), make_lens_space(2, 3, [2, 1]), 0, 0)
    assert not dims_equal(
        make_lens_space(2, 7, [1, 2]), make_lens_space(2, 7, [1, 3]), 0, 0
    )
    space = make_lens_space(3, 5, [1, 2, 3])
    assert dims_equal(space, space, 8, 8)


def test_dims_equal_grid_path_detects_difference():
    first = make_lens_space(3, 7, [1, 1, 1])
    second = make_lens_space(3, 7, [1, 2, 3])
    assert not dims_equal(first, second, 10, 10)


def test_d_invariant_examples():
    assert not d_invariant_check(
        make_lens_space(2, 12, [1, 5]), make_lens_space(2, 12, [1, 7])
    )
    assert d_invariant_check(
        make_lens_space(2, 5, [1, 2]), make_lens_space(2, 5, [1, 3])
    )
    with pytest.raises(UnsupportedDimension):
        d_invariant_check(
            make_lens_space(3, 5, [1, 2, 3]), make_lens_space(3, 5, [1, 2, 3])
        )
    with pytest.raises(MismatchedSpaces):
        d_invariant_check(make_lens_space(2, 5, [1, 2]), make_lens_space(2, 7, [1, 2]))


def test_isometric_pairs_share_d():
    for k in range(2, 12):
        units = units_of(k)
        for l1, l2 in product(units, repeat=2):
            first = make_lens_space(2, k, [l1, l2])
            for a in units:
                second = make_lens_space(2, k, [(a * l2) % k, (a * l1) % k])
                assert d_invariant_check(first, second)


def test_c_matrix_anchors():
    assert c_matrix(3, 6).rows() == [[1, 0, 0], [0, 0, 0], [0, 1, 0]]
    assert c_matrix(3, 18).rows() == [[1, 0, 0], [0, 0, 0], [1, 1, 0]]
    m = c_matrix(5, 2)
    assert m.entries[0][1] == 1 and sum(m.as_vector()) == 1


def test_c_matrix_entry_total_is_divisor_count():
    for k in (3, 5, 7):
        for lam in range(2, 300, 2):
            assert sum(c_matrix(k, lam).as_vector()) == count_divisors(lam // 2)


def test_c_matrix_validation():
    with pytest.raises(InvalidEigenvalue):
        c_matrix(3, 7)
    with pytest.raises(InvalidEigenvalue):
        c_matrix(3, 0)


def test_c_matrix_counts_residue_classes():
    # direct definition check on a composite eigenvalue
    k, lam = 4, 120
    expected = [[0] * k for _ in range(k)]
    for p in range(lam):
        for q in range(1, lam + 1):
            if 2 * q * (p + 1) == lam:
                expected[p % k][q % k] += 1
    assert c_matrix(k, lam).rows() == expected


def test_t_apply_examples():
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert t_apply(identity) == [[0, 1, 0], [0, 0, 1], [1, 0, 0]]


@given(st.integers(2, 6), st.integers(0, 10**9))
def test_t_inverse_undoes_t_apply(size, seed):
    rng = [[(seed * (i * size + j + 1)) % 97 for j in range(size)] for i in range(size)]
    assert t_inverse(t_apply(rng)) == [list(row) for row in rng]
    assert t_apply(t_inverse(rng)) == [list(row) for row in rng]


def test_shifted_c_matrix_symmetric():
    for k in (3, 5, 7):
        for lam in range(2, 1001, 2):
            shifted = t_inverse(c_matrix(k, lam).rows())
            assert shifted == [list(col) for col in zip(*shifted)], (k, lam)


def test_span_examples():
    assert span_dimension(3, range(2, 201, 2)) == 6
    assert span_dimension(3, [6]) == 1
    assert span_dimension(5, range(2, 601, 2)) == 15


def test_span_never_exceeds_symmetric_dimension():
    for k in (3, 4, 5, 6, 7):
        rank = span_dimension(k, range(2, 401, 2))
        assert rank <= k * (k + 1) // 2


def test_classify_small_orders():
    assert classify_all(2) == {(1, 1): [(1, 1)]}
    assert list(classify_all(5)) == [(1, 1), (1, 2), (1, 4)]


def test_classify_partitions_all_pairs():
    for k in (5, 7, 8, 12):
        classes = classify_all(k)
        members = [pair for cls in classes.values() for pair in cls]
        units = units_of(k)
        assert sorted(members) == sorted(product(units, repeat=2))


def test_classify_matches_orbit_enumeration():
    for k in (5, 7, 9):
        units = units_of(k)
        orbits = set()
        for pair in product(units, repeat=2):
            orbit = frozenset(
                ((a * x) % k, (a * y) % k)
                for a in units
                for x, y in (pair, pair[::-1])
            )
            orbits.add(orbit)
        assert len(classify_all(k)) == len(orbits)


def test_classify_representatives_mutually_distinct_spectra():
    reps = [make_lens_space(2, 5, rep) for rep in classify_all(5)]
    tables = [multiplicity_table(space, 500) for space in reps]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert tables[i] != tables[j]


def test_unequal_d_pair_has_explicit_spectral_difference():
    first = make_lens_space(2, 5, [1, 1])
    second = make_lens_space(2, 5, [1, 2])
    assert not d_invariant_check(first, second)
    assert multiplicity(first, 4) == 3
    assert multiplicity(second, 4) == 1
