import random
from itertools import combinations, product
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from helberg.channel import delete_at, index_of
from helberg.codebook import codebook, max_size_search
from helberg.codeword import moment
from helberg.decoder import (DecodeTrace, _Arrangement, decode, decode_multi, decode_one,
                             decode_two_binary, recover_moment)
from helberg.errors import InvalidParametersError, UndecodableError
from helberg.oracle import brute_decode_deletions
from helberg.params import make_params

GOLDEN = Path(__file__).parent / "golden"
X1 = (1, 2, 2, 0, 2, 2, 1, 2)
X2 = (1, 1, 0, 1, 0, 1, 1, 0, 1, 1)


@pytest.fixture
def ternary():
    return make_params(3, 2, 8, 23)


@pytest.fixture
def binary():
    return make_params(2, 2, 10, 62)


def golden(name):
    return (GOLDEN / name).read_text().strip()


def test_recover_moment(ternary, binary):
    assert recover_moment(ternary, (1, 2, 2, 0, 2, 1, 2)) == 3884
    assert recover_moment(binary, (1, 1, 0, 1, 0, 1, 0, 1)) == 294
    p = make_params(3, 2, 8, 3000)
    assert recover_moment(p, (1, 0, 0, 0, 0, 0, 0)) == 3000
    with pytest.raises(ValueError):
        recover_moment(ternary, X1)
    with pytest.raises(InvalidParametersError):
        recover_moment(make_params(2, 1, 5, 0), (0, 0, 0, 0))


def test_decode_one_golden(ternary):
    out, trace = decode_one(ternary, (1, 2, 2, 0, 2, 1, 2), 2498)
    assert out == X1
    assert trace.to_text() == golden("ternary_one_deletion.trace")
    assert trace.indices() == [2498, 706, 378, 0]


def test_decode_two_binary_golden(binary):
    out, trace = decode_two_binary(binary, (1, 1, 0, 1, 0, 1, 0, 1), 210)
    assert out == X2
    assert trace.to_text() == golden("binary_two_deletions.trace")


def test_decode_multi_golden(ternary):
    out, trace = decode_multi(ternary, (1, 2, 0, 2, 1, 2), 3380)
    assert out == X1
    assert trace.to_text() == golden("ternary_two_deletions.trace")


def test_trace_text_roundtrip(ternary):
    _, trace = decode(ternary, (1, 2, 0, 2, 1, 2))
    assert DecodeTrace.from_text(trace.to_text()) == trace


def test_all_zero_sender():
    p = make_params(3, 2, 8, 0)
    assert decode_one(p, (0,) * 7, 0)[0] == (0,) * 8
    b = make_params(2, 2, 9, 0)
    for D in combinations(range(1, 10), 2):
        assert decode_two_binary(b, delete_at((0,) * 9, D), 0)[0] == (0,) * 9


def test_decode_one_every_position(ternary):
    x = random.Random(3).choice(codebook(ternary))
    for pos in range(1, 9):
        xd = delete_at(x, [pos])
        out, _ = decode_one(ternary, xd, index_of(ternary, x, xd))
        assert out == x
        assert brute_decode_deletions(ternary, xd) == {x}


def test_two_binary_exhaustive_and_matches_multi(binary):
    for x in codebook(binary):
        for D in combinations(range(1, 11), 2):
            xd = delete_at(x, D)
            I = index_of(binary, x, xd)
            a, ta = decode_two_binary(binary, xd, I)
            b, tb = decode_multi(binary, xd, I)
            assert a == b == x
            assert ta == tb


@pytest.mark.parametrize("q,d,n", [(3, 2, 9), (2, 3, 10), (3, 3, 7)])
def test_multi_exhaustive_at_best_residue(q, d, n):
    r = max_size_search(q, d, n).argmax_residues[0]
    p = make_params(q, d, n, r)
    for x in codebook(p):
        for c in range(1, d + 1):
            for D in combinations(range(1, n + 1), c):
                xd = delete_at(x, D)
                out, trace = decode(p, xd)
                assert out == x
                assert brute_decode_deletions(p, xd) == {x}
                assert len(trace) <= 3 * n


def test_boundary_shift_when_gap_equals_index():
    # the left symbol's weight gain equals the index exactly: shifting is right
    p = make_params(3, 2, 3, 18)
    out, trace = decode(p, (2,))
    assert out == (0, 0, 2)
    assert trace.indices() == [16, 0]


def test_decode_dispatch_edge_cases(ternary):
    assert decode(ternary, X1)[0] == X1
    with pytest.raises(UndecodableError):
        decode(ternary, (1, 2, 2, 0, 2, 2, 1, 1))
    with pytest.raises(UndecodableError):
        decode(ternary, (1, 2, 2, 0, 2))
    with pytest.raises(UndecodableError):
        decode(ternary, X1 + (0,))
    with pytest.raises(InvalidParametersError):
        decode(make_params(2, 1, 6, 0), (0, 0, 0, 0, 0))
    with pytest.raises(InvalidParametersError):
        decode(ternary, (1, 2, 0, 2, 1, 2), algorithm="d2")
    with pytest.raises(ValueError):
        decode(ternary, (1, 2, 0, 2, 1, 2), algorithm="nope")


def test_forced_algorithms_agree(binary):
    xd = (1, 1, 0, 1, 0, 1, 0, 1)
    assert decode(binary, xd, "d2")[0] == decode(binary, xd, "dm")[0] == X2
    assert decode(make_params(3, 2, 8, 23), (1, 2, 2, 0, 2, 1, 2), "d1")[0] == X1


def test_garbage_input_is_rejected_not_misdecoded(ternary):
    # received words that no codeword explains must raise
    for xd in product(range(3), repeat=6):
        preimages = brute_decode_deletions(ternary, xd)
        if preimages:
            assert decode(ternary, xd)[0] in preimages
        else:
            with pytest.raises(UndecodableError):
                decode(ternary, xd)


def test_wrong_index_is_undecodable(ternary):
    with pytest.raises(UndecodableError):
        decode_one(ternary, (1, 2, 2, 0, 2, 1, 2), 2499)


def _check_invariant(p, x, xd, trace):
    M = moment(p, x)
    for step, arrangement, I in trace.replay(p, xd):
        known = sum(p.w(i) * s for i, s in enumerate(arrangement, 1) if s is not None)
        assert I == step.I == M - known
        assert I >= 0
    assert tuple(arrangement) == x


@st.composite
def corrupted_codeword(draw, max_n=24):
    q = draw(st.integers(2, 5))
    d = draw(st.integers(2, 3))
    n = draw(st.integers(d + 1, max_n))
    x = tuple(draw(st.lists(st.integers(0, q - 1), min_size=n, max_size=n)))
    m_extra = draw(st.integers(0, 50))
    base = make_params(q, d, n)
    m = base.m + m_extra
    p = make_params(q, d, n, moment(base, x) % m, m)
    D = draw(st.sets(st.integers(1, n), min_size=1, max_size=d))
    return p, x, delete_at(x, D)


@settings(max_examples=400, deadline=None)
@given(corrupted_codeword())
def test_roundtrip_and_loop_invariant(case):
    p, x, xd = case
    out, trace = decode(p, xd)
    assert out == x
    _check_invariant(p, x, xd, trace)
    assert len(trace) <= 3 * p.n


@settings(max_examples=150, deadline=None)
@given(corrupted_codeword(max_n=9))
def test_matches_oracle(case):
    p, x, xd = case
    assert brute_decode_deletions(p, xd) == {decode(p, xd)[0]}


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 5), st.integers(2, 4), st.data())
def test_greedy_fit_matches_tuple_enumeration(q, d, data):
    n = data.draw(st.integers(d + 1, 14))
    c = data.draw(st.integers(1, d))
    p = make_params(q, d, n)
    P = data.draw(st.integers(c, n))
    window = [p.w(P - c + k) for k in range(1, c + 1)]
    I = data.draw(st.integers(0, (q - 1) * sum(window) + 3))
    arr = _Arrangement(p, (0,) * (n - c), I, c)
    arr.P = P
    brute = [s for s in product(range(q), repeat=c) if sum(a * b for a, b in zip(s, window)) == I]
    got = arr.fit_placeholders()
    assert len(brute) <= 1
    assert (got is None and not brute) or [tuple(got)] == brute
