import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from proxiknap.conv import (
    NEG_INF,
    NEG_THRESHOLD,
    brute_force_maxplus,
    concave_prefix,
    concave_step_convolve,
    convolve_with_choices,
    prefix_argmaxima,
    prefix_maxima,
    smawk_row_maxima,
    step_profile,
    _convolve_smawk_py,
)


def brute_leftmost_argmax(rows, cols, entry):
    out = []
    for r in range(rows):
        best, best_c = None, 0
        for c in range(cols):
            v = entry(r, c)
            if best is None or v > best:
                best, best_c = v, c
        out.append(best_c)
    return out


def random_inverse_monge(rng, rows, cols):
    # entry(q, j) = x[j] + p[q - j] with p concave is inverse Monge.
    x = [rng.randint(-50, 50) for _ in range(cols)]
    steps = sorted((rng.randint(-20, 20) for _ in range(rows + cols)), reverse=True)
    p = [0]
    for s in steps:
        p.append(p[-1] + s)

    def entry(q, j):
        return x[j] + p[q - j + cols]

    return entry


def test_smawk_matches_brute_force_many():
    rng = random.Random(42)
    for _ in range(400):
        rows = rng.randint(1, 12)
        cols = rng.randint(1, 12)
        entry = random_inverse_monge(rng, rows, cols)
        assert smawk_row_maxima(rows, cols, entry) == brute_leftmost_argmax(
            rows, cols, entry
        )


def test_smawk_rejects_empty_columns():
    with pytest.raises(ValueError):
        smawk_row_maxima(3, 0, lambda r, c: 0)


def test_step_profile_layout():
    s = step_profile([(5, 2), (3, 1)], w=3, cap=12)
    assert s[0] == 0
    assert s[3] == 5 and s[6] == 10 and s[9] == 13
    assert s[1] == NEG_INF and s[2] == NEG_INF
    assert len(s) == 10


def test_concave_prefix_takes_most_valuable_first():
    assert concave_prefix([(2, 2), (7, 1), (4, 1)], 10) == [0, 7, 11, 13, 15]
    assert concave_prefix([(9, 3)], 2) == [0, 9, 18]


def test_prefix_maxima_extension():
    x = [0, NEG_INF, 5, 2]
    assert prefix_maxima(x, extend_to=6) == [0, 0, 5, 5, 5, 5, 5]
    vals, args = prefix_argmaxima(x, extend_to=5)
    assert vals == [0, 0, 5, 5, 5, 5]
    assert args == [0, 0, 2, 2, 2, 2]


@settings(max_examples=200, deadline=None)
@given(
    data=st.data(),
    w=st.integers(min_value=1, max_value=5),
    cap=st.integers(min_value=0, max_value=60),
)
def test_convolve_matches_brute_force(data, w, cap):
    n = data.draw(st.integers(min_value=1, max_value=20))
    x = [
        data.draw(st.one_of(st.just(NEG_INF), st.integers(-30, 30)))
        for _ in range(n)
    ]
    x[0] = data.draw(st.integers(-30, 30))
    copies = data.draw(
        st.lists(
            st.tuples(st.integers(0, 20), st.integers(1, 3)),
            min_size=0,
            max_size=4,
        )
    )
    s = step_profile(copies, w, cap)
    got = concave_step_convolve(x, s, cap)
    want = brute_force_maxplus(x, s, cap)
    assert got == want


def test_pure_python_convolution_agrees_with_kernel():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 15)
        x = [rng.randint(-20, 20) if rng.random() < 0.7 else NEG_INF for _ in range(n)]
        x[0] = 0
        w = rng.randint(1, 4)
        m = rng.randint(0, 5)
        profits = sorted((rng.randint(0, 15) for _ in range(m)), reverse=True)
        prefix = [0]
        for p in profits:
            prefix.append(prefix[-1] + p)
        cap = rng.randint(0, 40)
        n_out = min(cap, (n - 1) + m * w) + 1
        out_py, ch_py = _convolve_smawk_py(x, prefix, w, n_out)
        out_k, ch_k = convolve_with_choices(x, prefix, w, cap)
        assert out_py == out_k
        # choices may differ only between equal-value decompositions
        for i, c in enumerate(ch_py):
            if out_py[i] > NEG_THRESHOLD:
                j = i - ch_k[i] * w
                assert x[j] + prefix[ch_k[i]] == out_py[i]


def test_convolution_records_usable_choices():
    x = [0, NEG_INF, NEG_INF, 4]
    prefix = [0, 10, 12]
    out, choice = convolve_with_choices(x, prefix, 2, 10)
    for i, v in enumerate(out):
        if v > NEG_THRESHOLD:
            c = choice[i]
            assert 0 <= c < len(prefix)
            assert x[i - c * 2] + prefix[c] == v
