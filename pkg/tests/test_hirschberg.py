import random

from hypothesis import given, settings, strategies as st

from nearalign.core import EXCEEDED, apply_script
from nearalign.hirschberg import HirschbergStats, banded_distance, modified_hirschberg, smallest_feasible_start
from nearalign.oracle import edit_cost

small = st.binary(max_size=40).map(lambda b: bytes(97 + c % 3 for c in b))


def test_equal_windows():
    assert modified_hirschberg("abc", "abc", 1).cost == 0
    assert banded_distance("abcd", "abcd", 0) == 0


def test_example_strings():
    script = modified_hirschberg("123456789", "123467890", 2)
    assert script.cost == 2
    kinds = sorted((op.kind, op.s_pos, op.t_pos) for op in script.ops)
    assert kinds == [("del", 5, None), ("ins", None, 9)]
    assert apply_script("123456789", script) == b"123467890"


def test_over_budget():
    assert modified_hirschberg("aaaa", "bbbb", 2) is EXCEEDED
    assert banded_distance("ab", "ba", 1) is EXCEEDED


def test_length_gap_beyond_band():
    assert banded_distance("abcdef", "ab", 3) is EXCEEDED


@settings(max_examples=300, deadline=None)
@given(small, small, st.integers(0, 8))
def test_matches_full_dp(s, t, d):
    truth = edit_cost(s, t)
    got = banded_distance(s, t, d)
    script = modified_hirschberg(s, t, d)
    if truth > d:
        assert got is EXCEEDED and script is EXCEEDED
    else:
        assert got == truth == script.cost
        assert script.is_canonical()
        assert apply_script(s, script) == t


def test_structural_bounds():
    rng = random.Random(5)
    for _ in range(300):
        m = rng.randint(2, 64)
        d = rng.randint(0, 8)
        s = bytes(rng.randrange(2) for _ in range(m))
        t = bytearray(s)
        for _ in range(rng.randint(0, d)):
            t[rng.randrange(m)] = rng.randrange(2)
        stats = HirschbergStats()
        if modified_hirschberg(s, bytes(t), d, stats) is EXCEEDED:
            continue
        assert stats.max_row_cells <= 2 * d + 1
        assert stats.max_depth <= (m - 1).bit_length() + 1


def test_smallest_feasible_start_examples():
    assert smallest_feasible_start("abcd", "abcd", 0) == 1
    assert smallest_feasible_start("yy123456789", "xx123467890", 2) == 3
    assert smallest_feasible_start("ab", "cd", 0) is None


def test_smallest_feasible_start_brute_force():
    rng = random.Random(9)
    for _ in range(1500):
        m = rng.randint(1, 64)
        d = rng.randint(0, 6)
        sigma = rng.choice((2, 4))
        s = bytes(rng.randrange(sigma) for _ in range(m))
        t = bytes(rng.randrange(sigma) for _ in range(m))
        want = next((c + 1 for c in range(m) if edit_cost(s[c:], t[c:]) <= d), None)
        assert smallest_feasible_start(s, t, d) == want
