import math
import random
from concurrent.futures import ThreadPoolExecutor

import pytest

from nearalign.approx import (
    AdditiveApprox,
    MultiplicativeApprox,
    add_new,
    add_step,
    alpha_for,
    approx_result,
    first_level,
    mult_new,
    mult_step,
)
from nearalign.core import InvalidEpsilon, InvalidWindow
from nearalign.oracle import edit_cost, oracle_lmax

S1 = b"1234yyyyyy123456789xxxxx"
T1 = b"1234xxxxxx123467890yyyyy"


def test_level_constants():
    assert first_level(alpha_for(0.21)) == 27
    assert abs(alpha_for(0.21) - 0.1) < 1e-12
    assert first_level(alpha_for(3)) == 2
    m = MultiplicativeApprox(2, 0.21)
    assert m._spacing(27) == 1


def test_invalid_parameters():
    for eps in (0, -1, float("nan")):
        with pytest.raises(InvalidEpsilon):
            MultiplicativeApprox(1, eps)
    for e in (0, -3):
        with pytest.raises(InvalidWindow):
            AdditiveApprox(1, e)


def test_functional_api():
    st = mult_new(2, 0.21)
    for a, b in zip(S1, T1):
        st = mult_step(st, a, b)
    res = approx_result(st)
    assert 8 <= res.length <= 9
    assert edit_cost(S1[res.start - 1 : res.end], T1[res.start - 1 : res.end]) <= 2
    st = add_new(2, 5)
    for a, b in zip(S1, T1):
        st = add_step(st, a, b)
    assert approx_result(st).length >= 9 - 5


def test_additive_example_value():
    # checkpoint 10 covers S[10,15]="y12345" vs T[10,15]="x12346" (ed 2)
    res = AdditiveApprox(2, 5).feed(S1, T1).result()
    assert (res.start, res.end, res.length) == (10, 15, 6)
    assert edit_cost(S1[9:15], T1[9:15]) == 2


def test_equal_streams_cover_everything():
    s = bytes(random.Random(0).randrange(4) for _ in range(300))
    for eps in (0.1, 1.0, 3.0, 10.0):
        res = MultiplicativeApprox(0, eps).feed(s, s).result()
        assert (res.start, res.length) == (1, 300)
    assert AdditiveApprox(0, 1).feed(s, s).result().length == 300


def test_absent_result():
    assert MultiplicativeApprox(0, 0.5).feed(b"aaa", b"bbb").result() is None
    assert AdditiveApprox(0, 2).result() is None


def test_guarantees_random():
    rng = random.Random(21)
    for _ in range(120):
        n = rng.randint(1, 200)
        d = rng.randint(0, 5)
        sigma = rng.choice((2, 4))
        s = bytes(rng.randrange(sigma) for _ in range(n))
        t = bytes(rng.randrange(sigma) for _ in range(n))
        found = oracle_lmax(s, t, d)
        best = found[0] if found else 0
        for eps in (0.1, 1.0):
            res = MultiplicativeApprox(d, eps).feed(s, t).result()
            got = res.length if res else 0
            assert best <= (1 + eps) * got + 1e-9 and got <= best
            if res:
                assert edit_cost(s[res.start - 1 : res.end], t[res.start - 1 : res.end]) <= d
        for e in (3, 10):
            res = AdditiveApprox(d, e).feed(s, t).result()
            got = res.length if res else 0
            assert best - e <= got <= best


def test_additive_positions_are_multiples():
    a = AdditiveApprox(1, 7).feed(bytes(50), bytes(50))
    assert [c.pos for c in a.checkpoints()] == list(range(7, 50, 7))


def test_level_structure_short_stream():
    eps = 0.5
    m = MultiplicativeApprox(1, eps)
    rng = random.Random(2)
    for _ in range(3000):
        m.step(rng.randrange(2), rng.randrange(2))
        x = m.x
        for lv in m.levels:
            assert lv.spacing == math.floor(m.alpha * (1 + m.alpha) ** (lv.k - 2))
            ps = list(lv.positions)
            assert all(p % lv.spacing == 0 and p >= x - lv.retention for p in ps)
            assert all(b - a == lv.spacing for a, b in zip(ps, ps[1:]))


def test_threads_do_not_change_result():
    rng = random.Random(5)
    s = bytes(rng.randrange(2) for _ in range(400))
    t = bytes(rng.randrange(2) for _ in range(400))
    with ThreadPoolExecutor(4) as pool:
        a = MultiplicativeApprox(3, 0.3, executor=pool).feed(s, t).result()
        b = AdditiveApprox(3, 4, executor=pool).feed(s, t).result()
    assert a == MultiplicativeApprox(3, 0.3).feed(s, t).result()
    assert b == AdditiveApprox(3, 4).feed(s, t).result()
