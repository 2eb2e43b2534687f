import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from groupring_ldpc import channel as ch
from groupring_ldpc import construction as C
from groupring_ldpc import gf2
from groupring_ldpc.groups import cyclic

from paper_data import Z2_4_W_ROW0


@pytest.fixture(scope="module")
def small_code():
    W = C.construct_from_s2(Z2_4_W_ROW0, cyclic(6), (2, 2, 2, 2))
    return ch.SimCode(C.lift(C.subarray(W, 3)).H)


@pytest.fixture(scope="module")
def small():
    return ch.SimCode(C.lift(C.subarray(C.construct_theorem2(cyclic(5)), 3, 5)).H)


def test_noise_variance():
    cfg = ch.ChannelConfig(3.0, 0.5)
    assert cfg.sigma2 == pytest.approx(1 / (2 * 0.5 * 10 ** 0.3))
    with pytest.raises(ValueError):
        ch.ChannelConfig(1.0, 1.5)


def test_bpsk_and_llr_sign():
    y = ch.bpsk([0, 1])
    assert y.tolist() == [1.0, -1.0]
    assert (ch.channel_llr(y, 0.5) == [4.0, -4.0]).all()


def test_noiseless_codeword(small_code):
    rng = np.random.default_rng(0)
    c = gf2.matmul(rng.integers(0, 2, small_code.k, dtype=np.uint8), small_code.G)
    bits, conv, iters = ch.spa_decode(small_code.H, 50.0 * ch.bpsk(c))
    assert conv and iters <= 1 and (bits == c).all()


def test_zero_llr_does_not_converge(small_code):
    bits, conv, iters = small_code.decoder.decode(np.zeros(small_code.n), 12)
    assert not conv and iters == 12


def test_distance_at_least_three(small_code):
    # oracle for the single-flip test: no zero column and no repeated column,
    # so every weight 1 or 2 pattern has a nonzero syndrome and the sent word
    # is the unique nearest codeword to any single flip
    H = small_code.H
    assert H.any(0).all()
    cols = {H[:, j].tobytes() for j in range(H.shape[1])}
    assert len(cols) == H.shape[1]


def test_single_flip_corrected(small_code):
    rng = np.random.default_rng(1)
    for pos in rng.choice(small_code.n, 10, replace=False):
        c = gf2.matmul(rng.integers(0, 2, small_code.k, dtype=np.uint8), small_code.G)
        llr = 8.0 * ch.bpsk(c)
        llr[pos] = -llr[pos]
        bits, conv, _ = small_code.decoder.decode(llr)
        assert conv and (bits == c).all()


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2 ** 31), st.floats(0.5, 3.0))
def test_converged_output_satisfies_checks(seed, scale):
    W = C.construct_theorem2(cyclic(4))
    H = C.lift(C.subarray(W, 2, 4)).H
    llr = np.random.default_rng(seed).normal(scale, 2.0, (8, H.shape[1]))
    bits, conv, _ = ch.SPADecoder(H).decode(llr, 20)
    assert not gf2.matmul(bits[conv], H.T).any()


def test_regular_and_general_updates_agree(small):
    dec = small.decoder
    assert dec.dc and dec.dv
    gen = ch.SPADecoder(small.H)
    gen.dc = gen.dv = 0
    llr = np.random.default_rng(3).normal(1.0, 1.5, (32, small.n))
    a = dec.decode(llr, 15)
    b = gen.decode(llr, 15)
    assert (a[0] == b[0]).all() and (a[1] == b[1]).all() and (a[2] == b[2]).all()


def test_irregular_code_decodes():
    H = np.array([[1, 1, 0, 1, 0, 0], [0, 1, 1, 0, 1, 0], [1, 0, 0, 0, 1, 1], [0, 0, 1, 0, 0, 1], [0, 0, 0, 0, 0, 0]], np.uint8)
    dec = ch.SPADecoder(H)
    assert dec.dc == 0
    llr = np.array([5.0, -0.5, 5.0, 5.0, 5.0, 5.0])
    bits, conv, _ = dec.decode(llr)
    assert conv and not bits.any()


def test_simulation_is_deterministic(small):
    a = ch.simulate(small, [1.0, 2.0], min_frame_errors=5, max_frames=64, seed=9, batch=16)
    b = ch.simulate(small, [1.0, 2.0], min_frame_errors=5, max_frames=64, seed=9, batch=16)
    assert a.to_csv() == b.to_csv()
    c = ch.simulate(small, [1.0, 2.0], min_frame_errors=5, max_frames=64, seed=10, batch=16)
    assert c.to_csv() != a.to_csv()
    # batch size does not change the frames drawn
    d = ch.simulate(small, [1.0, 2.0], min_frame_errors=10 ** 9, max_frames=64, seed=9, batch=16)
    e = ch.simulate(small, [1.0, 2.0], min_frame_errors=10 ** 9, max_frames=64, seed=9, batch=64)
    assert d.to_csv() == e.to_csv()


def test_csv_columns(small):
    r = ch.simulate(small, [2.0], min_frame_errors=1, max_frames=32, batch=16)
    head, row = r.to_csv().splitlines()
    assert head.split(",") == ["ebn0_db", "frames", "bit_errors", "frame_errors", "ber", "wer", "avg_iters"]
    p = r.points[0]
    assert p.ber == p.bit_errors / (p.frames * small.k)


def test_uncoded_matches_q_function():
    r = ch.simulate(None, [4.0], min_frame_errors=10 ** 9, max_frames=200, uncoded_bits=1000, seed=1)
    p = r.points[0]
    ref = float(ch.uncoded_ber(4.0))
    se = np.sqrt(ref * (1 - ref) / (p.frames * 1000))
    assert abs(p.ber - ref) < 3 * se


def test_sim_code_rejects_dependent_generator(small):
    G = np.concatenate([small.G[:1], small.G[:1]])
    with pytest.raises(ValueError):
        ch.SimCode(small.H, G)
