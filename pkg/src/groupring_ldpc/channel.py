"""BPSK over AWGN, sum-product decoding and a Monte-Carlo BER/WER harness."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from . import gf2

LLR_CLAMP = 30.0


@dataclass
class ChannelConfig:
    ebn0_db: float
    rate: float
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.rate <= 1:
            raise ValueError("rate must lie in (0, 1]")

    @property
    def sigma2(self):
        return 1.0 / (2.0 * self.rate * 10.0 ** (self.ebn0_db / 10.0))


def frame_rng(seed, snr_index, frame_index):
    """Independent stream per (seed, SNR point, frame)."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, snr_index, frame_index])))


def bpsk(bits):
    return 1.0 - 2.0 * np.asarray(bits, dtype=np.float64)


def channel_llr(y, sigma2):
    return 2.0 * y / sigma2


class SPADecoder:
    """Flooding sum-product decoder on a Tanner graph, vectorized over frames.

    Check updates use tanh/atanh.  When all checks share one degree the
    product over the other edges is the check's full product divided by the
    edge's own term, with prefix/suffix products for the rare checks holding
    an exact zero; otherwise it comes from log-magnitude sums."""

    def __init__(self, H):
        S = sp.csr_matrix(gf2.as_bits(H))
        S.sort_indices()
        self.m, self.n = S.shape
        self.H = S
        deg_c = np.diff(S.indptr)
        if (deg_c == 0).any():
            keep = np.flatnonzero(deg_c)
            S = S[keep]
            deg_c = deg_c[keep]
        self.chk = np.repeat(np.arange(S.shape[0]), deg_c)
        self.var = S.indices.astype(np.int64)
        self.c_start = np.concatenate([[0], np.cumsum(deg_c)[:-1]]).astype(np.int64)
        self.by_var = np.argsort(self.var, kind="stable")
        deg_v = np.bincount(self.var, minlength=self.n)
        self.v_start = np.concatenate([[0], np.cumsum(deg_v)[:-1]]).astype(np.int64)
        self.v_has = deg_v > 0
        self.E = len(self.var)
        # uniform degrees let the edge sums run as reshapes
        self.dc = int(deg_c[0]) if len(deg_c) and (deg_c == deg_c[0]).all() else 0
        self.dv = int(deg_v[0]) if self.v_has.all() and (deg_v == deg_v[0]).all() else 0

    def _var_sum(self, msg):
        if self.dv:
            return msg[:, self.by_var].reshape(msg.shape[0], self.n, self.dv).sum(2)
        out = np.zeros((msg.shape[0], self.n))
        if self.E:
            s = np.add.reduceat(msg[:, self.by_var], self.v_start[self.v_has], axis=1)
            out[:, self.v_has] = s
        return out

    def _check_sum(self, x):
        if self.dc:
            return x.reshape(x.shape[0], -1, self.dc).sum(2)
        return np.add.reduceat(x, self.c_start, axis=1)

    def _extrinsic(self, t):
        """Product over each check of the other edges' t values."""
        if self.dc:
            T = t.reshape(t.shape[0], -1, self.dc)
            with np.errstate(divide="ignore", invalid="ignore"):
                out = T.prod(2, keepdims=True) / T
            zero = np.nonzero((T == 0).any(2))
            if len(zero[0]):
                sub = T[zero]
                pre = np.ones_like(sub)
                suf = np.ones_like(sub)
                np.cumprod(sub[:, :-1], axis=1, out=pre[:, 1:])
                np.cumprod(sub[:, :0:-1], axis=1, out=suf[:, -2::-1])
                out[zero] = pre * suf
            return out.reshape(t.shape)
        neg = t < 0
        logm = np.log(np.maximum(np.abs(t), 1e-300))
        tot_log = self._check_sum(logm)[:, self.chk]
        tot_neg = (self._check_sum(neg.astype(np.int8))[:, self.chk] - neg) & 1
        mag = np.exp(tot_log - logm)
        return np.where(tot_neg == 1, -mag, mag)

    def syndrome_ok(self, hard):
        if not self.E:
            return np.ones(hard.shape[0], dtype=bool)
        par = self._check_sum(hard[:, self.var]) & 1
        return ~par.any(1)

    def decode(self, llr, max_iters=30):
        """Return (bits, converged, iterations) for a batch (or one) LLR vector."""
        llr = np.asarray(llr, dtype=np.float64)
        single = llr.ndim == 1
        llr = np.clip(np.atleast_2d(llr), -LLR_CLAMP, LLR_CLAMP)
        F = llr.shape[0]
        bits = (llr < 0).astype(np.uint8)
        # a zero LLR is an undecided bit, never part of a converged word
        conv = self.syndrome_ok(bits) & (llr != 0).all(1)
        iters = np.zeros(F, dtype=np.int64)
        active = np.flatnonzero(~conv)
        if len(active) and max_iters > 0 and self.E:
            L = llr[active]
            v2c = L[:, self.var]
            c2v = np.zeros_like(v2c)
            for it in range(1, max_iters + 1):
                v2c *= 0.5
                ext = self._extrinsic(np.tanh(v2c, out=v2c))
                np.clip(ext, -1 + 1e-15, 1 - 1e-15, out=ext)
                c2v = np.arctanh(ext, out=ext)
                c2v *= 2.0
                np.clip(c2v, -LLR_CLAMP, LLR_CLAMP, out=c2v)
                total = L + self._var_sum(c2v)
                hard = (total < 0).astype(np.uint8)
                ok = self.syndrome_ok(hard) & (total != 0).all(1)
                idx = active
                bits[idx] = hard
                iters[idx] = it
                if ok.any():
                    conv[idx[ok]] = True
                    keep = ~ok
                    active, L, total, c2v = idx[keep], L[keep], total[keep], c2v[keep]
                    if not len(active):
                        break
                v2c = total[:, self.var] - c2v
        if single:
            return bits[0], bool(conv[0]), int(iters[0])
        return bits, conv, iters


def spa_decode(H, llr, max_iters=30):
    return SPADecoder(H).decode(llr, max_iters)


@dataclass
class SimPoint:
    ebn0_db: float
    frames: int = 0
    bit_errors: int = 0
    frame_errors: int = 0
    iterations: int = 0
    bits_per_frame: int = 0

    @property
    def ber(self):
        return self.bit_errors / (self.frames * self.bits_per_frame) if self.frames else float("nan")

    @property
    def wer(self):
        return self.frame_errors / self.frames if self.frames else float("nan")

    @property
    def avg_iters(self):
        return self.iterations / self.frames if self.frames else float("nan")


@dataclass
class SimResult:
    points: list = field(default_factory=list)
    config: dict = field(default_factory=dict)

    COLUMNS = ("ebn0_db", "frames", "bit_errors", "frame_errors", "ber", "wer", "avg_iters")

    def rows(self):
        return [(p.ebn0_db, p.frames, p.bit_errors, p.frame_errors, p.ber, p.wer, p.avg_iters)
                for p in self.points]

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.COLUMNS)
        for r in self.rows():
            w.writerow([f"{v:.6g}" if isinstance(v, float) else v for v in r])
        return buf.getvalue()


class SimCode:
    """What the harness needs from a code: H, a generator and its information set."""

    def __init__(self, H, G=None):
        self.H = gf2.as_bits(H)
        if G is None:
            G = gf2.nullspace(self.H)
        self.G = gf2.as_bits(G)
        R, piv = gf2.rref(self.G)
        if len(piv) != self.G.shape[0]:
            raise ValueError("generator rows are dependent")
        self.info = np.array(piv, dtype=np.int64)
        self.decoder = SPADecoder(self.H)

    @property
    def n(self):
        return self.H.shape[1]

    @property
    def k(self):
        return self.G.shape[0]

    @property
    def rate(self):
        return self.k / self.n


def _frames(code, cfg, snr_index, start, count, uncoded_bits):
    """Transmitted bits and channel LLRs for frames start..start+count-1."""
    n = uncoded_bits if code is None else code.n
    k = uncoded_bits if code is None else code.k
    msgs = np.empty((count, k), dtype=np.uint8)
    noise = np.empty((count, n))
    for i in range(count):
        r = frame_rng(cfg.seed, snr_index, start + i)
        msgs[i] = r.integers(0, 2, k, dtype=np.uint8)
        noise[i] = r.standard_normal(n)
    words = msgs if code is None else gf2.matmul(msgs, code.G)
    y = bpsk(words) + np.sqrt(cfg.sigma2) * noise
    return words, channel_llr(y, cfg.sigma2)


def simulate(code, snr_list, min_frame_errors=100, max_frames=10 ** 6, iters=30, seed=0,
             batch=256, uncoded_bits=1000, progress=None):
    """BER/WER per Eb/N0 point.  code=None simulates uncoded BPSK (rate 1,
    `uncoded_bits` per frame).  A point stops at the first batch boundary
    where min_frame_errors or max_frames is reached."""
    res = SimResult(config=dict(min_frame_errors=min_frame_errors, max_frames=max_frames,
                                iters=iters, seed=seed, batch=batch))
    rate = 1.0 if code is None else code.rate
    for si, snr in enumerate(snr_list):
        cfg = ChannelConfig(float(snr), rate, seed)
        pt = SimPoint(float(snr), bits_per_frame=uncoded_bits if code is None else code.k)
        while pt.frames < max_frames and pt.frame_errors < min_frame_errors:
            cnt = int(min(batch, max_frames - pt.frames))
            words, llr = _frames(code, cfg, si, pt.frames, cnt, uncoded_bits)
            if code is None:
                err = (llr < 0).astype(np.uint8) ^ words
                its = np.zeros(cnt, dtype=np.int64)
            else:
                dec, _, its = code.decoder.decode(llr, iters)
                err = (dec ^ words)[:, code.info]
            e = err.sum(1)
            pt.frames += cnt
            pt.bit_errors += int(e.sum())
            pt.frame_errors += int((e > 0).sum()) if code is None else int(((dec ^ words).any(1)).sum())
            pt.iterations += int(its.sum())
            if progress:
                progress(pt)
        res.points.append(pt)
    return res


def q_function(x):
    from scipy.special import erfc
    return 0.5 * erfc(np.asarray(x) / np.sqrt(2.0))


def uncoded_ber(ebn0_db):
    return q_function(np.sqrt(2.0 * 10.0 ** (np.asarray(ebn0_db) / 10.0)))
