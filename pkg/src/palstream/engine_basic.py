"""Reference streaming engine: try every stored mirror position each step.

After reading h symbols, a centre c (1 <= c <= h) would close an even
palindrome of radius h-c+1 exactly when T[y+1..h] is a palindrome for the
mirror position y = 2c-h-2.  This engine walks every landmark y of matching
parity, tests the suffix fingerprint, and keeps the best verified radius.
Memory is whatever the landmark scheme keeps; time is linear in the number
of stored landmarks per symbol.

Input texts are expected to be fed with every symbol doubled (see
``feed_doubled``): even palindromes of the doubled text correspond exactly
to palindromes of arbitrary parity in the original, so one even-only engine
answers the general question.
"""

from __future__ import annotations

from .fingerprint import MERSENNE61, params_new
from .landmarks import LandmarkStore, LevelSpec
from .schemes import SchemeConfig, stream_config

__all__ = ["BasicEngine", "feed_doubled", "symbol_codes"]


class BasicEngine:
    def __init__(self, cfg: SchemeConfig, seed: int = 0):
        self.cfg = stream_config(cfg)  # windows sized for the doubled stream
        self.params = params_new(max(2 * cfg.n, 4), seed)
        # this engine never runs ghost period queries, so keep no ghost slack
        levels = [LevelSpec(s.lam, s.b, ghost_mult=1) for s in self.cfg.levels]
        self.store = LandmarkStore(self.params, levels)
        self.best = 0
        self.checks = 0

    @property
    def h(self) -> int:
        return self.store.h

    def push(self, a: int) -> int:
        """Consume one symbol; return the best verified radius so far."""
        store = self.store
        store.advance(a)
        h = store.h
        p = MERSENNE61
        F = store.fwd
        R = store.rev
        PW = store.pw
        best = self.best
        checks = 0
        # The suffix T[y+1..h] is a palindrome iff its forward and reverse
        # fingerprints agree; with prefix entries (f, r, pw, ipw) that folds
        # into the single test  F - f_y == R*pw_y - r_y*PW  (mod p).
        parity = h & 1
        if store.uniform:
            top = store.top
            if parity:
                # odd mirrors live exclusively on level 0
                arr = store.arrays[0]
                cap = store.caps[0]
                b = store.bs[0]
                lo = 1 if b is None else max(1, h - b + 1)
                lo |= 1
                for y in range(lo, h - 1, 2):
                    if h - y <= 2 * best:
                        break
                    e = arr[y - 1] if cap is None else arr[y % cap]
                    checks += 1
                    if (F - e[0] - R * e[2] + e[1] * PW) % p == 0:
                        best = (h - y) >> 1
            else:
                if h > 2 * best and (F - R) % p == 0:
                    best = h >> 1  # mirror position 0
                lo_lam = 0 if top == 0 else 1
                for lam in range(top, lo_lam - 1, -1):
                    arr = store.arrays[lam]
                    cap = store.caps[lam]
                    b = store.bs[lam]
                    jh = h >> lam
                    lo = 1 if b is None else max(1, jh - b + 1)
                    if lam == top:
                        step = 1
                        if lam == 0:
                            # even mirrors only
                            step = 2
                            lo += lo & 1
                    else:
                        step = 2
                        lo |= 1  # odd j only: even j belongs to level lam+1
                    for j in range(lo, jh + 1, step):
                        y = j << lam
                        if h - y <= 2 * best:
                            break
                        e = arr[j - 1] if cap is None else arr[j % cap]
                        checks += 1
                        if (F - e[0] - R * e[2] + e[1] * PW) % p == 0:
                            best = (h - y) >> 1
        else:
            for y in store.iter_positions(parity):
                if h - y <= 2 * best or y == h:
                    continue
                e = store._raw_lookup(y, False)
                if e is None:
                    continue
                checks += 1
                if (F - e[0] - R * e[2] + e[1] * PW) % p == 0:
                    best = (h - y) >> 1
        self.checks += checks
        self.best = best
        return best

    def words_current(self) -> int:
        return self.store.words_current() + 4

    def note_peak(self) -> None:
        self.store.note_peak()

    def peak_words(self) -> int:
        return self.store.peak_words() + 4


def symbol_codes(data: bytes | str) -> list[int]:
    """Map input symbols to the positive integer alphabet the engines use."""
    if isinstance(data, bytes):
        return [b + 1 for b in data]
    return [ord(c) + 1 for c in data]


def feed_doubled(engine, data: bytes | str | list[int]) -> list[int]:
    """Feed each symbol twice; answers[i] bounds the longest palindrome of
    data[:i+1] from below (and meets the scheme's guarantee from above)."""
    codes = data if isinstance(data, list) else symbol_codes(data)
    answers: list[int] = []
    push = engine.push
    for a in codes:
        push(a)
        answers.append(push(a))
    return answers
