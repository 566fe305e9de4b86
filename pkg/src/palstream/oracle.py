"""Exact reference answers for longest palindromic substrings.

The streaming engines in this package only ever look for even-length
palindromes: a text is fed to them with every symbol doubled, which turns
each palindromic substring of length m of the original into an even
palindrome of radius m of the doubled text (and vice versa).  This module
provides the doubling helper and three exact offline computations used to
judge the engines:

* ``brute_longest``    -- O(n^2) centre expansion, the ground truth of last
                          resort for small inputs;
* ``manacher_longest`` -- O(n) longest palindromic substring;
* ``prefix_longest``   -- O(n) list of the answer after every prefix.

``prefix_longest`` runs Manacher's algorithm once and then sweeps the
transformed-radius array: writing t for the string with sentinels
(# s1 # s2 # ... #), a palindrome of length m inside the prefix s[1..j]
exists iff some t-centre i has radius >= m with i + m <= 2j.  Since the
per-prefix optimum never grows by more than one per transformed position,
a single monotone two-pointer pass recovers all prefix answers.
"""

from __future__ import annotations

__all__ = [
    "double",
    "brute_longest",
    "manacher_radii",
    "manacher_longest",
    "prefix_longest",
]

BRUTE_MAX = 10_000
PREFIX_MAX = 1 << 13


def double(s):
    """Each symbol twice: "aba" -> "aabbaa".  Works on str, bytes and lists."""
    if isinstance(s, str):
        return "".join(c + c for c in s)
    if isinstance(s, (bytes, bytearray)):
        return bytes(b for c in s for b in (c, c))
    out = []
    for c in s:
        out.append(c)
        out.append(c)
    return out


def brute_longest(s) -> int:
    """Length of the longest palindromic substring, by centre expansion."""
    n = len(s)
    if n > BRUTE_MAX:
        raise ValueError(f"brute_longest is limited to {BRUTE_MAX} symbols")
    if n == 0:
        return 0
    best = 1
    for c in range(n):
        # odd centres
        r = 0
        while c - r - 1 >= 0 and c + r + 1 < n and s[c - r - 1] == s[c + r + 1]:
            r += 1
        best = max(best, 2 * r + 1)
        # even centres (gap between c and c+1)
        r = 0
        while c - r >= 0 and c + r + 1 < n and s[c - r] == s[c + r + 1]:
            r += 1
        best = max(best, 2 * r)
    return best


def manacher_radii(s):
    """Radii over the sentinel-transformed string.

    Returns the list P of length 2n+1 where P[i] is the largest r with
    t[i-r..i+r] a palindrome, t = '#' + '#'.join(s) + '#'.  P[i] equals the
    length of the corresponding palindrome of s.
    """
    n = len(s)
    m = 2 * n + 1
    p = [0] * m
    centre = right = 0
    for i in range(1, m):
        r = min(p[2 * centre - i], right - i) if i < right else 0
        # t[k] is s[(k-1)//2] for odd k and '#' for even k
        a, b = i - r - 1, i + r + 1
        while a >= 0 and b < m:
            if a % 2 == 0:
                pass  # both sentinels, always equal
            elif s[(a - 1) // 2] != s[(b - 1) // 2]:
                break
            r += 1
            a -= 1
            b += 1
        p[i] = r
        if i + r > right:
            centre, right = i, i + r
    return p


def manacher_longest(s) -> int:
    if not len(s):
        return 0
    return max(manacher_radii(s))


def prefix_longest(s):
    """answers[j-1] = longest palindromic substring of s[1..j], for all j."""
    n = len(s)
    if n > PREFIX_MAX:
        raise ValueError(f"prefix_longest is limited to {PREFIX_MAX} symbols")
    if n == 0:
        return []
    radii = manacher_radii(s)
    # opt over t-prefixes: opt(e) = max_i min(radii[i], e - i); it is
    # nondecreasing in e and grows by at most 1 per step, so advance a
    # candidate length k with a running prefix-maximum of radii.
    answers = []
    best = 0
    prefmax = [0] * (2 * n + 2)
    run = 0
    for i in range(2 * n + 1):
        run = max(run, radii[i])
        prefmax[i + 1] = run  # max over centres <= i
    for e in range(1, 2 * n + 1):
        while best < e and prefmax[e - best] >= best + 1:
            best += 1
        if e % 2 == 0:
            answers.append(best)
    return answers
