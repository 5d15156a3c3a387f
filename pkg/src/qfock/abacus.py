"""Semi-infinite wedge monomials and their abacus bijection.

A monomial u_{k_1} ^ u_{k_2} ^ ... with k_1 > k_2 > ... and k_i = s - i + 1
for large i is stored as its canonical prefix (the indices that differ from
the eventual arithmetic tail) plus the total charge s.

Each index factors uniquely as  k = a + e(l - b) - e*l*m  with a in [1, e],
b in [1, l], m in Z.  Runner b of the l-abacus carries the values a - e*m of
its beads; reading off each runner gives the component partitions and the
component charges (s_1, ..., s_l) with sum s.
"""

from __future__ import annotations

from typing import NamedTuple

from .partitions import partitions


class BeadTriple(NamedTuple):
    a: int
    b: int
    m: int


class WedgeMonomial(NamedTuple):
    """Canonical semi-infinite monomial: strictly decreasing prefix, total
    charge s, implicit tail k_i = s - i + 1 past the prefix."""

    prefix: tuple
    s: int

    def to_text(self):
        return "s=%d; k=%s" % (self.s, ",".join(str(k) for k in self.prefix))

    def to_json(self):
        return {"s": self.s, "prefix": list(self.prefix)}


def wedge_monomial(prefix, s: int) -> WedgeMonomial:
    """Canonicalize: the prefix must be strictly decreasing and stay above
    the tail; trailing entries that already equal s - i + 1 are trimmed."""
    prefix = tuple(prefix)
    for i in range(len(prefix) - 1):
        if prefix[i] <= prefix[i + 1]:
            raise ValueError("prefix not strictly decreasing: %r" % (prefix,))
    r = len(prefix)
    if r and prefix[-1] <= s - r:
        raise ValueError("prefix %r dips into the charge-%d tail" % (prefix, s))
    while r and prefix[r - 1] == s - r + 1:
        r -= 1
    return WedgeMonomial(prefix[:r], s)


def monomial_from_text(text: str) -> WedgeMonomial:
    spart, kpart = (chunk.strip() for chunk in text.split(";"))
    s = int(spart.split("=")[1])
    body = kpart.split("=")[1].strip()
    prefix = tuple(int(k) for k in body.split(",")) if body else ()
    return wedge_monomial(prefix, s)


def degree(u: WedgeMonomial) -> int:
    """Total displacement above the charge-s vacuum, i.e. the finite sum of
    k_i - (s - i + 1) over the prefix; 0 iff u is the vacuum."""
    return sum(k - u.s + i - 1 for i, k in enumerate(u.prefix, start=1))


def factorize(k: int, e: int, l: int) -> BeadTriple:
    """The unique (a, b, m) with k = a + e(l - b) - e*l*m."""
    a = (k - 1) % e + 1
    t = (k - a) // e
    b = l - t % l
    m = (a + e * (l - b) - k) // (e * l)
    return BeadTriple(a, b, m)


def runner_value(k: int, e: int, l: int) -> tuple:
    """(b, v) where v = a - e*m is the position of bead k on its runner."""
    a, b, m = factorize(k, e, l)
    return b, a - e * m


def bead_index(v: int, b: int, e: int, l: int) -> int:
    """Inverse of runner_value: the global index of the bead at position v
    on runner b."""
    a = (v - 1) % e + 1
    m = (a - v) // e
    return a + e * (l - b) - e * l * m


def _runner_tail_top(cutoff: int, b: int, e: int, l: int) -> int:
    """Largest runner-b position v with global index <= cutoff."""
    best = None
    for a in range(1, e + 1):
        # smallest m with a + e(l-b) - elm <= cutoff
        num = a + e * (l - b) - cutoff
        m = -((-num) // (e * l))  # ceil(num / el)
        v = a - e * m
        if best is None or v > best:
            best = v
    return best


def to_pair(u: WedgeMonomial, e: int, l: int) -> tuple:
    """The (multipartition, charge) labeled by u; inverse of from_pair."""
    r = len(u.prefix)
    cutoff = u.s - r  # tail occupies every integer <= cutoff
    per_runner = [[] for _ in range(l)]
    for k in u.prefix:
        b, v = runner_value(k, e, l)
        per_runner[b - 1].append(v)
    comps = []
    charges = []
    for b in range(1, l + 1):
        head = sorted(per_runner[b - 1], reverse=True)
        top = _runner_tail_top(cutoff, b, e, l)
        t = len(head)
        s_b = top + t
        comp = []
        for i, v in enumerate(head, start=1):
            part = v - s_b + i - 1
            if part < 0 or (comp and comp[-1] < part):
                raise ValueError("malformed monomial %r" % (u,))
            comp.append(part)
        while comp and comp[-1] == 0:
            comp.pop()
        comps.append(tuple(comp))
        charges.append(s_b)
    if sum(charges) != u.s:
        raise AssertionError("charge bookkeeping broke on %r" % (u,))
    return tuple(comps), tuple(charges)


def from_pair(mp, charge, e: int, l: int) -> WedgeMonomial:
    """The canonical monomial labeled by (mp, charge)."""
    if len(mp) != l or len(charge) != l:
        raise ValueError("need %d components and %d charges" % (l, l))
    s = sum(charge)
    depth = max((len(comp) for comp in mp), default=0) + 4
    for _ in range(64):
        beads = []  # (k, b)
        deepest = []
        for b in range(1, l + 1):
            comp = mp[b - 1]
            s_b = charge[b - 1]
            ks = []
            for i in range(1, depth + 1):
                part = comp[i - 1] if i <= len(comp) else 0
                ks.append(bead_index(part + s_b - i + 1, b, e, l))
            beads.extend(ks)
            deepest.append(ks[-1])
        k0 = max(deepest)  # merged list is complete down to k0
        head = sorted((k for k in beads if k >= k0), reverse=True)
        m = len(head)
        # the head must reach the arithmetic tail; otherwise deepen and retry
        if m and head[-1] == s - m + 1:
            r = m
            while r and head[r - 1] == s - r + 1:
                r -= 1
            if r < m:
                return WedgeMonomial(tuple(head[:r]), s)
        depth *= 2
    raise AssertionError("from_pair failed to stabilize for %r, %r" % (mp, charge))


def enumerate_degree_component(s: int, n: int) -> list:
    """All monomials of total charge s and degree n: offsets k_i - (s-i+1)
    run over the partitions of n, so the component has p(n) elements."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    out = []
    for gamma in partitions(n):
        prefix = tuple(s - i + 1 + gamma[i - 1] for i in range(1, len(gamma) + 1))
        out.append(WedgeMonomial(prefix, s))
    return out


def render_abacus(u: WedgeMonomial, e: int, l: int, margin: int = 2) -> str:
    """ASCII l-runner diagram: one row per runner, positions increasing to
    the right, '*' for a bead, '-' for a hole.  Debug/demo aid only."""
    r = len(u.prefix)
    cutoff = u.s - r
    occupied = {}
    for k in u.prefix:
        b, v = runner_value(k, e, l)
        occupied.setdefault(b, set()).add(v)
    tops = {b: _runner_tail_top(cutoff, b, e, l) for b in range(1, l + 1)}
    vmax = max([tops[b] for b in tops] + [v for vs in occupied.values() for v in vs]) + margin
    vmin = min(tops.values()) - margin
    lines = []
    for b in range(1, l + 1):
        cells = []
        for v in range(vmin, vmax + 1):
            filled = v <= tops[b] or v in occupied.get(b, ())
            cells.append("*" if filled else "-")
        lines.append("runner %d: %s" % (b, " ".join(cells)))
    lines.append("position: %s" % " ".join(str(v % 10) for v in range(vmin, vmax + 1)))
    return "\n".join(lines)
