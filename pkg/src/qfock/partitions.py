"""Partitions, l-partitions, nodes, residues, and the semisimplicity test.

Conventions, following the usual multipartition combinatorics:
  * a partition is a tuple of weakly decreasing positive ints;
  * an l-partition (multipartition) is an l-tuple of partitions;
  * a node is (a, b, c) = (row, column, component), all 1-based;
  * the content of (a, b, c) under a charge (s_1, ..., s_l) is b - a + s_c,
    and its residue is the content mod e.

Multipartitions and charges are plain tuples throughout: they are dict keys
in the Fock-space vectors, so hashability and cheap equality matter more
than a class wrapper.
"""

from __future__ import annotations

from functools import lru_cache


# -- validation helpers ------------------------------------------------------

def is_partition(parts) -> bool:
    return all(isinstance(p, int) and p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_multipartition(mp, l=None):
    if l is not None and len(mp) != l:
        raise ValueError("expected %d components, got %d" % (l, len(mp)))
    for comp in mp:
        if not is_partition(comp):
            raise ValueError("component %r is not a partition" % (comp,))


def rank(mp) -> int:
    return sum(sum(comp) for comp in mp)


def empty_multipartition(l) -> tuple:
    return ((),) * l


# -- nodes, contents, residues -----------------------------------------------

def content(node, charge) -> int:
    a, b, c = node
    return b - a + charge[c - 1]


def residue(node, charge, e: int) -> int:
    """(b - a + s_c) mod e, normalized to [0, e)."""
    a, b, c = node
    return (b - a + charge[c - 1]) % e


def above(gamma, gamma2, charge) -> bool:
    """The strict node order: smaller content is higher, ties go to the
    larger component index."""
    c1 = content(gamma, charge)
    c2 = content(gamma2, charge)
    return c1 < c2 or (c1 == c2 and gamma2[2] < gamma[2])


def node_sort_key(node, charge):
    """Sorting by this key lists nodes from most 'above' to least."""
    return (content(node, charge), -node[2])


def _addable(mp):
    """All addable nodes of a multipartition."""
    out = []
    for c, comp in enumerate(mp, start=1):
        for a in range(1, len(comp) + 1):
            # row a can grow iff it stays weakly below row a-1
            if a == 1 or comp[a - 1] < comp[a - 2]:
                out.append((a, comp[a - 1] + 1, c))
        out.append((len(comp) + 1, 1, c))
    return out


def _removable(mp):
    """All removable nodes of a multipartition."""
    out = []
    for c, comp in enumerate(mp, start=1):
        for a in range(1, len(comp) + 1):
            if a == len(comp) or comp[a] < comp[a - 1]:
                out.append((a, comp[a - 1], c))
    return out


def addable_nodes(mp, i, charge, e):
    """Addable i-nodes, most 'above' first."""
    nodes = [g for g in _addable(mp) if residue(g, charge, e) == i]
    nodes.sort(key=lambda g: node_sort_key(g, charge))
    return nodes


def removable_nodes(mp, i, charge, e):
    """Removable i-nodes, most 'above' first."""
    nodes = [g for g in _removable(mp) if residue(g, charge, e) == i]
    nodes.sort(key=lambda g: node_sort_key(g, charge))
    return nodes


def add_node(mp, node):
    """The multipartition with one box added at `node` (must be addable)."""
    a, b, c = node
    comp = list(mp[c - 1])
    if a == len(comp) + 1:
        if b != 1:
            raise ValueError("node %r is not addable to %r" % (node, mp))
        comp.append(1)
    else:
        if comp[a - 1] + 1 != b or (a > 1 and comp[a - 2] < b):
            raise ValueError("node %r is not addable to %r" % (node, mp))
        comp[a - 1] += 1
    return mp[: c - 1] + (tuple(comp),) + mp[c:]


def remove_node(mp, node):
    """The multipartition with the box at `node` removed (must be removable)."""
    a, b, c = node
    comp = list(mp[c - 1])
    if a > len(comp) or comp[a - 1] != b or (a < len(comp) and comp[a] >= b):
        raise ValueError("node %r is not removable from %r" % (node, mp))
    comp[a - 1] -= 1
    if comp[a - 1] == 0:
        comp.pop()
    return mp[: c - 1] + (tuple(comp),) + mp[c:]


# -- enumeration ---------------------------------------------------------------

@lru_cache(maxsize=None)
def partitions(n: int) -> tuple:
    """All partitions of n, descending lex ((n) first, (1,..,1) last)."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def multipartitions(l: int, n: int) -> list:
    """All l-partitions of rank n, sorted lexicographically as nested tuples.

    The order is fixed only so every rendering of a result set is
    byte-reproducible; nothing downstream depends on which order it is.
    """
    if l < 1 or n < 0:
        raise ValueError("need l >= 1 and n >= 0")
    out = []

    def rec(comp_index, remaining, prefix):
        if comp_index == l - 1:
            for p in partitions(remaining):
                out.append(tuple(prefix) + (p,))
            return
        for k in range(remaining + 1):
            for p in partitions(k):
                prefix.append(p)
                rec(comp_index + 1, remaining - k, prefix)
                prefix.pop()

    rec(0, n, [])
    out.sort()
    return out


# -- semisimplicity (Ariki's criterion at v = eta_e, x_j = eta_e^{s_j}) -------

def is_split_semisimple(e: int, charge, n: int) -> bool:
    """True iff the specialized Ariki-Koike algebra on n strands is split
    semisimple: e > n, and no pair of charge entries satisfies
    d + s_i = s_j mod e for any |d| < n."""
    if n == 0:
        return True
    if e <= n:
        return False
    l = len(charge)
    for i in range(l):
        for j in range(l):
            if i == j:
                continue
            for d in range(-(n - 1), n):
                if (d + charge[i] - charge[j]) % e == 0:
                    return False
    return True


# -- compositions (for the a-value preorder machinery) -------------------------

def is_composition(comp) -> bool:
    return all(isinstance(p, int) and p > 0 for p in comp)


def composition_rank(mc) -> int:
    return sum(sum(comp) for comp in mc)


def add_nodes_to_part(mc, component: int, row: int, r: int, max_row: int | None = None):
    """Grow one part of an l-composition by r boxes.

    `component` and `row` are 1-based.  Rows past the end of a component are
    rows of length 0 and may be addressed up to max_row (the symbol height)
    when given, or freely otherwise; the zeros in between stay in place,
    since the symbol machinery reads positions, not just parts.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if not 1 <= component <= len(mc):
        raise IndexError("component %d out of range" % component)
    if row < 1 or (max_row is not None and row > max_row):
        raise IndexError("row %d out of range" % row)
    if r == 0:
        return mc
    comp = list(mc[component - 1])
    comp.extend([0] * (row - len(comp)))
    comp[row - 1] += r
    return mc[: component - 1] + (tuple(comp),) + mc[component:]


# -- text formats ----------------------------------------------------------------

def mp_to_text(mp) -> str:
    """`6,1|2,2|4,1` with `-` for an empty component."""
    return "|".join(",".join(str(p) for p in comp) if comp else "-" for comp in mp)


def mp_from_text(text: str) -> tuple:
    comps = []
    for chunk in text.split("|"):
        chunk = chunk.strip()
        if chunk in ("-", ""):
            comps.append(())
        else:
            comps.append(tuple(int(p) for p in chunk.split(",")))
    return tuple(comps)


def charge_to_text(charge) -> str:
    return ",".join(str(s) for s in charge)


def charge_from_text(text: str) -> tuple:
    return tuple(int(s) for s in text.split(","))
