"""Crystal combinatorics: normal and good nodes, the Fock crystal graph,
Uglov multipartitions, the FLOTW membership test, and Kleshchev charges.

A removable i-node is normal when it survives the signature reduction: list
every addable and removable i-node from most 'above' to least, then let each
addable node cancel the nearest surviving removable node above it.  The
highest surviving removable node is the good i-node.  (The prose definition
leaves the inclusivity of "between" open; this cancellation convention is
the one pinned by the rank-4 Uglov sets, the FLOTW equivalence and the
per-color degree bounds of the crystal, see the test suite.)
"""

from __future__ import annotations

from .partitions import (
    add_node,
    addable_nodes,
    empty_multipartition,
    mp_to_text,
    multipartitions,
    node_sort_key,
    removable_nodes,
    residue,
)


def _surviving_removables(mp, i, charge, e):
    """Removable i-nodes left after the addable/removable cancellation,
    most 'above' first."""
    tagged = [(g, "R") for g in removable_nodes(mp, i, charge, e)]
    tagged += [(g, "A") for g in addable_nodes(mp, i, charge, e)]
    tagged.sort(key=lambda t: node_sort_key(t[0], charge))
    stack = []
    for g, kind in tagged:
        if kind == "R":
            stack.append(g)
        elif stack:
            stack.pop()  # addable cancels nearest surviving removable above
    return stack


def is_normal(mp, gamma, i, charge, e) -> bool:
    """Whether the removable i-node gamma of mp survives the reduction."""
    if residue(gamma, charge, e) != i or gamma not in removable_nodes(mp, i, charge, e):
        raise ValueError("%r is not a removable %d-node of %r" % (gamma, i, mp))
    return gamma in _surviving_removables(mp, i, charge, e)


def good_node(mp, i, charge, e):
    """The highest normal i-node, or None."""
    survivors = _surviving_removables(mp, i, charge, e)
    return survivors[0] if survivors else None


def good_addable_nodes(mp, charge, e):
    """The nodes gamma such that mp -> mp+gamma is a crystal edge, one per
    color at most, as (i, gamma) pairs."""
    out = []
    for i in range(e):
        for gamma in addable_nodes(mp, i, charge, e):
            if good_node(add_node(mp, gamma), i, charge, e) == gamma:
                out.append((i, gamma))
    return out


def uglov_layers(e: int, l: int, charge, n: int) -> list:
    """Layers 0..n of the crystal component of the empty multipartition."""
    if n < 0:
        raise ValueError("rank must be >= 0")
    layer = {empty_multipartition(l)}
    layers = [set(layer)]
    for _ in range(n):
        nxt = set()
        for mp in layer:
            for _i, gamma in good_addable_nodes(mp, charge, e):
                nxt.add(add_node(mp, gamma))
        layers.append(nxt)
        layer = nxt
    return layers


def uglov_set(e: int, l: int, charge, n: int) -> set:
    """The rank-n Uglov multipartitions for this charge."""
    return uglov_layers(e, l, charge, n)[n]


def flotw_predicate(mp, e: int, charge) -> bool:
    """Membership test for the crystal component when the charge is
    ascending within [0, e): the cyclic row-dominance conditions plus the
    requirement that the right-end residues of the length-k rows never
    exhaust all of {0..e-1}."""
    l = len(charge)
    if not all(0 <= charge[j] <= charge[j + 1] for j in range(l - 1)) or charge[-1] >= e:
        raise ValueError("flotw_predicate needs 0 <= s_1 <= ... <= s_l < e")

    def part(comp, idx):  # 1-based, zero past the end
        return comp[idx - 1] if 1 <= idx <= len(comp) else 0

    bound = max((len(comp) for comp in mp), default=0) + e + 1
    for j in range(l - 1):
        for i in range(1, bound):
            if part(mp[j], i) < part(mp[j + 1], i + charge[j + 1] - charge[j]):
                return False
    for i in range(1, bound):
        if part(mp[l - 1], i) < part(mp[0], i + e + charge[0] - charge[l - 1]):
            return False
    lengths = {p for comp in mp for p in comp}
    for k in lengths:
        ends = set()
        for c, comp in enumerate(mp, start=1):
            for a, p in enumerate(comp, start=1):
                if p == k:
                    ends.add((k - a + charge[c - 1]) % e)
        if len(ends) == e:
            return False
    return True


def kleshchev_charge(residues, e: int, l: int, n: int) -> tuple:
    """A widely spread descending charge with the given residues mod e:
    s_j = v_j + (l - j) * 2*n*e.  Gaps of 2ne make the rank <= n crystal
    independent of the spread (the stability tests double the gap)."""
    if len(residues) != l or any(not 0 <= v < e for v in residues):
        raise ValueError("need l residues in [0, e)")
    return tuple(residues[j] + (l - 1 - j) * 2 * n * e for j in range(l))


def crystal_graph(e: int, l: int, charge, n: int) -> dict:
    """The full Fock crystal on ranks <= n plus the component marking.

    Returns {"layers": [sorted vertex lists], "edges": [(mp, i, mu)],
    "uglov": set of component vertices}.  Everything is deterministically
    ordered for reproducible output.
    """
    if n < 0:
        raise ValueError("rank must be >= 0")
    layers = [multipartitions(l, m) for m in range(n + 1)]
    edges = []
    for m in range(n):
        for mp in layers[m]:
            for i, gamma in good_addable_nodes(mp, charge, e):
                edges.append((mp, i, add_node(mp, gamma)))
    edges.sort()
    marked = set()
    for layer in uglov_layers(e, l, charge, n):
        marked |= layer
    return {"layers": layers, "edges": edges, "uglov": marked}


def crystal_to_dot(graph, charge) -> str:
    """Graphviz rendering; vertices labeled by the multipartition text form,
    component vertices drawn solid."""
    lines = ["digraph crystal {", '  rankdir=TB;']
    ids = {}
    for layer in graph["layers"]:
        for mp in layer:
            ids[mp] = "v%d" % len(ids)
    for layer in graph["layers"]:
        for mp in layer:
            shape = ' style=filled fillcolor="lightgrey"' if mp in graph["uglov"] else ""
            lines.append('  %s [label="%s"%s];' % (ids[mp], mp_to_text(mp), shape))
    for mp, i, mu in graph["edges"]:
        lines.append('  %s -> %s [label="%d"];' % (ids[mp], ids[mu], i))
    lines.append("}")
    return "\n".join(lines)


def crystal_to_json(graph) -> dict:
    return {
        "layers": [[mp_to_text(mp) for mp in layer] for layer in graph["layers"]],
        "edges": [
            {"from": mp_to_text(mp), "color": i, "to": mp_to_text(mu)}
            for mp, i, mu in graph["edges"]
        ],
        "vertices": [
            {"label": mp_to_text(mp), "uglov": mp in graph["uglov"]}
            for layer in graph["layers"] for mp in layer
        ],
    }
