"""The level-l Fock space as formal sums of (multipartition, charge) symbols
and the Chevalley action on it.

A FockVector is a dict {(mp, charge): LaurentPoly}.  Charges ride on the
keys rather than on an ambient object so that vectors coming back from the
wedge bijection, which mix charges inside one degree component, round-trip
without loss.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .partitions import (
    above,
    add_node,
    addable_nodes,
    mp_to_text,
    remove_node,
    removable_nodes,
)


def n_count(mp, i, charge, e) -> int:
    """Addable minus removable i-nodes of mp."""
    return len(addable_nodes(mp, i, charge, e)) - len(removable_nodes(mp, i, charge, e))


def n_above(mp, mu, gamma, i, charge, e) -> int:
    """Addable i-nodes of mp above gamma, minus removable i-nodes of mu
    above gamma (mu = mp plus gamma)."""
    return (
        sum(1 for g in addable_nodes(mp, i, charge, e) if above(g, gamma, charge))
        - sum(1 for g in removable_nodes(mu, i, charge, e) if above(g, gamma, charge))
    )


def n_below(mp, mu, gamma, i, charge, e) -> int:
    """Same count on the nodes below gamma."""
    return (
        sum(1 for g in addable_nodes(mp, i, charge, e) if above(gamma, g, charge))
        - sum(1 for g in removable_nodes(mu, i, charge, e) if above(gamma, g, charge))
    )


def n_counts(mp, i, charge, e, gamma=None):
    """The exponent data for color i: N_i alone, or together with the
    above/below counts N_i^a, N_i^b for an addable i-node gamma."""
    if gamma is None:
        return n_count(mp, i, charge, e)
    if gamma not in addable_nodes(mp, i, charge, e):
        raise ValueError("%r is not an addable %d-node of %r" % (gamma, i, mp))
    mu = add_node(mp, gamma)
    return (
        n_count(mp, i, charge, e),
        n_above(mp, mu, gamma, i, charge, e),
        n_below(mp, mu, gamma, i, charge, e),
    )


def _acc(vec, key, poly):
    cur = vec.get(key)
    if cur is None:
        if poly:
            vec[key] = poly
    else:
        s = cur + poly
        if s:
            vec[key] = s
        else:
            del vec[key]


def apply_f(i, vec, e) -> dict:
    """f_i: adds every addable i-node gamma with weight q^{N^b_i}."""
    out = {}
    for (mp, charge), c in vec.items():
        for gamma in addable_nodes(mp, i, charge, e):
            mu = add_node(mp, gamma)
            w = n_below(mp, mu, gamma, i, charge, e)
            _acc(out, (mu, charge), c * LaurentPoly({w: 1}))
    return out


def apply_e(i, vec, e) -> dict:
    """e_i: removes every removable i-node gamma with weight q^{-N^a_i}."""
    out = {}
    for (mp, charge), c in vec.items():
        for gamma in removable_nodes(mp, i, charge, e):
            mu = remove_node(mp, gamma)
            w = -n_above(mu, mp, gamma, i, charge, e)
            _acc(out, (mu, charge), c * LaurentPoly({w: 1}))
    return out


def apply_k(i, vec, e) -> dict:
    """k_i: diagonal with weight q^{N_i}."""
    out = {}
    for (mp, charge), c in vec.items():
        _acc(out, (mp, charge), c * LaurentPoly({n_count(mp, i, charge, e): 1}))
    return out


def fock_to_json(vec) -> list:
    items = sorted(vec.items(), key=lambda kv: (kv[0][1], kv[0][0]))
    return [
        {
            "multipartition": mp_to_text(mp),
            "charge": list(charge),
            "coefficient": c.to_pairs(),
        }
        for (mp, charge), c in items
    ]
