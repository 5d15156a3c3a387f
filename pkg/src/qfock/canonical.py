"""Canonical basis elements via the bar recursion, and the resulting
decomposition matrices at q = 1.

For an ordered monomial v let bar(v) = v + sum of other monomials (the unit
coefficient on v is asserted, not assumed).  Writing d = bar(v) - v and
expanding d over the already-known canonical elements of the monomials
reachable from v gives antisymmetric coefficients; truncating each to its
positive-exponent half yields the corrections, and

    G(v) = v + sum_alpha  trunc(gamma_alpha) G(alpha)

is the unique bar-invariant element congruent to v modulo q.  The recursion
is driven by the topological order of the reachability DAG (bar support only
moves "up" in a-value; a cycle would falsify that and aborts the run), so it
never needs to compare a-values across charges, where the comparison is not
even defined.
"""

from __future__ import annotations

from .abacus import WedgeMonomial, from_pair, to_pair
from .avalue import a_rel
from .errors import InvariantError
from .laurent import LaurentPoly
from .partitions import is_split_semisimple, mp_to_text, multipartitions, rank
from .wedge import WedgeEngine


class CanonicalBasis:
    """Shared straightening engine plus a global cache of bar images and
    canonical elements, keyed by monomial.  Monomials carry their total
    charge, so one instance serves every charge of a fixed (e, l)."""

    def __init__(self, e: int, l: int, engine: WedgeEngine | None = None):
        self.e = e
        self.l = l
        self.engine = engine if engine is not None else WedgeEngine(e, l)
        self._bar = {}
        self._g = {}

    def bar(self, u: WedgeMonomial):
        hit = self._bar.get(u)
        if hit is None:
            hit = self.engine.bar(u)
            one = hit.get(u)
            if one is None or one.terms != {0: 1}:
                raise InvariantError(
                    "bar(%s) has coefficient %s on its own monomial" % (u, one)
                )
            self._bar[u] = hit
        return hit

    def bar_closure(self, u0: WedgeMonomial) -> list:
        """Monomials reachable from u0 through bar supports, topologically
        sorted (u0 first, sinks last).  A cycle aborts: it would falsify the
        a-value growth of bar supports."""
        order = []
        state = {}  # 1 = on stack, 2 = done
        stack = [(u0, None)]
        while stack:
            u, it = stack.pop()
            if it is None:
                if state.get(u) == 2:
                    continue
                if state.get(u) == 1:
                    raise InvariantError("bar closure cycle through %s" % (u,))
                state[u] = 1
                it = iter(sorted(self.bar(u), key=lambda w: w.prefix))
            advanced = False
            for w in it:
                if w == u:
                    continue
                if state.get(w) == 1:
                    raise InvariantError("bar closure cycle through %s" % (w,))
                if state.get(w) != 2:
                    stack.append((u, it))
                    stack.append((w, None))
                    advanced = True
                    break
            if not advanced:
                state[u] = 2
                order.append(u)
        order.reverse()
        return order

    def element(self, u0: WedgeMonomial):
        """The canonical element G(u0) as {monomial: polynomial}."""
        hit = self._g.get(u0)
        if hit is not None:
            return hit
        order = self.bar_closure(u0)
        pos = {u: i for i, u in enumerate(order)}
        for v in reversed(order):
            if v in self._g:
                continue
            residual = dict(self.bar(v))
            del residual[v]  # unit coefficient asserted in bar()
            g = {v: LaurentPoly({0: 1})}
            while residual:
                alpha = min(residual, key=pos.__getitem__)
                gamma = residual.pop(alpha)
                if not gamma.is_antisymmetric():
                    raise InvariantError(
                        "correction coefficient %s on %s is not antisymmetric "
                        "(bar involution broken upstream)" % (gamma, alpha)
                    )
                beta = gamma.truncate_positive()
                g_alpha = self._g[alpha]
                for w, c in g_alpha.items():
                    if beta:
                        cur = g.get(w, LaurentPoly())
                        s = cur + beta * c
                        if s:
                            g[w] = s
                        elif w in g:
                            del g[w]
                    if w != alpha:
                        cur = residual.get(w, LaurentPoly())
                        s = cur - gamma * c
                        if s:
                            residual[w] = s
                        elif w in residual:
                            del residual[w]
            self._g[v] = g
        return self._g[u0]

    def element_for_label(self, mp, charge):
        """G for a (multipartition, charge) label, as a Fock-space vector
        {(mp, charge): polynomial}."""
        g = self.element(from_pair(mp, charge, self.e, self.l))
        out = {}
        for u, c in g.items():
            out[to_pair(u, self.e, self.l)] = c
        return out

    def component_elements(self, s: int, n: int):
        """Stress mode: canonical elements for the whole charge-s degree-n
        component, not just the monomials some column happens to reach.
        Results are identical to per-column lazy closures (the caches are
        shared), just exhaustive."""
        from .abacus import enumerate_degree_component

        return {u: self.element(u) for u in enumerate_degree_component(s, n)}


class DecompositionMatrix:
    """Rows: all l-partitions of rank n, sorted by (a_rel, text form).
    Columns: the Uglov l-partitions, sorted the same way.  Entries are the
    canonical-basis coefficients; `entries` holds them at q = 1, `qentries`
    keeps the polynomials."""

    def __init__(self, e, l, charge, n, rows, cols, qentries, checks):
        self.e = e
        self.l = l
        self.charge = charge
        self.n = n
        self.rows = rows
        self.cols = cols
        self.qentries = qentries
        self.entries = {key: c.eval_one() for key, c in qentries.items()}
        self.checks = checks

    def triples(self):
        """The matrix as sorted (row label, column label, entry) triples,
        zero entries omitted; the canonical comparison form."""
        return sorted(
            (mp_to_text(row), mp_to_text(col), v)
            for (row, col), v in self.entries.items()
            if v
        )

    def to_csv(self) -> str:
        lines = ["row,column,entry"]
        for row, col, v in self.triples():
            lines.append("%s,%s,%d" % (row.replace(",", " "), col.replace(",", " "), v))
        return "\n".join(lines) + "\n"

    def to_latex(self) -> str:
        lines = [r"\begin{array}{l|%s}" % ("c" * len(self.cols))]
        for row in self.rows:
            cells = []
            for col in self.cols:
                v = self.entries.get((row, col), 0)
                cells.append(str(v) if v else ".")
            lines.append("%s & %s \\\\" % (mp_to_text(row), " & ".join(cells)))
        lines.append(r"\end{array}")
        return "\n".join(lines)

    def to_json(self, keep_q=False) -> dict:
        body = {
            "e": self.e,
            "l": self.l,
            "charge": list(self.charge),
            "rank": self.n,
            "rows": [mp_to_text(r) for r in self.rows],
            "columns": [mp_to_text(c) for c in self.cols],
            "triples": [list(t) for t in self.triples()],
            "checks": self.checks,
        }
        if keep_q:
            body["q_triples"] = sorted(
                [mp_to_text(r), mp_to_text(c), p.to_pairs()]
                for (r, c), p in self.qentries.items() if p
            )
        return body


def _sorted_labels(labels, e, l, charge):
    if not labels:
        return []
    h = max(max((len(comp) for comp in mp), default=0) for mp in labels) + 1
    return sorted(labels, key=lambda mp: (a_rel(mp, e, l, charge, h), mp_to_text(mp)))


def decomposition_matrix(e, l, charge, n, basis: CanonicalBasis | None = None,
                         uglov=None) -> DecompositionMatrix:
    """Columns are the canonical elements of the rank-n Uglov labels,
    evaluated at q = 1 on the charge-matching keys.

    Cross-charge and cross-rank supports of each column are required to be
    empty and recorded under checks["foreign_support"]; nonempty means the
    run hit something the theory says cannot happen.
    """
    from .crystal import uglov_set  # local import: crystal does not need canonical

    if basis is None:
        basis = CanonicalBasis(e, l)
    if uglov is None:
        uglov = uglov_set(e, l, charge, n)
    rows = _sorted_labels(multipartitions(l, n), e, l, charge)
    cols = _sorted_labels(uglov, e, l, charge)
    qentries = {}
    foreign = []
    for col in cols:
        vec = basis.element_for_label(col, charge)
        for (mp, ch), c in vec.items():
            if ch != tuple(charge) or rank(mp) != n:
                foreign.append([mp_to_text(mp), list(ch), mp_to_text(col)])
                continue
            qentries[(mp, col)] = c
    checks = {
        "semisimple": is_split_semisimple(e, charge, n),
        "foreign_support": sorted(foreign),
    }
    return DecompositionMatrix(e, l, charge, n, rows, cols, qentries, checks)


def verify_unitriangular(matrix: DecompositionMatrix) -> dict:
    """Checks the triangular shape against the a-value order: unit diagonal,
    strictly larger a_rel on every off-label row of each column, uniqueness
    of each column's minimal row, and nonnegative integer entries."""
    e, l, charge = matrix.e, matrix.l, matrix.charge
    labels = set(matrix.rows) | set(matrix.cols)
    h = max(max((len(comp) for comp in mp), default=0) for mp in labels) + 1
    aval = {mp: a_rel(mp, e, l, charge, h) for mp in labels}
    violations = []
    minimal_rows = {}
    for col in matrix.cols:
        support = [row for row in matrix.rows if matrix.entries.get((row, col))]
        if matrix.entries.get((col, col)) != 1:
            violations.append("column %s: diagonal entry is %r, not 1"
                              % (mp_to_text(col), matrix.entries.get((col, col))))
        if not support:
            violations.append("column %s: empty" % mp_to_text(col))
            continue
        amin = min(aval[row] for row in support)
        lowest = [row for row in support if aval[row] == amin]
        if lowest != [col]:
            violations.append(
                "column %s: minimal-a rows are %s"
                % (mp_to_text(col), [mp_to_text(r) for r in lowest])
            )
        minimal_rows.setdefault(tuple(lowest), []).append(col)
        for row in support:
            if row != col and aval[row] <= aval[col]:
                violations.append(
                    "column %s: row %s has a=%d <= %d"
                    % (mp_to_text(col), mp_to_text(row), aval[row], aval[col])
                )
    for lowest, cols in minimal_rows.items():
        if len(cols) > 1:
            violations.append(
                "columns %s share the minimal row set %s"
                % ([mp_to_text(c) for c in cols], [mp_to_text(r) for r in lowest])
            )
    for (row, col), v in matrix.entries.items():
        if v < 0:
            violations.append(
                "entry (%s, %s) = %d is negative" % (mp_to_text(row), mp_to_text(col), v)
            )
    return {"ok": not violations, "violations": violations}
