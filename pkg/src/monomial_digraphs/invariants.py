"""Isomorphism invariants and counting formulas for monomial digraphs.

Every closed-form count here has a brute-force twin that scans the digraph
directly, so the two routes can check each other.
"""

from dataclasses import dataclass, asdict
from itertools import combinations

from .field import Field, gcd_bar
from .digraph import Digraph, count_cycles_by_length, DEFAULT_CYCLE_BUDGET

MOTIF_NAMES = ("K", "directed-K22")


@dataclass(frozen=True)
class InvariantProfile:
    """Pruning key for the isomorphism engine."""

    m_bar: int
    n_bar: int
    sum_bar: int
    diff_bar: int
    loop_total: int
    loop_distinct_nonzero_y: int
    two_cycle_count: int
    k_motif_count: int
    k22_motif_count: int
    cycle_spectrum: tuple | None = None

    def as_dict(self):
        d = asdict(self)
        if d["cycle_spectrum"] is not None:
            d["cycle_spectrum"] = list(d["cycle_spectrum"])
        return d


def gcd_profile(q: int, m: int, n: int):
    """(m_bar, n_bar, sum_bar, diff_bar) with gcd(0, q-1) = q-1."""
    return (gcd_bar(m, q), gcd_bar(n, q),
            gcd_bar(m + n, q), gcd_bar(m - n, q))


def count_loops(D: Digraph):
    """(total, number of distinct nonzero second coordinates of looped
    vertices).  For odd q the latter equals (q-1)/gcd_bar(m+n, q)."""
    q = D.field.q if D.field is not None else None
    total = 0
    ys = set()
    for v in range(D.n):
        if D.has_arc(v, v):
            total += 1
            if q is not None:
                y = v % q
                if y != 0:
                    ys.add(y)
    return total, len(ys)


def two_cycle_count(D: Digraph) -> int:
    """Unordered pairs of distinct mutually adjacent vertices."""
    count = 0
    for u in range(D.n):
        for v in D.adj[u]:
            if v > u and D.has_arc(v, u):
                count += 1
    return count


def two_cycle_formula(q: int, m: int, n: int) -> int:
    """q(q-1)(2 + gcd_bar(m-n)) / 2; valid for odd q only."""
    if q % 2 == 0:
        raise ValueError("the 2-cycle formula requires odd q")
    return q * (q - 1) * (2 + gcd_bar(m - n, q)) // 2


def motif_census(D: Digraph, name: str) -> int:
    """Count copies of a small test digraph.

    K: ordered pairs (alpha, beta) of distinct looped vertices with the arc
    alpha -> beta.  directed-K22: pairs ({u1,u2}, {w1,w2}) of 2-sets with
    all four arcs ui -> wj; tail and head sets may overlap.
    """
    if name == "K":
        looped = [v for v in range(D.n) if D.has_arc(v, v)]
        count = 0
        for a in looped:
            for b in looped:
                if a != b and D.has_arc(a, b):
                    count += 1
        return count
    if name == "directed-K22":
        outs = [set(nbrs) for nbrs in D.adj]
        count = 0
        for u1, u2 in combinations(range(D.n), 2):
            common = len(outs[u1] & outs[u2])
            count += common * (common - 1) // 2
        return count
    raise ValueError(f"unknown motif {name!r}")


def trinomial_root_count(F: Field, d: int) -> int:
    """Number of x in GF(q) with x^d - 2x + 1 = 0, by direct evaluation."""
    if d < 1:
        raise ValueError("d must be >= 1")
    two = F.add(1, 1)
    one = 1
    count = 0
    for x in F.elements():
        val = F.add(F.sub(F.pow(x, d), F.mul(two, x)), one)
        if val == 0:
            count += 1
    return count


_CONDITION_ORDER = ("m_bar", "n_bar", "sum_bar", "diff_bar")


@dataclass(frozen=True)
class FilterResult:
    passed: bool
    failed_condition: str | None      # first violated, in (i),(ii),(iii) order
    condition_i: bool                 # m_bar and n_bar both equal
    condition_ii: bool                # sum_bar equal
    condition_iii: bool               # diff_bar equal


def necessary_filter(params1, params2) -> FilterResult:
    """Check the gcd-profile necessary conditions on two parameter triples.

    params are (q, m, n) triples or MonomialParams; both must share q.
    """
    q1, m1, n1 = _unpack(params1)
    q2, m2, n2 = _unpack(params2)
    if q1 != q2:
        raise ValueError(f"mismatched field orders {q1} and {q2}")
    bars1 = gcd_profile(q1, m1, n1)
    bars2 = gcd_profile(q2, m2, n2)
    eq = [a == b for a, b in zip(bars1, bars2)]
    failed = None
    for name, ok in zip(_CONDITION_ORDER, eq):
        if not ok:
            failed = name
            break
    return FilterResult(
        passed=failed is None,
        failed_condition=failed,
        condition_i=eq[0] and eq[1],
        condition_ii=eq[2],
        condition_iii=eq[3],
    )


def _unpack(params):
    if hasattr(params, "q"):
        return params.q, params.m, params.n
    q, m, n = params
    return q, m, n


def profile(D: Digraph, cycle_cap: int | None = None,
            cycle_budget: int = DEFAULT_CYCLE_BUDGET) -> InvariantProfile:
    """Full invariant profile of a monomial digraph."""
    if D.params is None:
        raise ValueError("profile requires a monomial digraph")
    q, m, n = D.params.q, D.params.m, D.params.n
    m_bar, n_bar, sum_bar, diff_bar = gcd_profile(q, m, n)
    loop_total, loop_y = count_loops(D)
    spectrum = None
    if cycle_cap is not None:
        spectrum = tuple(count_cycles_by_length(D, cycle_cap, cycle_budget))
    return InvariantProfile(
        m_bar=m_bar, n_bar=n_bar, sum_bar=sum_bar, diff_bar=diff_bar,
        loop_total=loop_total, loop_distinct_nonzero_y=loop_y,
        two_cycle_count=two_cycle_count(D),
        k_motif_count=motif_census(D, "K"),
        k22_motif_count=motif_census(D, "directed-K22"),
        cycle_spectrum=spectrum,
    )
