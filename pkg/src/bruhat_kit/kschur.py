"""Weak order on 0-grassmannians, the cyclic Pieri rule and k-Schur data.

The weak order is restricted to 0-grassmannian points: a cover
u -> u*s_i needs the length to rise by one and the product to stay
grassmannian.  Pieri steps are weak chains whose generator labels are
cyclically increasing on the clock with hours 0..k.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from . import combinat, qsym
from .affineperm import (AffinePermutation, is_grassmannian, kbounded_from_core,
                         length_affine, to_core)
from .combinat import Partition
from .errors import MOutOfRange, NotGrassmannian


def weak_covers(u: AffinePermutation) -> list[tuple[int, AffinePermutation]]:
    """All (i, u*s_i) raising length by one and staying 0-grassmannian."""
    if not is_grassmannian(u):
        raise NotGrassmannian(f"{u.text()} is not 0-grassmannian")
    out = []
    for i in range(u.k + 1):
        if u(i) < u(i + 1):  # right ascent, so length goes up
            v = u.right_multiply_s(i)
            if is_grassmannian(v):
                out.append((i, v))
    return out


def is_cyclically_increasing(labels, k: int) -> bool:
    """Distinct hours read clockwise, with the smallest missing hour as the cut.

    Relabeling each hour by its clockwise distance from the smallest
    absent hour must give a strictly increasing sequence; at most k of
    the k+1 hours may be used.
    """
    labels = tuple(labels)
    if not 1 <= len(labels) <= k:
        return False
    if any(not 0 <= x <= k for x in labels):
        return False
    if len(set(labels)) != len(labels):
        return False
    j0 = min(set(range(k + 1)) - set(labels))
    mapped = [(x - j0) % (k + 1) for x in labels]
    return all(mapped[i] < mapped[i + 1] for i in range(len(mapped) - 1))


def cyclic_order(hours, k: int) -> tuple[int, ...]:
    """The unique cyclically increasing arrangement of a set of hours."""
    hours = set(hours)
    if not 1 <= len(hours) <= k:
        raise ValueError(f"need between 1 and k distinct hours, got {sorted(hours)}")
    j0 = min(set(range(k + 1)) - hours)
    return tuple(sorted(hours, key=lambda x: (x - j0) % (k + 1)))


def _chain_end(u: AffinePermutation, labels) -> AffinePermutation | None:
    """Follow weak covers along the given labels; None if any step fails."""
    x = u
    for i in labels:
        if not x(i) < x(i + 1):
            return None
        x = x.right_multiply_s(i)
        if not is_grassmannian(x):
            return None
    return x


def pieri_kschur(u: AffinePermutation, m: int) -> list[AffinePermutation]:
    """Endpoints of the cyclically increasing weak chains of length m from u."""
    if not 1 <= m <= u.k:
        raise MOutOfRange(f"need 1 <= m <= k={u.k}, got {m}")
    if not is_grassmannian(u):
        raise NotGrassmannian(f"{u.text()} is not 0-grassmannian")
    out = []
    for hours in combinations(range(u.k + 1), m):
        end = _chain_end(u, cyclic_order(hours, u.k))
        if end is not None:
            out.append(end)
    out.sort(key=lambda x: x.window)
    return out


def grassmannians_of_length(k: int, d: int) -> list[AffinePermutation]:
    """All 0-grassmannians of the given length, by breadth-first weak growth."""
    layer = {AffinePermutation.identity(k)}
    for _ in range(d):
        layer = {v for u in layer for _, v in weak_covers(u)}
    return sorted(layer, key=lambda x: x.window)


def random_grassmannian(k: int, length: int, rng) -> AffinePermutation:
    """A random weak-order walk of the given length from the identity."""
    u = AffinePermutation.identity(k)
    for _ in range(length):
        covers = weak_covers(u)
        u = rng.choice(covers)[1]
    return u


def kbounded_of(u: AffinePermutation) -> Partition:
    """The k-bounded partition attached to u through its core."""
    return kbounded_from_core(to_core(u))


def _partition_sort_key(lam: Partition):
    # decreasing lex refines dominance on partitions of one weight
    return tuple(-x for x in lam)


@dataclass
class KMatrix:
    """Counts of iterated Pieri chains: row lam, column u, entry K(lam, u).

    Rows are the k-bounded partitions of the degree; columns are the
    0-grassmannians of that length, ordered through the same partitions
    by the core correspondence, which makes the matrix unitriangular.
    """

    k: int
    degree: int
    rows: list[Partition]
    columns: list[AffinePermutation]
    entries: dict[tuple[Partition, AffinePermutation], int]

    def entry(self, lam: Partition, u: AffinePermutation) -> int:
        return self.entries.get((tuple(lam), u), 0)

    def is_unitriangular(self) -> bool:
        for i, lam in enumerate(self.rows):
            if self.entry(lam, self.columns[i]) != 1:
                return False
            if any(self.entry(lam, self.columns[j]) for j in range(i + 1, len(self.rows))):
                return False
        return True


def _h_action(k: int, lam) -> dict[AffinePermutation, int]:
    """Endpoint multiplicities of iterated Pieri steps for the parts of lam."""
    state = {AffinePermutation.identity(k): 1}
    for part in lam:
        nxt: dict[AffinePermutation, int] = {}
        for u, c in state.items():
            for v in pieri_kschur(u, part):
                nxt[v] = nxt.get(v, 0) + c
        state = nxt
    return state


def k_matrix(k: int, degree: int, threads: int = 1) -> KMatrix:
    """The triangular matrix linking h products to iterated Pieri endpoints.

    Rows are independent iterated-Pieri runs, so they may be computed by
    a worker pool; the row order of the result does not depend on it.
    """
    rows = sorted(combinat.partitions_of(degree, max_part=k), key=_partition_sort_key)
    by_partition = {kbounded_of(u): u for u in grassmannians_of_length(k, degree)}
    columns = [by_partition[lam] for lam in rows]
    if threads > 1 and len(rows) > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=threads) as pool:
            actions = list(pool.map(lambda lam: _h_action(k, lam), rows))
    else:
        actions = [_h_action(k, lam) for lam in rows]
    entries: dict[tuple[Partition, AffinePermutation], int] = {}
    for lam, action in zip(rows, actions):
        for u, c in action.items():
            entries[lam, u] = c
    return KMatrix(k, degree, rows, columns, entries)


def kschur_in_h(u: AffinePermutation) -> qsym.SymFn:
    """Integer h-expansion of the k-Schur function indexed by u.

    Inverts the Pieri matrix at the degree of u by back substitution
    along decreasing lex order (a dominance extension), which is exactly
    the order in which the matrix is unitriangular.
    """
    d = length_affine(u)
    if d == 0:
        return qsym.SymFn("h", {(): 1})
    km = k_matrix(u.k, d)
    assert km.is_unitriangular(), "Pieri matrix lost triangularity"
    target = kbounded_of(u)
    exprs: dict[Partition, qsym.SymFn] = {}
    for i, lam in enumerate(km.rows):
        expr = qsym.SymFn("h", {lam: 1})
        for j in range(i):
            mu = km.rows[j]
            c = km.entry(lam, km.columns[j])
            if c:
                expr = expr - c * exprs[mu]
        assert km.entry(lam, km.columns[i]) == 1, "matrix is not unitriangular"
        exprs[lam] = expr
    return exprs[target]


@lru_cache(maxsize=1 << 12)
def _segment_counts(u: AffinePermutation, m: int) -> tuple:
    """Endpoint counts of cyclically increasing weak m-chains from u."""
    acc: dict[AffinePermutation, int] = {}
    for hours in combinations(range(u.k + 1), m):
        end = _chain_end(u, cyclic_order(hours, u.k))
        if end is not None:
            acc[end] = acc.get(end, 0) + 1
    return tuple(acc.items())


def k_function_weak(u: AffinePermutation, w: AffinePermutation) -> qsym.QuasiSymFn:
    """The weak-order interval function, defined in the monomial basis.

    The coefficient of M_alpha counts weak chains from u to w that split
    into cyclically increasing runs of sizes alpha.  Descent sequences
    are not well defined on the weak order, so no F-basis shortcut
    exists; any F view must go through the basis change.
    """
    n = length_affine(w) - length_affine(u)
    if n < 0:
        return qsym.QuasiSymFn(qsym.M, {})
    if n == 0:
        return qsym.QuasiSymFn(qsym.M, {(): 1} if u == w else {})
    terms: dict[tuple[int, ...], int] = {}
    for alpha in combinat.compositions_of(n):
        if any(part > u.k for part in alpha):
            continue
        state = {u: 1}
        for part in alpha:
            nxt: dict[AffinePermutation, int] = {}
            for x, c in state.items():
                for y, ways in _segment_counts(x, part):
                    nxt[y] = nxt.get(y, 0) + c * ways
            state = nxt
        if state.get(w):
            terms[alpha] = state[w]
    return qsym.QuasiSymFn(qsym.M, terms)
