"""Partitions, compositions, descent compositions and Kostka numbers.

Partitions and compositions are plain tuples of positive integers; a
partition is weakly decreasing and never stores trailing zeros.  The
empty tuple is the unique object of weight 0.  Compositions with equal
part multisets are distinct objects (only symmetric functions collapse
them).
"""

from functools import cache
from itertools import permutations

from .errors import EmptyChain

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def as_partition(parts) -> Partition:
    """Validate and canonicalize a partition given as any iterable."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must weakly decrease: {p}")
    return p


def as_composition(parts) -> Composition:
    """Validate a composition given as any iterable."""
    c = tuple(int(x) for x in parts)
    if any(x <= 0 for x in c):
        raise ValueError(f"composition parts must be positive: {c}")
    return c


def weight(parts) -> int:
    return sum(parts)


def refines(alpha: Composition, beta: Composition) -> bool:
    """True iff summing consecutive blocks of ``alpha`` yields ``beta``.

    >>> refines((1, 2, 1), (3, 1))
    True
    >>> refines((1, 3), (3, 1))
    False
    """
    i = 0
    for b in beta:
        acc = 0
        while acc < b:
            if i >= len(alpha):
                return False
            acc += alpha[i]
            i += 1
        if acc != b:
            return False
    return i == len(alpha)


def descent_composition(labels) -> Composition:
    """Composition of len(labels) breaking exactly at strict descents.

    >>> descent_composition((1, 2, 0))
    (2, 1)
    >>> descent_composition((3, 2, 1))
    (1, 1, 1)
    """
    labels = tuple(labels)
    if not labels:
        raise EmptyChain("descent composition of an empty label sequence")
    parts = []
    run = 1
    for i in range(1, len(labels)):
        if labels[i - 1] > labels[i]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def compositions_of(n: int) -> list[Composition]:
    """All 2^(n-1) compositions of n (the empty composition for n = 0)."""
    if n == 0:
        return [()]
    out = []

    def go(rest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for part in range(1, rest + 1):
            go(rest - part, acc + [part])

    go(n, [])
    return out


def refinements(beta: Composition) -> list[Composition]:
    """All compositions alpha with refines(alpha, beta)."""
    out = [()]
    for b in beta:
        out = [pre + blk for pre in out for blk in compositions_of(b)]
    return out


def coarsenings(alpha: Composition) -> list[Composition]:
    """All compositions beta with refines(alpha, beta)."""
    if not alpha:
        return [()]
    out = []
    # choose which of the len(alpha)-1 internal boundaries survive
    for mask in range(1 << (len(alpha) - 1)):
        parts = []
        acc = alpha[0]
        for i in range(1, len(alpha)):
            if mask >> (i - 1) & 1:
                parts.append(acc)
                acc = alpha[i]
            else:
                acc += alpha[i]
        parts.append(acc)
        out.append(tuple(parts))
    return out


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of n (parts <= max_part) in decreasing lex order.

    >>> partitions_of(3)
    [(3,), (2, 1), (1, 1, 1)]
    >>> partitions_of(4, 2)
    [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    cap = n if max_part is None else min(max_part, n)
    if n == 0:
        return [()]
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of equal weight: prefix sums of lam >= mu."""
    if sum(lam) != sum(mu):
        return False
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


@cache
def kostka(lam: Partition, mu: Composition) -> int:
    """Number of semistandard Young tableaux of shape lam and content mu.

    Counts tableaux by peeling the cells holding the largest letter,
    which always form a horizontal strip; memoization keys on the
    (shape, content) pair.  Content may be any composition; weights
    must agree or the count is 0.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    if not mu:
        return 1
    last = mu[-1]
    rest = mu[:-1]
    total = 0
    for nu in _horizontal_strips_below(lam, last):
        total += kostka(nu, rest)
    return total


def _horizontal_strips_below(lam: Partition, size: int):
    """Partitions nu inside lam with lam/nu a horizontal strip of the given size."""
    n = len(lam)

    def go(i, remaining, acc):
        if i == n:
            if remaining == 0:
                nu = tuple(acc)
                while nu and nu[-1] == 0:
                    nu = nu[:-1]
                yield nu
            return
        # row i of nu must satisfy lam[i+1] <= nu_i <= lam[i] and nu_i >= next row's
        # upper bound for the strip condition: lam[i] - nu_i cells removed in row i,
        # horizontal strip forces nu_i >= lam[i+1]
        lo = lam[i + 1] if i + 1 < n else 0
        hi = lam[i]
        for nu_i in range(hi, lo - 1, -1):
            removed = hi - nu_i
            if removed > remaining:
                continue
            yield from go(i + 1, remaining - removed, acc + [nu_i])

    yield from go(0, size, [])


def ssyt_count_bruteforce(lam: Partition, mu: Composition) -> int:
    """Count SSYT of shape lam, content mu by explicit cell-by-cell filling.

    Independent of :func:`kostka`; intended as a desk-scale oracle.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    counts = list(mu)
    rows = [[0] * ln for ln in lam]

    def go(idx):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        total = 0
        for letter in range(1, len(mu) + 1):
            if counts[letter - 1] == 0:
                continue
            if c > 0 and rows[r][c - 1] > letter:
                continue
            if r > 0 and rows[r - 1][c] >= letter:
                continue
            rows[r][c] = letter
            counts[letter - 1] -= 1
            total += go(idx + 1)
            counts[letter - 1] += 1
            rows[r][c] = 0
        return total

    return go(0)


def distinct_rearrangements(lam: Partition) -> set[Composition]:
    """All compositions with the same part multiset as lam."""
    return set(permutations(lam))
