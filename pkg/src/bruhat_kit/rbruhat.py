"""Finite permutations, the r-Bruhat order and its chain calculus.

A cover in the r-Bruhat order swaps two values a < b sitting on either
side of position r while raising the length by one; the edge label is b.
Chains are stored in application order (first step first).  Rendered
operator words follow the right-to-left convention, so the displayed
word lists the last step first.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import combinat, qsym
from .errors import CapExceeded, EmptyInterval, IdentityInput

DEFAULT_CAP = 10**6


class FinitePermutation:
    """A permutation of the positive integers fixing all but finitely many."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        while images and images[-1] == len(images):
            images = images[:-1]
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..n: {images}")
        self.images = images

    @classmethod
    def identity(cls) -> "FinitePermutation":
        return cls(())

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.images):
            return self.images[i - 1]
        return i

    def __len__(self):
        return len(self.images)

    def inverse(self) -> "FinitePermutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return FinitePermutation(inv)

    def __mul__(self, other: "FinitePermutation") -> "FinitePermutation":
        n = max(len(self.images), len(other.images))
        return FinitePermutation(tuple(self(other(i)) for i in range(1, n + 1)))

    def position(self, value: int) -> int:
        """Position of a value (values beyond the support are fixed)."""
        if 1 <= value <= len(self.images):
            return self.images.index(value) + 1
        return value

    def __eq__(self, other):
        if not isinstance(other, FinitePermutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"FinitePermutation({list(self.images)})"

    def one_line(self) -> str:
        return " ".join(str(v) for v in self.images) if self.images else "1"


def parse_permutation(text: str) -> FinitePermutation:
    """Parse a space- or comma-separated one-line permutation."""
    parts = text.replace(",", " ").split()
    return FinitePermutation(int(p) for p in parts)


def length(u: FinitePermutation) -> int:
    """Coxeter length = number of inversions."""
    im = u.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def swap_values(u: FinitePermutation, a: int, b: int) -> FinitePermutation:
    """Left multiplication by the transposition of values a and b."""
    n = max(len(u.images), a, b)
    im = [u(i) for i in range(1, n + 1)]
    pa, pb = im.index(a), im.index(b)
    im[pa], im[pb] = im[pb], im[pa]
    return FinitePermutation(im)


def apply_u(u: FinitePermutation, a: int, b: int, r: int):
    """One r-Bruhat cover step: swap values a < b across position r.

    Returns the new permutation, or None when the step is not a cover
    (None plays the role of the operator's zero).
    """
    if not a < b:
        raise ValueError("need a < b")
    pa, pb = u.position(a), u.position(b)
    if not (pa <= r < pb):
        return None
    w = swap_values(u, a, b)
    if length(w) != length(u) + 1:
        return None
    return w


@dataclass(frozen=True)
class SchubertChain:
    """A saturated r-Bruhat chain: start point plus value pairs in application order."""

    start: FinitePermutation
    steps: tuple[tuple[int, int], ...]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.steps)

    def end(self) -> FinitePermutation:
        u = self.start
        for a, b in self.steps:
            u = swap_values(u, a, b)
        return u

    def render_steps(self) -> str:
        return " ".join(f"t({a},{b})" for a, b in self.steps)

    def render_word(self) -> str:
        """Operator word, rightmost letter applied first."""
        return " ".join(_u_letter(a, b) for a, b in reversed(self.steps))


def _u_letter(a: int, b: int) -> str:
    if a <= 9 and b <= 9:
        return f"u{a}{b}"
    return f"u({a},{b})"


def interval_from_zeta(zeta: FinitePermutation):
    """Build the canonical nonempty interval (u, w, r) attached to zeta.

    r counts the values pulled leftward by zeta; w sorts those values
    ahead of their complement and u = zeta^{-1} w, so that w u^{-1} = zeta
    and the chain steps multiply to zeta.
    """
    if not zeta.images:
        raise IdentityInput("zeta must not be the identity")
    n = len(zeta.images)
    zinv = zeta.inverse()
    up = [a for a in range(1, n + 1) if zinv(a) < a]
    r = len(up)
    rest = [j for j in range(1, n + 1) if j not in set(up)]
    w = FinitePermutation(up + rest)
    u = zinv * w
    return u, w, r


def first_chain(u: FinitePermutation, w: FinitePermutation, r: int) -> SchubertChain:
    """The canonical chain of [u, w]_r, built by the greedy recursion.

    At each step take a = x(i) for the largest i <= r where x is still
    below w, and b = x(j) for the smallest j > r with x(j) > a >= w(j).
    Raises EmptyInterval when the recursion cannot complete.
    """
    n = max(len(u.images), len(w.images), r + 1)
    steps = []
    x = u
    guard = length(w) - length(u)
    while x != w:
        if guard <= 0:
            raise EmptyInterval(f"no chain from {x.images} to {w.images} at r={r}")
        cands = [i for i in range(1, r + 1) if x(i) < w(i)]
        if not cands:
            raise EmptyInterval(f"no chain from {u.images} to {w.images} at r={r}")
        i1 = max(cands)
        a = x(i1)
        j1 = next((j for j in range(r + 1, n + 1) if x(j) > a >= w(j)), None)
        if j1 is None:
            raise EmptyInterval(f"no chain from {u.images} to {w.images} at r={r}")
        b = x(j1)
        nxt = apply_u(x, a, b, r)
        if nxt is None:
            raise EmptyInterval(f"no chain from {u.images} to {w.images} at r={r}")
        steps.append((a, b))
        x = nxt
        guard -= 1
    return SchubertChain(u, tuple(steps))


def _cover_steps(x: FinitePermutation, w: FinitePermutation, r: int, n: int):
    """Cover steps from x staying entrywise between x and w (split at r)."""
    out = []
    for i in range(1, r + 1):
        a = x(i)
        if a >= w(i):
            continue
        for j in range(r + 1, n + 1):
            b = x(j)
            if b <= a or a < w(j):
                continue
            # position i gains b, position j drops to a: stay under/over w
            if b > w(i):
                continue
            if length(swap_values(x, a, b)) == length(x) + 1:
                out.append((a, b))
    return out


def all_chains(u: FinitePermutation, w: FinitePermutation, r: int,
               cap: int = DEFAULT_CAP, threads: int = 1) -> list[SchubertChain]:
    """Every saturated chain of [u, w]_r, sorted lexicographically by steps.

    Enumerates by depth-first search over covers; the rewrite relations
    are deliberately not used here so they stay an independent check.
    """
    n = max(len(u.images), len(w.images), r + 1)
    budget = length(w) - length(u)
    if budget < 0:
        return []
    if any(u(i) > w(i) for i in range(1, r + 1)) or \
       any(u(j) < w(j) for j in range(r + 1, n + 1)):
        return []
    if budget == 0:
        return [SchubertChain(u, ())] if u == w else []

    def dfs(x, depth, acc, sink):
        if depth == budget:
            if x == w:
                sink.append(tuple(acc))
                if len(sink) > cap:
                    raise CapExceeded(f"chain cap {cap} exceeded")
            return
        for a, b in _cover_steps(x, w, r, n):
            acc.append((a, b))
            dfs(swap_values(x, a, b), depth + 1, acc, sink)
            acc.pop()

    first = _cover_steps(u, w, r, n)
    if threads > 1 and len(first) > 1:
        def branch(step):
            sink = []
            dfs(swap_values(u, *step), 1, [step], sink)
            return sink
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(branch, first))
        words = [wd for chunk in chunks for wd in chunk]
        if len(words) > cap:
            raise CapExceeded(f"chain cap {cap} exceeded")
    else:
        words = []
        dfs(u, 0, [], words)
    return [SchubertChain(u, wd) for wd in sorted(words)]


def k_function_r(u: FinitePermutation, w: FinitePermutation, r: int,
                 cap: int = DEFAULT_CAP, threads: int = 1) -> qsym.QuasiSymFn:
    """Sum of F over the descent compositions of all chain label sequences."""
    chains = all_chains(u, w, r, cap=cap, threads=threads)
    terms: dict[tuple[int, ...], int] = {}
    for c in chains:
        d = combinat.descent_composition(c.labels) if c.steps else ()
        terms[d] = terms.get(d, 0) + 1
    return qsym.QuasiSymFn(qsym.F, terms)


# Rewrite rules on step words (application order).  The three-letter
# relations exchange a braid-like pattern; the two-letter relation
# commutes steps whose value intervals are disjoint or strictly nested.

def rewrite_schubert(word, rule: str, position: int):
    """Apply one rewrite rule at a position of a step word.

    Returns the rewritten word, or None when the rule does not match
    there.  Words are tuples of (a, b) value pairs in application order;
    both directions of each rule are recognized.
    """
    word = tuple(word)
    if rule == "R3":
        if position + 2 > len(word):
            return None
        (x1, y1), (x2, y2) = word[position], word[position + 1]
        lo, hi = sorted([(x1, y1), (x2, y2)])
        disjoint = lo[1] < hi[0]
        nested = lo[0] < hi[0] and hi[1] < lo[1]
        if not (disjoint or nested):
            return None
        return word[:position] + ((x2, y2), (x1, y1)) + word[position + 2:]
    if rule not in ("R1", "R2"):
        raise ValueError(f"unknown rewrite rule {rule!r}")
    if position + 3 > len(word):
        return None
    s1, s2, s3 = word[position:position + 3]
    repl = None
    if rule == "R1":
        # pattern (a,c)(c,d)(b,c)  <->  (b,c)(a,b)(b,d)  for a<b<c<d
        if s1[1] == s2[0] == s3[1] and s1[0] < s3[0] < s1[1] < s2[1]:
            a, b, c, d = s1[0], s3[0], s1[1], s2[1]
            repl = ((b, c), (a, b), (b, d))
        elif s1[0] == s2[1] == s3[0] and s2[0] < s1[0] < s1[1] < s3[1]:
            a, b, c, d = s2[0], s1[0], s1[1], s3[1]
            repl = ((a, c), (c, d), (b, c))
    else:
        # pattern (b,c)(c,d)(a,c)  <->  (b,d)(a,b)(b,c)  for a<b<c<d
        if s1[1] == s2[0] == s3[1] and s3[0] < s1[0] < s1[1] < s2[1]:
            a, b, c, d = s3[0], s1[0], s1[1], s2[1]
            repl = ((b, d), (a, b), (b, c))
        elif s2[1] == s1[0] == s3[0] and s2[0] < s1[0] < s3[1] < s1[1]:
            a, b, c, d = s2[0], s1[0], s3[1], s1[1]
            repl = ((b, c), (c, d), (a, c))
    if repl is None:
        return None
    return word[:position] + repl + word[position + 3:]


def rewrite_neighbours(word) -> list[tuple[tuple[int, int], ...]]:
    """All words reachable from this one by a single rewrite."""
    out = []
    for rule in ("R1", "R2", "R3"):
        for pos in range(len(word)):
            res = rewrite_schubert(word, rule, pos)
            if res is not None:
                out.append(res)
    return out


def rewrite_closure(word, cap: int = DEFAULT_CAP) -> set:
    """Transitive closure of a word under the rewrite rules."""
    seen = {tuple(word)}
    stack = [tuple(word)]
    while stack:
        cur = stack.pop()
        for nxt in rewrite_neighbours(cur):
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise CapExceeded(f"rewrite closure cap {cap} exceeded")
                stack.append(nxt)
    return seen


def is_zero_word(word) -> bool:
    """True if the word contains a factor forcing the operator product to zero.

    Two-step factors with interleaved value intervals kill every chain,
    as do the three-step palindromes sharing a middle value.
    """
    word = tuple(word)
    for i in range(len(word) - 1):
        (x1, y1), (x2, y2) = word[i], word[i + 1]
        lo, hi = sorted([(x1, y1), (x2, y2)])
        # (a,c)(b,d) with a <= b < c <= d, in either order
        if lo[0] <= hi[0] < lo[1] <= hi[1]:
            return True
    for i in range(len(word) - 2):
        s1, s2, s3 = word[i:i + 3]
        if s1 == s3:
            a1, b1 = s1
            a2, b2 = s2
            if (b2 == a1 and a2 < b2 < b1) or (a2 == b1 and a1 < a2 < b2):
                return True
    return False
