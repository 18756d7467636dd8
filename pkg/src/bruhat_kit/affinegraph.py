"""The affine 0-Bruhat directed multigraph and its operator calculus.

Vertices are affine permutations; there is an edge u -> u*t(a,b) labeled
b for every representative pair (a, b) of a residue class with
0 < b - a <= k such that the step is a Bruhat cover and u(a) <= 0 < u(b)
(zero counts as nonpositive).  Distinct representatives of one class
give parallel edges with distinct labels but the same endpoints.

Operator words act on the right, so words apply left to right.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import combinat, qsym
from .affineperm import AffinePermutation, is_grassmannian, length_affine
from .errors import BadPair, CapExceeded, NotGrassmannian, PatternMismatch

DEFAULT_CAP = 10**6


def _check_pair(k: int, a: int, b: int) -> None:
    if not a < b:
        raise BadPair(f"need a < b, got ({a}, {b})")
    if b - a > k:
        raise BadPair(f"gap {b - a} exceeds k={k} for ({a}, {b})")


def is_bruhat_cover(u: AffinePermutation, a: int, b: int) -> bool:
    """Cover criterion: u(a) < u(b) and no interior value lies between them."""
    _check_pair(u.k, a, b)
    ua, ub = u(a), u(b)
    if ua >= ub:
        return False
    return all(not (ua < u(i) < ub) for i in range(a + 1, b))


def apply_t(u: AffinePermutation, a: int, b: int):
    """Right multiplication by t(a,b) when it is a 0-Bruhat cover, else None."""
    _check_pair(u.k, a, b)
    if not (u(a) <= 0 < u(b)) or not is_bruhat_cover(u, a, b):
        return None
    return _right_transpose(u, a, b)


def _right_transpose(u: AffinePermutation, a: int, b: int) -> AffinePermutation:
    n = u.k + 1
    gap = b - a
    ra, rb = a % n, b % n
    window = []
    for j in range(1, n + 1):
        if j % n == ra:
            window.append(u(j + gap))
        elif j % n == rb:
            window.append(u(j - gap))
        else:
            window.append(u.window[j - 1])
    return AffinePermutation(window, u.k)


def apply_word(u: AffinePermutation, word):
    """Fold apply_t over a word of pairs; None is absorbing."""
    x = u
    for a, b in word:
        x = apply_t(x, a, b)
        if x is None:
            return None
    return x


@dataclass(frozen=True)
class AffineEdge:
    """One multigraph edge: the chosen representative pair and its target."""

    source: AffinePermutation
    a: int
    b: int
    target: AffinePermutation

    @property
    def label(self) -> int:
        return self.b

    def render(self) -> str:
        n = self.source.k + 1
        a0 = (self.a - 1) % n + 1
        m = (self.a - a0) // n
        return f"t({a0},{a0 + self.b - self.a})@{m} label={self.b}"


def _rep_range(u: AffinePermutation, a: int, b: int) -> range:
    """Shifts m for which u(a + m(k+1)) <= 0 < u(b + m(k+1))."""
    n = u.k + 1
    m_lo = -((u(b) - 1) // n)
    m_hi = (-u(a)) // n
    return range(m_lo, m_hi + 1)


def edge_representatives(u: AffinePermutation, a: int, b: int) -> list[AffineEdge]:
    """All parallel edges of the residue class of (a, b), in shift order.

    The cover criterion is invariant under shifting both endpoints by
    k+1, so it is tested once; only the sign window depends on the
    shift, and it is finite because the entries of each class are
    unbounded in both directions.
    """
    n = u.k + 1
    a0 = (a - 1) % n + 1
    b0 = a0 + (b - a)
    _check_pair(u.k, a0, b0)
    if not is_bruhat_cover(u, a0, b0):
        return []
    target = _right_transpose(u, a0, b0)
    return [AffineEdge(u, a0 + m * n, b0 + m * n, target)
            for m in _rep_range(u, a0, b0)]


def out_edges(u: AffinePermutation) -> list[AffineEdge]:
    """Every edge leaving u, over all residue classes and representatives."""
    n = u.k + 1
    edges = []
    for a0 in range(1, n + 1):
        for gap in range(1, u.k + 1):
            edges.extend(edge_representatives(u, a0, a0 + gap))
    return edges


def _in_sources(w: AffinePermutation) -> list[AffinePermutation]:
    """Distinct vertices x with at least one edge x -> w."""
    n = w.k + 1
    out = []
    for a0 in range(1, n + 1):
        for gap in range(1, w.k + 1):
            b0 = a0 + gap
            wa, wb = w(a0), w(b0)
            if wa <= wb:
                continue
            if any(wb < w(i) < wa for i in range(a0 + 1, b0)):
                continue
            if _rep_range_rev(w, a0, b0):
                out.append(_right_transpose(w, a0, b0))
    return out


def _rep_range_rev(w: AffinePermutation, a: int, b: int) -> range:
    # source condition in terms of the target: w(b') <= 0 < w(a')
    n = w.k + 1
    m_lo = -((w(a) - 1) // n)
    m_hi = (-w(b)) // n
    return range(m_lo, m_hi + 1)


@dataclass(frozen=True)
class AffinePath:
    """A chain in the multigraph: start vertex plus edges in order."""

    start: AffinePermutation
    edges: tuple[AffineEdge, ...]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(e.label for e in self.edges)

    @property
    def steps(self) -> tuple[tuple[int, int], ...]:
        return tuple((e.a, e.b) for e in self.edges)

    def end(self) -> AffinePermutation:
        return self.edges[-1].target if self.edges else self.start


def _backward_layers(u, w, budget, cap):
    """Vertex sets that can still reach w in exactly j steps, j = 0..budget."""
    layers = [{w}]
    total = 1
    for _ in range(budget):
        prev = layers[-1]
        nxt = set()
        for x in prev:
            nxt.update(_in_sources(x))
        total += len(nxt)
        if total > cap:
            raise CapExceeded(f"interval vertex cap {cap} exceeded")
        layers.append(nxt)
    return layers


def _interval_setup(u, w, restrict_grassmannian, cap):
    if u.k != w.k:
        raise BadPair(f"k mismatch: {u.k} vs {w.k}")
    if restrict_grassmannian:
        if not is_grassmannian(u):
            raise NotGrassmannian(f"{u.text()} is not 0-grassmannian")
        if not is_grassmannian(w):
            raise NotGrassmannian(f"{w.text()} is not 0-grassmannian")
    budget = length_affine(w) - length_affine(u)
    if budget < 0:
        return budget, None
    layers = _backward_layers(u, w, budget, cap)
    if u not in layers[budget]:
        return budget, None
    return budget, layers


def paths(u: AffinePermutation, w: AffinePermutation,
          cap: int = DEFAULT_CAP, threads: int = 1,
          restrict_grassmannian: bool = True) -> list[AffinePath]:
    """All paths from u to w, sorted lexicographically by step pairs.

    The search is pruned to vertices that can still reach w, computed by
    a backward sweep, so the cost is proportional to the interval and
    not to the full out-fan of the graph.
    """
    budget, layers = _interval_setup(u, w, restrict_grassmannian, cap)
    if layers is None:
        return []
    if budget == 0:
        return [AffinePath(u, ())]

    def dfs(x, depth, acc, sink):
        allowed = layers[budget - depth - 1]
        for e in out_edges(x):
            if e.target not in allowed:
                continue
            acc.append(e)
            if depth + 1 == budget:
                sink.append(tuple(acc))
                if len(sink) > cap:
                    raise CapExceeded(f"path cap {cap} exceeded")
            else:
                dfs(e.target, depth + 1, acc, sink)
            acc.pop()

    first = [e for e in out_edges(u) if e.target in layers[budget - 1]]
    if threads > 1 and len(first) > 1:
        def branch(edge):
            sink = []
            if budget == 1:
                return [(edge,)]
            dfs(edge.target, 1, [edge], sink)
            return sink
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(branch, first))
        found = [p for chunk in chunks for p in chunk]
        if len(found) > cap:
            raise CapExceeded(f"path cap {cap} exceeded")
    else:
        found = []
        dfs(u, 0, [], found)
    found.sort(key=lambda es: [(e.a, e.b) for e in es])
    return [AffinePath(u, es) for es in found]


def path_count(u: AffinePermutation, w: AffinePermutation,
               cap: int = DEFAULT_CAP,
               restrict_grassmannian: bool = True) -> int:
    """Number of paths from u to w, by layered counting without materializing."""
    budget, layers = _interval_setup(u, w, restrict_grassmannian, cap)
    if layers is None:
        return 0
    counts = {u: 1}
    for depth in range(budget):
        allowed = layers[budget - depth - 1]
        nxt: dict[AffinePermutation, int] = {}
        for x, c in counts.items():
            for e in out_edges(x):
                if e.target in allowed:
                    nxt[e.target] = nxt.get(e.target, 0) + c
        counts = nxt
    return counts.get(w, 0)


def k_function_affine(u: AffinePermutation, w: AffinePermutation,
                      cap: int = DEFAULT_CAP, threads: int = 1,
                      method: str = "paths") -> qsym.QuasiSymFn:
    """The interval's quasisymmetric chain function, in the F basis.

    method="paths" sums F over the descent compositions of the label
    sequences.  method="dp" counts, for every composition, the chains
    that split into strictly increasing label runs of those sizes; that
    gives the same function through the monomial basis but never
    materializes paths.
    """
    if method == "dp":
        return qsym.m_to_f(_k_function_dp(u, w, cap))
    if method != "paths":
        raise ValueError(f"unknown method {method!r}")
    terms: dict[tuple[int, ...], int] = {}
    for p in paths(u, w, cap=cap, threads=threads):
        d = combinat.descent_composition(p.labels) if p.edges else ()
        terms[d] = terms.get(d, 0) + 1
    return qsym.QuasiSymFn(qsym.F, terms)


def _k_function_dp(u, w, cap):
    budget, layers = _interval_setup(u, w, True, cap)
    if layers is None or budget == 0:
        terms = {(): 1} if layers is not None else {}
        return qsym.QuasiSymFn(qsym.M, terms)

    run_cache: dict = {}

    def run_targets(x, depth, m):
        """Endpoint counts of strictly increasing m-label runs from x at depth."""
        key = (x, depth, m)
        if key in run_cache:
            return run_cache[key]
        acc: dict[AffinePermutation, int] = {}

        def go(y, d, last, left):
            if left == 0:
                acc[y] = acc.get(y, 0) + 1
                return
            allowed = layers[budget - d - 1]
            for e in out_edges(y):
                if e.target in allowed and (last is None or e.label > last):
                    go(e.target, d + 1, e.label, left - 1)

        go(x, depth, None, m)
        run_cache[key] = acc
        return acc

    terms: dict[tuple[int, ...], int] = {}
    for alpha in combinat.compositions_of(budget):
        state = {u: 1}
        depth = 0
        for part in alpha:
            nxt: dict[AffinePermutation, int] = {}
            for x, c in state.items():
                for y, ways in run_targets(x, depth, part).items():
                    nxt[y] = nxt.get(y, 0) + c * ways
            state = nxt
            depth += part
        if state.get(w):
            terms[alpha] = state[w]
    return qsym.QuasiSymFn(qsym.M, terms)


def dual_pieri(u: AffinePermutation, m: int) -> list[AffinePermutation]:
    """Endpoints (with multiplicity) of strictly increasing m-step paths from u."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if not is_grassmannian(u):
        raise NotGrassmannian(f"{u.text()} is not 0-grassmannian")
    out: list[AffinePermutation] = []

    def go(x, last, left):
        if left == 0:
            out.append(x)
            return
        for e in out_edges(x):
            if last is None or e.label > last:
                go(e.target, e.label, left - 1)

    go(u, None, m)
    out.sort(key=lambda x: x.window)
    return out


# ---------------------------------------------------------------------------
# Relation calculus
# ---------------------------------------------------------------------------

ZERO_RULES = frozenset({"B1", "B2", "F"})
EQUALITY_RULES = frozenset({"A", "C1", "D", "E1", "E2"})
X_RULES = ("X1", "X2", "X3", "X4", "X5", "X6")
ALL_RULES = ("A", "B1", "B2", "C1", "C2", "D", "E1", "E2", "F") + X_RULES


@dataclass
class VerificationReport:
    """Outcome of evaluating both sides of a relation at one point."""

    tag: str
    u: AffinePermutation
    letters: tuple
    lhs_word: tuple
    rhs_word: tuple | None
    lhs: AffinePermutation | None
    rhs: AffinePermutation | None
    holds: bool
    note: str = ""


def _res(n: int, x: int) -> int:
    return x % n


def _relation_words(tag: str, k: int, letters):
    """(lhs_word, rhs_word, u_condition) for a rule; validates the letters."""
    n = k + 1

    def bad(msg):
        raise PatternMismatch(f"{tag}: {msg} (letters {letters})")

    if tag == "A":
        (a, b), (c, d) = letters
        if len({_res(n, x) for x in (a, b, c, d)}) != 4:
            bad("residues must be distinct")
        return ((a, b), (c, d)), ((c, d), (a, b)), None
    if tag == "B1":
        (a, b), (c, d) = letters
        if not (a < c < b < d or (b == c and d - a > n)):
            bad("need a<c<b<d, or b=c with d-a>k+1")
        return ((a, b), (c, d)), ((c, d), (a, b)), None
    if tag == "B2":
        (a, b), (c, d) = letters
        if not ((_res(n, a) == _res(n, c) and b <= d)
                or (_res(n, b) == _res(n, d) and c <= a)):
            bad("need matching residues with the stated inequality")
        return ((a, b), (c, d)), None, None
    if tag == "C1":
        a, b, d = letters
        if d - a != n:
            bad("need d-a=k+1")
        return ((a, b), (b, d)), ((a, b), (b - n, a)), None
    if tag == "C2":
        a, b, d = letters
        if not (a < b < d and d - a < n):
            bad("need a<b<d with d-a<k+1")
        return ((a, b), (b, d)), ((b, d), (a, b)), None
    if tag == "D":
        a, b, c, d = letters
        if not (a < b < c < d and _res(n, b) == _res(n, c)
                and _res(n, d) == _res(n, a) and (b - a) + (d - c) == n):
            bad("need matched residues with gap sum k+1")
        return ((a, b), (c, d)), ((d - n, c), (b - n, a)), None
    if tag in ("E1", "E2"):
        a, b, c, d = letters
        if not a < b < c < d:
            bad("need a<b<c<d")
        if tag == "E1":
            return ((b, c), (c, d), (a, c)), ((b, d), (a, b), (b, c)), None
        return ((a, c), (c, d), (b, c)), ((b, c), (a, b), (b, d)), None
    if tag == "F":
        a, b, c = letters
        if not (a < b < c and c - a < n):
            bad("need a<b<c with c-a<k+1")
        return ((b, c), (a, b), (b, c)), ((a, b), (b, c), (a, b)), None

    # X rules share the two-pair shape with a gap sum r
    a, b, c, d = letters
    if not a < b < c < d:
        bad("need a<b<c<d")
    r = (b - a) + (d - c)
    lhs = ((a, b), (c, d))
    if tag in ("X1", "X2"):
        if not (r < n and _res(n, d) == _res(n, a)):
            bad("need r<k+1 and d = a mod k+1")
        if tag == "X1":
            return lhs, ((d, c + r), (b - r, a)), lambda u: u(c) <= 0 and u(d) <= 0
        return lhs, ((c, d), (b - r, b)), lambda u: u(d) > 0
    if tag in ("X3", "X4"):
        if not (r < n and _res(n, b) == _res(n, c)):
            bad("need r<k+1 and b = c mod k+1")
        if tag == "X3":
            return lhs, ((d - r, d), (a, b)), lambda u: u(a + r) <= 0
        return lhs, ((d - r, c), (b, a + r)), lambda u: u(b) > 0 and u(a + r) > 0
    if tag == "X5":
        if not (_res(n, b) == _res(n, d) and b - a > d - c):
            bad("need b = d mod k+1 and b-a > d-c")
        return lhs, ((c, d), (a, b + c - d)), lambda u: u(d - b + a) > 0
    if tag == "X6":
        if not (_res(n, b) == _res(n, d) and b - a < d - c):
            bad("need b = d mod k+1 and b-a < d-c")
        return lhs, ((c, d - b + a), (a, b)), lambda u: u(a) <= 0
    raise PatternMismatch(f"unknown relation tag {tag!r}")


def check_relation(tag: str, u: AffinePermutation, letters,
                   require_u_conditions: bool = True) -> VerificationReport:
    """Evaluate both sides of a relation at u and report the comparison.

    Zero rules hold when every word evaluates to zero; equality rules
    when both sides agree (zero included).  The X rules carry sign
    conditions on u; these are enforced as preconditions unless
    require_u_conditions is False, which is how counterexamples beyond
    their scope are exhibited.
    """
    lhs_word, rhs_word, u_cond = _relation_words(tag, u.k, letters)
    if u_cond is not None and require_u_conditions and not u_cond(u):
        raise PatternMismatch(f"{tag}: sign conditions on u fail at {u.text()}")
    lhs = apply_word(u, lhs_word)
    rhs = apply_word(u, rhs_word) if rhs_word is not None else None
    if tag in ZERO_RULES:
        holds = lhs is None and rhs is None
        note = "all words evaluate to zero" if holds else "nonzero word found"
    elif tag == "C2":
        holds = True
        note = f"lhs {'nonzero' if lhs is not None else 'zero'}, " \
               f"rhs {'nonzero' if rhs is not None else 'zero'}"
    else:
        holds = lhs == rhs
        note = "sides agree" if holds else "sides differ"
    return VerificationReport(tag, u, tuple(letters), lhs_word, rhs_word,
                              lhs, rhs, holds, note)


def rule_sampleable(tag: str, k: int) -> bool:
    """Whether the rule's letter pattern can be instantiated at this k."""
    if tag == "A":
        return k >= 3  # four distinct residues
    if tag in ("B1", "C2", "F") or tag in X_RULES:
        return k >= 2
    return k >= 1


def sample_letters(tag: str, k: int, rng):
    """Random letters fitting a rule's pattern, or None when k is too small."""
    n = k + 1
    if not rule_sampleable(tag, k):
        return None
    base = rng.randint(-n, n)
    if tag == "A":
        while True:
            a = rng.randint(-n, n)
            b = a + rng.randint(1, k)
            c = rng.randint(-n, n)
            d = c + rng.randint(1, k)
            if len({x % n for x in (a, b, c, d)}) == 4:
                return ((a, b), (c, d))
    if tag == "B1":
        a = base
        if rng.random() < 0.5:
            gab = rng.randint(2, k)
            b = a + gab
            c = rng.randint(a + 1, b - 1)
            d = c + rng.randint(b - c + 1, k)
            return ((a, b), (c, d))
        gab = rng.randint(2, k)
        b = a + gab
        gcd = rng.randint(n + 1 - gab, k)
        return ((a, b), (b, b + gcd))
    if tag == "B2":
        a = base
        b = a + rng.randint(1, k)
        if rng.random() < 0.5:
            c = a + rng.randint(0, 2) * n
            d = rng.randint(max(c + 1, b), c + k)
            return ((a, b), (c, d))
        d = b - rng.randint(0, 2) * n
        c = rng.randint(d - k, min(a, d - 1))
        return ((a, b), (c, d))
    if tag == "C1":
        a = base
        return (a, a + rng.randint(1, k), a + n)
    if tag == "C2":
        gab = rng.randint(1, k - 1)
        gbd = rng.randint(1, k - gab)
        return (base, base + gab, base + gab + gbd)
    if tag == "D":
        a = base
        gab = rng.randint(1, k)
        m = rng.randint(1, 2)
        b = a + gab
        return (a, b, b + m * n, a + (m + 1) * n)
    if tag in ("E1", "E2"):
        gab = rng.randint(1, k - 1)
        gbc = rng.randint(1, k - gab)
        gcd = rng.randint(1, k - gbc)
        a = base
        return (a, a + gab, a + gab + gbc, a + gab + gbc + gcd)
    if tag == "F":
        gab = rng.randint(1, k - 1)
        gbc = rng.randint(1, k - gab)
        return (base, base + gab, base + gab + gbc)
    if tag in ("X1", "X2"):
        gab = rng.randint(1, k - 1)
        gdc = rng.randint(1, k - gab)
        a = base
        d = a + rng.randint(1, 2) * n
        return (a, a + gab, d - gdc, d)
    if tag in ("X3", "X4"):
        gab = rng.randint(1, k - 1)
        gcd = rng.randint(1, k - gab)
        a = base
        b = a + gab
        c = b + rng.randint(1, 2) * n
        return (a, b, c, c + gcd)
    if tag == "X5":
        gab = rng.randint(2, k)
        gdc = rng.randint(1, gab - 1)
        a = base
        b = a + gab
        d = b + rng.randint(1, 2) * n
        return (a, b, d - gdc, d)
    if tag == "X6":
        gab = rng.randint(1, k - 1)
        gdc = rng.randint(gab + 1, k)
        a = base
        b = a + gab
        d = b + rng.randint(1, 2) * n
        return (a, b, d - gdc, d)
    raise PatternMismatch(f"unknown relation tag {tag!r}")


@dataclass
class SweepResult:
    """Aggregate of a randomized relation sweep."""

    tag: str
    k: int
    trials: int
    checked: int = 0
    nonzero: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _grassmannian_pool(k: int, rng, size: int, max_length: int) -> list:
    from .kschur import random_grassmannian

    return [random_grassmannian(k, rng.randint(0, max_length), rng)
            for _ in range(size)]


def sweep_relation(tag: str, k: int, trials: int, rng,
                   max_length: int = 9, pool_size: int = 400,
                   draw_budget: int | None = None) -> SweepResult:
    """Randomized soundness sweep of one rule at a fixed k.

    Letters fit the rule's pattern and u is drawn from a pool of random
    0-grassmannians.  Zero rules record every pattern-valid draw (the
    claim is that all words vanish).  Equality, C2 and X rules record
    only draws that exercise the statement (a nonzero side; for X rules
    the sign conditions must hold and the left side be nonzero), so
    `trials` counts real evaluations.  Sampling stops early when the
    draw budget runs out, which happens at k where the patterns are
    sparse; `checked` reports what was actually recorded.
    """
    result = SweepResult(tag, k, trials)
    if not rule_sampleable(tag, k):
        return result
    pool = _grassmannian_pool(k, rng, pool_size, max_length)
    want_nonzero = tag in EQUALITY_RULES or tag in X_RULES or tag == "C2"
    x_rule = tag in X_RULES
    budget = draw_budget if draw_budget is not None else 400 * trials
    draws = 0
    while result.checked < trials and draws < budget:
        draws += 1
        letters = sample_letters(tag, k, rng)
        u = rng.choice(pool)
        try:
            report = check_relation(tag, u, letters)
        except PatternMismatch:
            continue
        if x_rule and report.lhs is None:
            continue
        if want_nonzero and report.lhs is None and report.rhs is None:
            continue
        result.checked += 1
        if report.lhs is not None or report.rhs is not None:
            result.nonzero += 1
        if not report.holds:
            result.failures.append(report)
    return result


def find_x_counterexample(tag: str, k: int, rng, attempts: int = 20000,
                          max_length: int = 9) -> VerificationReport | None:
    """A witness that an X rule fails once its sign condition on u is dropped.

    The witness has the condition violated and the two sides unequal;
    depending on the rule this shows up as a nonzero left side with a
    differing right side, or as a vanishing left side while the right
    side survives.
    """
    if tag not in X_RULES:
        raise PatternMismatch(f"{tag} is not an X rule")
    if not rule_sampleable(tag, k):
        return None
    pool = _grassmannian_pool(k, rng, 400, max_length)
    for _ in range(attempts):
        letters = sample_letters(tag, k, rng)
        u = rng.choice(pool)
        try:
            _, _, u_cond = _relation_words(tag, k, letters)
            if u_cond(u):
                continue
            report = check_relation(tag, u, letters, require_u_conditions=False)
        except PatternMismatch:
            continue
        if not report.holds:
            return report
    return None
