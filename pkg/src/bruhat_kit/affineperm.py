"""Affine permutations in window notation and the core bijection.

An affine permutation for a given k is a bijection of the integers with
u(i + k+1) = u(i) + k+1, stored by its main window (u(1), ..., u(k+1)).
The window entries are pairwise distinct modulo k+1 and sum to the fixed
value (k+2 choose 2).  An entry of 0 counts as nonpositive everywhere.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import combinat
from .combinat import Partition
from .errors import KMismatch, NotACore, NotGrassmannian


class AffinePermutation:
    """An element of the affine symmetric group, given by k and a main window."""

    __slots__ = ("k", "window", "_slot")

    def __init__(self, window, k: int | None = None):
        window = tuple(int(x) for x in window)
        if k is None:
            k = len(window) - 1
        if len(window) != k + 1 or k < 1:
            raise ValueError(f"window must have length k+1: {window}")
        n = k + 1
        residues = [w % n for w in window]
        if len(set(residues)) != n:
            raise ValueError(f"window entries must be distinct mod {n}: {window}")
        if sum(window) != n * (n + 1) // 2:
            raise ValueError(
                f"window sum must be {n * (n + 1) // 2}, got {sum(window)}: {window}")
        self.k = k
        self.window = window
        # residue of value -> window slot (1-based), for O(1) value lookups
        self._slot = {res: j + 1 for j, res in enumerate(residues)}

    @classmethod
    def identity(cls, k: int) -> "AffinePermutation":
        return cls(range(1, k + 2), k)

    @classmethod
    def generator(cls, k: int, i: int) -> "AffinePermutation":
        """The simple reflection s_i, 0 <= i <= k."""
        if not 0 <= i <= k:
            raise ValueError(f"generator index out of range: {i}")
        w = list(range(1, k + 2))
        if i == 0:
            w[0] = 0
            w[k] = k + 2
        else:
            w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w, k)

    def __call__(self, i: int) -> int:
        n = self.k + 1
        j = (i - 1) % n + 1
        return self.window[j - 1] + (i - j)

    def position(self, value: int) -> int:
        """The unique position p with u(p) = value."""
        n = self.k + 1
        j = self._slot[value % n]
        return j + (value - self.window[j - 1])

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        if self.k != other.k:
            raise KMismatch(f"k mismatch: {self.k} vs {other.k}")
        return AffinePermutation(
            (self(other(i)) for i in range(1, self.k + 2)), self.k)

    def right_multiply_s(self, i: int) -> "AffinePermutation":
        """u * s_i without building the generator (swap positions i, i+1 mod k+1)."""
        n = self.k + 1
        w = list(self.window)
        j = (i - 1) % n + 1       # window slot of position i
        j2 = i % n + 1            # window slot of position i+1
        off = (i - j)             # multiple of n
        off2 = (i + 1 - j2)
        w[j - 1], w[j2 - 1] = self(i + 1) - off, self(i) - off2
        return AffinePermutation(w, self.k)

    def __eq__(self, other):
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        return self.k == other.k and self.window == other.window

    def __hash__(self):
        return hash((self.k, self.window))

    def __repr__(self):
        return f"AffinePermutation({list(self.window)})"

    def text(self) -> str:
        return "[" + ",".join(str(x) for x in self.window) + "]"


def parse_window(text: str, k: int | None = None) -> AffinePermutation:
    """Parse "[-6,8,3,-1,4,13]" or a bare comma/space separated list."""
    body = text.strip().lstrip("[").rstrip("]")
    parts = [p for p in body.replace(",", " ").split() if p]
    return AffinePermutation((int(p) for p in parts), k)


def window_eval(window, i: int) -> int:
    """Periodic evaluation of a raw window that need not be normalized.

    Useful for intermediate windows whose sum invariant only holds after
    a shift of positions.
    """
    n = len(window)
    j = (i - 1) % n + 1
    return window[j - 1] + (i - j)


def multiply(u: AffinePermutation, v: AffinePermutation) -> AffinePermutation:
    return u * v


def length_affine(u: AffinePermutation) -> int:
    """Affine inversion count: pairs i <= k+1 < ... with i < j and u(i) > u(j)."""
    n = u.k + 1
    total = 0
    for i in range(1, n + 1):
        ui = u.window[i - 1]
        for j0 in range(1, n + 1):
            if j0 == i:
                continue
            diff = ui - u.window[j0 - 1]
            m_min = 1 if i > j0 else 0
            m_max = diff // n  # diff is never a multiple of n
            if m_max >= m_min:
                total += m_max - m_min + 1
    return total


@lru_cache(maxsize=1 << 16)
def is_grassmannian(u: AffinePermutation) -> bool:
    """True iff the values 1, ..., k+1 appear at increasing positions."""
    pos = [u.position(v) for v in range(1, u.k + 2)]
    return all(pos[i] < pos[i + 1] for i in range(len(pos) - 1))


@dataclass(frozen=True)
class CorePartition:
    """A partition with no hook of length equal to the modulus."""

    partition: Partition
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "partition", combinat.as_partition(self.partition))
        if self.modulus < 2:
            raise ValueError("modulus must be at least 2")
        if _has_hook(self.partition, self.modulus):
            raise NotACore(
                f"{self.partition} has a hook of length {self.modulus}")

    def text(self) -> str:
        return ",".join(str(x) for x in self.partition) if self.partition else "()"


def _has_hook(lam: Partition, h: int) -> bool:
    conj = combinat.conjugate(lam)
    for r in range(len(lam)):
        for c in range(lam[r]):
            if lam[r] - (c + 1) + conj[c] - (r + 1) + 1 == h:
                return True
    return False


def _sign_bounds(u: AffinePermutation) -> tuple[int, int]:
    """(first position with a positive entry, last position with entry <= 0)."""
    n = u.k + 1
    first_pos = None
    last_np = None
    for j0 in range(1, n + 1):
        w = u.window[j0 - 1]
        # smallest m with w + m*n >= 1
        m = -((w - 1) // n)
        p = j0 + m * n
        first_pos = p if first_pos is None else min(first_pos, p)
        # largest m with w + m*n <= 0
        m = (-w) // n
        p = j0 + m * n
        last_np = p if last_np is None else max(last_np, p)
    return first_pos, last_np


@lru_cache(maxsize=1 << 16)
def to_core(u: AffinePermutation) -> CorePartition:
    """Read the (k+1)-core off the window's sign sequence.

    Walking positions left to right, an entry <= 0 is a vertical step of
    the core's boundary path and a positive entry a horizontal step.
    The row cut off by a vertical step has as many cells as there are
    positive entries before it, which anchors the path without any
    absolute index convention.
    """
    if not is_grassmannian(u):
        raise NotGrassmannian(f"{u.text()} is not 0-grassmannian")
    first_pos, last_np = _sign_bounds(u)
    rows = []
    positives = 0
    for p in range(first_pos, last_np + 1):
        if u(p) > 0:
            positives += 1
        elif positives:
            rows.append(positives)
    return CorePartition(tuple(sorted(rows, reverse=True)), u.k + 1)


def from_core(core: CorePartition, k: int) -> AffinePermutation:
    """The 0-grassmannian whose boundary path draws the given (k+1)-core.

    Rebuilds the sign sequence from the partition, pins the values by
    the rule that the last nonpositive entry of each residue class must
    carry 0, -1, ..., -k in increasing position order (forced by
    grassmannianity), then shifts the window to restore the sum
    invariant.
    """
    if core.modulus != k + 1:
        raise NotACore(f"core modulus {core.modulus} does not match k+1={k + 1}")
    n = k + 1
    lam = core.partition
    # mixed segment of the boundary path, anchored arbitrarily at position 1
    signs = []
    prev = 0
    for row in reversed(lam):
        signs.extend([True] * (row - prev))  # True = positive entry
        signs.append(False)
        prev = row
    seg_len = len(signs)

    def sign_at(p: int) -> bool:
        if p < 1:
            return False
        if p > seg_len:
            return True
        return signs[p - 1]

    # last nonpositive position in each residue class
    last_np = []
    for c in range(n):
        p = seg_len
        while p % n != c:
            p -= 1
        while sign_at(p):
            p -= n
        last_np.append(p)
    last_np.sort()
    window = [None] * n
    for val, p in zip(range(-k, 1), last_np):
        j = (p - 1) % n + 1
        window[j - 1] = val + (j - p)
    target = n * (n + 1) // 2
    s, rem = divmod(target - sum(window), n)
    if rem:
        raise NotACore(f"window sum defect not a multiple of {n} for {lam}")
    u = AffinePermutation((window_eval(window, i + s) for i in range(1, n + 1)), k)
    if not is_grassmannian(u):
        raise NotACore(f"reconstruction from {lam} is not grassmannian")
    return u


def kbounded_from_core(core: CorePartition) -> Partition:
    """Delete the cells of hook length > k and left-justify the rows."""
    lam = core.partition
    k = core.modulus - 1
    conj = combinat.conjugate(lam)
    rows = []
    for r in range(len(lam)):
        kept = sum(1 for c in range(lam[r])
                   if lam[r] - (c + 1) + conj[c] - (r + 1) + 1 <= k)
        rows.append(kept)
    return combinat.as_partition(rows)
