"""Integer quasisymmetric functions (M and F bases) and symmetric functions.

Coefficients are Python ints, so enumeration counts never overflow.
Equality of quasisymmetric functions compares M-basis normal forms, so a
function is equal to itself regardless of the basis it is held in.
"""

from . import combinat
from .combinat import Composition, Partition
from .errors import NotSymmetric

M = "M"
F = "F"


def _clean(terms: dict) -> dict:
    return {idx: c for idx, c in terms.items() if c != 0}


class QuasiSymFn:
    """A finitely supported integer combination of M- or F-basis elements."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[Composition, int] | None = None):
        if basis not in (M, F):
            raise ValueError(f"unknown quasisymmetric basis {basis!r}")
        self.basis = basis
        self.terms = _clean({combinat.as_composition(i) if i else (): int(c)
                             for i, c in (terms or {}).items()})

    @classmethod
    def unit(cls, basis: str = F) -> "QuasiSymFn":
        return cls(basis, {(): 1})

    @classmethod
    def zero(cls, basis: str = F) -> "QuasiSymFn":
        return cls(basis, {})

    def coeff(self, index) -> int:
        return self.terms.get(tuple(index), 0)

    def degrees(self) -> set[int]:
        return {sum(i) for i in self.terms}

    def __add__(self, other: "QuasiSymFn") -> "QuasiSymFn":
        if self.basis != other.basis:
            raise ValueError("cannot add functions held in different bases")
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, 0) + c
        return QuasiSymFn(self.basis, out)

    def __sub__(self, other: "QuasiSymFn") -> "QuasiSymFn":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "QuasiSymFn":
        return QuasiSymFn(self.basis, {i: scalar * c for i, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuasiSymFn):
            return NotImplemented
        return to_m(self).terms == to_m(other).terms

    def __hash__(self):
        return hash((QuasiSymFn, frozenset(to_m(self).terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*{self.basis}{list(i)}"
                          for i, c in sorted(self.terms.items(), reverse=True))
        return body or "0"

    def dominates(self, other: "QuasiSymFn") -> bool:
        """Coefficientwise >= comparison, taken in this function's basis."""
        other = to_m(other) if self.basis == M else to_f(other)
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(i, 0) >= other.terms.get(i, 0) for i in keys)

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"index": list(i), "coeff": c}
                      for i, c in sorted(self.terms.items(), reverse=True)],
        }


class SymFn:
    """A finitely supported integer combination in the m, h or s basis."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: dict[Partition, int] | None = None):
        if basis not in ("m", "h", "s"):
            raise ValueError(f"unknown symmetric basis {basis!r}")
        self.basis = basis
        self.terms = _clean({combinat.as_partition(i) if i else (): int(c)
                             for i, c in (terms or {}).items()})

    def coeff(self, index) -> int:
        return self.terms.get(tuple(index), 0)

    def __add__(self, other: "SymFn") -> "SymFn":
        if self.basis != other.basis:
            raise ValueError("cannot add functions held in different bases")
        out = dict(self.terms)
        for i, c in other.terms.items():
            out[i] = out.get(i, 0) + c
        return SymFn(self.basis, out)

    def __sub__(self, other: "SymFn") -> "SymFn":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "SymFn":
        return SymFn(self.basis, {i: scalar * c for i, c in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFn):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((SymFn, self.basis, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*{self.basis}{list(i)}"
                          for i, c in sorted(self.terms.items(), reverse=True))
        return body or "0"

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "terms": [{"index": list(i), "coeff": c}
                      for i, c in sorted(self.terms.items(), reverse=True)],
        }


def m_to_f(q: QuasiSymFn) -> QuasiSymFn:
    """Re-express an M-basis function in the F basis.

    Uses M_alpha = sum over compositions beta refining alpha of
    (-1)^(len(beta) - len(alpha)) F_beta, the inclusion-exclusion inverse
    of the refinement-sum rule implemented by :func:`f_to_m`.
    """
    if q.basis != M:
        raise ValueError("m_to_f expects an M-basis function")
    out: dict[Composition, int] = {}
    for alpha, c in q.terms.items():
        for beta in combinat.refinements(alpha):
            sign = -1 if (len(beta) - len(alpha)) % 2 else 1
            out[beta] = out.get(beta, 0) + sign * c
    return QuasiSymFn(F, out)


def f_to_m(q: QuasiSymFn) -> QuasiSymFn:
    """Re-express an F-basis function in the M basis: F_beta = sum of M over refinements."""
    if q.basis != F:
        raise ValueError("f_to_m expects an F-basis function")
    out: dict[Composition, int] = {}
    for beta, c in q.terms.items():
        for alpha in combinat.refinements(beta):
            out[alpha] = out.get(alpha, 0) + c
    return QuasiSymFn(M, out)


def to_m(q: QuasiSymFn) -> QuasiSymFn:
    return q if q.basis == M else f_to_m(q)


def to_f(q: QuasiSymFn) -> QuasiSymFn:
    return q if q.basis == F else m_to_f(q)


def is_symmetric(q: QuasiSymFn) -> bool:
    """True iff M-coefficients are constant on compositions with equal part multisets."""
    mq = to_m(q)
    seen: dict[Partition, int] = {}
    for alpha, c in mq.terms.items():
        lam = tuple(sorted(alpha, reverse=True))
        if seen.setdefault(lam, c) != c:
            return False
    for lam, c in seen.items():
        for alpha in combinat.distinct_rearrangements(lam):
            if mq.terms.get(alpha, 0) != c:
                return False
    return True


def schur_expand(q: QuasiSymFn) -> SymFn:
    """Expand a symmetric quasisymmetric function in Schur functions.

    Solves the unitriangular system c_mu = sum_lam d_lam * K(lam, mu)
    degree by degree, walking partitions in decreasing lex order (a
    linear extension of dominance, which carries the Kostka
    triangularity).  Coefficients may be negative.
    """
    if not is_symmetric(q):
        raise NotSymmetric("input has no Schur expansion")
    mq = to_m(q)
    out: dict[Partition, int] = {}
    for n in sorted(mq.degrees()):
        if n == 0:
            out[()] = mq.terms.get((), 0)
            continue
        solved: dict[Partition, int] = {}
        for mu in combinat.partitions_of(n):
            c = mq.terms.get(mu, 0)
            for lam, d in solved.items():
                c -= d * combinat.kostka(lam, mu)
            if c:
                solved[mu] = c
        out.update(solved)
    return SymFn("s", out)


def h_expand_to_schur(lam: Partition) -> SymFn:
    """Schur expansion of the complete homogeneous product indexed by lam."""
    lam = combinat.as_partition(lam)
    n = sum(lam)
    terms = {}
    for mu in combinat.partitions_of(n):
        k = combinat.kostka(mu, lam)
        if k:
            terms[mu] = k
    return SymFn("s", terms)


def schur_to_m(f: SymFn) -> QuasiSymFn:
    """Expand an s-basis function into the monomial quasisymmetric basis."""
    if f.basis != "s":
        raise ValueError("schur_to_m expects an s-basis function")
    out: dict[Composition, int] = {}
    for lam, d in f.terms.items():
        if not lam:
            out[()] = out.get((), 0) + d
            continue
        for mu in combinat.partitions_of(sum(lam)):
            k = combinat.kostka(lam, mu)
            if not k:
                continue
            for alpha in combinat.distinct_rearrangements(mu):
                out[alpha] = out.get(alpha, 0) + d * k
    return QuasiSymFn(M, out)
