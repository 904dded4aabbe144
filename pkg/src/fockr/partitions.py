"""Integer partitions as plain tuples.

A partition is a weakly decreasing tuple of positive integers; ``()`` is the
empty partition.  Two containment notions coexist and are deliberately kept
apart:

* multiset containment (``is_subpartition``, ``union``, ``setminus``) drives
  the Heisenberg operator algebra;
* Young-diagram containment (``contains``, ``proper_subdiagrams``) drives the
  Macdonald-side recursion.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial, prod

Partition = tuple

EMPTY: Partition = ()


def make(parts) -> Partition:
    """Validate and canonicalise ``parts`` (any iterable of positive ints)."""
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if p and p[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts!r}")
    return p


def weight(mu: Partition) -> int:
    return sum(mu)


def length(mu: Partition) -> int:
    return len(mu)


def multiplicities(mu: Partition) -> dict[int, int]:
    """Map r -> m_r(mu) for the parts present in mu."""
    return dict(Counter(mu))


def mult(mu: Partition, r: int) -> int:
    return mu.count(r)


def mfact(mu: Partition) -> int:
    """m(mu)! = prod_r m_r(mu)!"""
    return prod(factorial(m) for m in Counter(mu).values())


@lru_cache(maxsize=None)
def enumerate_partitions(w: int) -> tuple[Partition, ...]:
    """All partitions of ``w`` in reverse-lexicographic order, e.g. (2), (1, 1)."""
    if w < 0:
        raise ValueError("weight must be non-negative")

    def gen(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in gen(n - first, first):
                yield (first,) + rest

    return tuple(gen(w, w))


def partitions_up_to(w: int) -> list[Partition]:
    """Canonical global order: by weight, then reverse-lex."""
    return [p for n in range(w + 1) for p in enumerate_partitions(n)]


@lru_cache(maxsize=None)
def _rank(w: int) -> dict:
    return {p: i for i, p in enumerate(enumerate_partitions(w))}


def sort_key(mu: Partition) -> tuple[int, int]:
    w = sum(mu)
    return (w, _rank(w)[mu])


@lru_cache(maxsize=None)
def enumerate_pairs(w: int) -> tuple[tuple[Partition, Partition], ...]:
    """Pairs (alpha, beta) with |alpha| + |beta| = w.

    Ordered by |alpha| descending, then alpha and beta in reverse-lex order,
    so that weight one reads ((1), ()), ((), (1)).
    """
    out = []
    for wa in range(w, -1, -1):
        for a in enumerate_partitions(wa):
            for b in enumerate_partitions(w - wa):
                out.append((a, b))
    return tuple(out)


def pair_sort_key(pair) -> tuple:
    a, b = pair
    return (-sum(a), _rank(sum(a))[a], _rank(sum(b))[b])


# ---------------------------------------------------------------------------
# multiset semantics

def union(mu: Partition, nu: Partition) -> Partition:
    return tuple(sorted(mu + nu, reverse=True))


def is_subpartition(nu: Partition, mu: Partition) -> bool:
    """True when the parts of nu form a sub-multiset of the parts of mu."""
    cm = Counter(mu)
    return all(cm[r] >= k for r, k in Counter(nu).items())


def setminus(mu: Partition, nu: Partition) -> Partition:
    if not is_subpartition(nu, mu):
        raise ValueError(f"{nu} is not a subpartition of {mu}")
    c = Counter(mu)
    c.subtract(Counter(nu))
    return tuple(sorted(c.elements(), reverse=True))


def intersect(mu: Partition, nu: Partition) -> Partition:
    c = Counter(mu) & Counter(nu)
    return tuple(sorted(c.elements(), reverse=True))


def subpartitions(mu: Partition) -> list[Partition]:
    """All sub-multisets of mu (each distinct multiset once)."""
    items = sorted(Counter(mu).items(), reverse=True)
    out = []
    for ks in product(*(range(m + 1) for _, m in items)):
        out.append(tuple(r for (r, _), k in zip(items, ks) for _ in range(k)))
    return out


def multiset_ops(mu: Partition, nu: Partition, op: str):
    if op == "union":
        return union(mu, nu)
    if op == "setminus":
        return setminus(mu, nu)
    if op == "intersect":
        return intersect(mu, nu)
    if op == "subpartition?":
        return is_subpartition(nu, mu)
    raise ValueError(f"unknown multiset operation {op!r}")


def bracket(mu: Partition, nu: Partition) -> int:
    """Multiplicity-vector binomial m(mu)! / (m(mu minus nu)! m(nu)!), 0 unless nu is a subpartition."""
    if not is_subpartition(nu, mu):
        return 0
    return mfact(mu) // (mfact(setminus(mu, nu)) * mfact(nu))


# ---------------------------------------------------------------------------
# Young-diagram semantics

def contains(alpha: Partition, lam: Partition) -> bool:
    """True when the diagram of lam fits inside the diagram of alpha."""
    if len(lam) > len(alpha):
        return False
    return all(l <= a for l, a in zip(lam, alpha))


@lru_cache(maxsize=None)
def subdiagrams(alpha: Partition) -> tuple[Partition, ...]:
    """All lam inside alpha (including alpha and the empty partition), canonical order."""
    out = []

    def gen(i, bound, acc):
        if i == len(alpha):
            out.append(tuple(x for x in acc if x))
            return
        for x in range(min(alpha[i], bound), -1, -1):
            acc.append(x)
            gen(i + 1, x, acc)
            acc.pop()

    gen(0, alpha[0] if alpha else 0, [])
    return tuple(sorted(set(out), key=sort_key))


def proper_subdiagrams(alpha: Partition) -> tuple[Partition, ...]:
    w = sum(alpha)
    return tuple(lam for lam in subdiagrams(alpha) if sum(lam) < w)


def diagram_ops(alpha: Partition, lam: Partition, op: str):
    if op == "contains?":
        return contains(alpha, lam)
    if op == "proper_subdiagrams":
        return list(proper_subdiagrams(alpha))
    raise ValueError(f"unknown diagram operation {op!r}")


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (same weight assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def to_json(mu: Partition) -> list:
    return list(mu)


def from_json(obj) -> Partition:
    return make(obj)
