"""Integer partitions in multiplicity form and their Faa di Bruno weights.

A partition of ``m`` is stored as the multiplicity vector ``(i_1, ..., i_m)``
where ``i_k`` counts the parts equal to ``k``; it satisfies

    i_1 + 2 i_2 + ... + m i_m = m        (weighted sum)
    i_1 + i_2 + ... + i_m     = M        (number of parts)

The chain rule for the m-th derivative of a composite function sums over all
such vectors with weight ``1 / prod_k (i_k! (k!)^i_k)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import DomainError, ResourceLimitError

MAX_ORDER = 64


@dataclass(frozen=True)
class PartitionVector:
    multiplicities: tuple[int, ...]

    def __post_init__(self):
        if any(i < 0 for i in self.multiplicities):
            raise DomainError("multiplicities must be non-negative")

    @property
    def m(self) -> int:
        return sum(k * i for k, i in enumerate(self.multiplicities, start=1))

    @property
    def M(self) -> int:
        return sum(self.multiplicities)

    def parts(self) -> list[int]:
        """The partition as a non-increasing list of parts."""
        out = []
        for k in range(len(self.multiplicities), 0, -1):
            out.extend([k] * self.multiplicities[k - 1])
        return out


def _check_order(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DomainError(f"partition order must be a non-negative integer, got {m!r}")
    if m > MAX_ORDER:
        raise ResourceLimitError(f"partition order {m} exceeds the guard {MAX_ORDER}")


def _parts_desc(m: int, largest: int):
    # Partitions of m into parts <= largest, parts in non-increasing order.
    if m == 0:
        yield ()
        return
    for k in range(min(m, largest), 0, -1):
        for rest in _parts_desc(m - k, k):
            yield (k,) + rest


@lru_cache(maxsize=None)
def _enumerate(m: int) -> tuple[PartitionVector, ...]:
    vectors = []
    for parts in _parts_desc(m, m):
        mult = [0] * m
        for k in parts:
            mult[k - 1] += 1
        vectors.append(tuple(mult))
    # decreasing number of parts, then reverse-lexicographic on multiplicities
    vectors.sort(key=lambda v: (sum(v), v), reverse=True)
    return tuple(PartitionVector(v) for v in vectors)


def enumerate_partitions(m: int) -> tuple[PartitionVector, ...]:
    """All solutions of the weighted-sum/part-count equations for ``m``.

    Ordered by decreasing number of parts ``M``, ties broken by reverse
    lexicographic order on the multiplicity vector. ``m = 0`` yields the single
    empty partition.
    """
    _check_order(m)
    return _enumerate(m)


def partition_count(m: int) -> int:
    return len(enumerate_partitions(m))


def faa_weight(p: PartitionVector) -> Fraction:
    """Exact ``1 / prod_k (i_k! (k!)^i_k)``."""
    den = 1
    for k, i in enumerate(p.multiplicities, start=1):
        den *= factorial(i) * factorial(k) ** i
    return Fraction(1, den)


@lru_cache(maxsize=None)
def _weights_by_parts(m: int) -> tuple[Fraction, ...]:
    # Knapsack over part sizes: table[s][M] accumulates m! * weight over the
    # partial partitions of s into M parts, all in integers. Same sum as
    # folding enumerate_partitions, without materialising p(m) vectors.
    f = factorial(m)
    table = [[0] * (m + 1) for _ in range(m + 1)]
    table[0][0] = f
    for nu in range(1, m + 1):
        fnu = factorial(nu)
        new = [row[:] for row in table]
        for s in range(m + 1):
            for M in range(s + 1):
                c = table[s][M]
                if not c:
                    continue
                den = 1
                for i in range(1, (m - s) // nu + 1):
                    den *= i * fnu
                    new[s + i * nu][M + i] += c // den
        table = new
    return tuple(Fraction(c, f) for c in table[m])


def weights_by_parts(m: int) -> tuple[Fraction, ...]:
    """Faa di Bruno weights summed over partitions with the same part count.

    Entry ``M`` holds the sum of ``faa_weight`` over every partition of ``m``
    with ``M`` parts. Every sum in this package depends on a partition only
    through ``M`` and its weight, so callers fold the enumeration once and then
    loop over ``M = 0..m``.
    """
    _check_order(m)
    return _weights_by_parts(m)


def set_partition_counts(m: int) -> tuple[int, ...]:
    """``m! * weights_by_parts(m)`` as integers (number of set partitions of each block count)."""
    f = factorial(m)
    out = []
    for w in weights_by_parts(m):
        v = w * f
        assert v.denominator == 1
        out.append(v.numerator)
    return tuple(out)
