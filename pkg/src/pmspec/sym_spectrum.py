"""Eigenvalues of the permutation derangement graph on S_n, the baseline
family the matching-graph results parallel.

Two published recurrences are implemented with separate caches and must agree:
``xi_by_first_part`` carries the coefficient (mu_1 + r - 1) and recurses on
the first-column strip, ``xi_by_last_part`` carries the coefficient mu_r and
recurses by dropping the last part.  A common transcription of the second one
subtracts 1 from every part of the dropped-tail term as well; that variant is
kept as a diagnostic because it already disagrees at (1,1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import derangement_count, irrep_dimension
from .partitions import Partition, enumerate_partitions
from .tables import SpectrumTable


@dataclass(frozen=True)
class XiValue:
    partition: Partition
    xi: int


@lru_cache(maxsize=None)
def xi_by_first_part(mu: Partition) -> int:
    """xi by the recurrence with coefficient (mu_1 + r - 1).

    Bases: xi(()) = 1 and xi((n)) = D_n, the derangement number.
    """
    mu = Partition(mu)
    if not mu:
        return 1
    if len(mu) == 1:
        return derangement_count(mu[0])
    r = len(mu)
    return (-1) ** (r - 1) * (mu[0] + r - 1) * xi_by_first_part(
        mu.subtract_all(1)
    ) + (-1) ** (mu[0] + r - 1) * xi_by_first_part(Partition(p - 1 for p in mu[1:]))


@lru_cache(maxsize=None)
def xi_by_last_part(mu: Partition) -> int:
    """xi by the recurrence with coefficient mu_r; must equal xi_by_first_part.

    xi(mu) = (-1)^(r-1) mu_r xi(mu - 1 everywhere) + (-1)^(mu_r) xi(mu minus
    its last part).
    """
    mu = Partition(mu)
    if not mu:
        return 1
    if len(mu) == 1:
        return derangement_count(mu[0])
    r = len(mu)
    return (-1) ** (r - 1) * mu[-1] * xi_by_last_part(mu.subtract_all(1)) + (
        -1
    ) ** mu[-1] * xi_by_last_part(mu.remove_last_part())


def xi_by_last_part_printed_variant(mu: Partition) -> int:
    """One step of the commonly mis-transcribed form of the last-part recurrence.

    The dropped-tail term additionally subtracts 1 from every remaining part.
    Diagnostic only: at mu = (1,1) this gives -2 while both agreed recurrences
    give -1.  Sub-values are taken from the agreed recurrence.
    """
    mu = Partition(mu)
    if len(mu) < 2:
        raise ValueError("variant applies only to partitions with >= 2 parts")
    r = len(mu)
    return (-1) ** (r - 1) * mu[-1] * xi_by_first_part(mu.subtract_all(1)) + (
        -1
    ) ** mu[-1] * xi_by_first_part(mu.remove_last_part().subtract_all(1))


def xi(mu: Partition) -> XiValue:
    mu = Partition(mu)
    return XiValue(partition=mu, xi=xi_by_first_part(mu))


def sym_spectrum_table(n: int) -> SpectrumTable:
    """Eigenvalue table of the derangement graph on S_n.

    The row indexed by mu has multiplicity dim(mu)^2; multiplicities total n!.
    """
    if n < 1:
        raise ValueError("n must be positive")
    rows = {}
    for mu in enumerate_partitions(n):
        rows[mu] = (xi_by_first_part(mu), irrep_dimension(mu) ** 2)
    return SpectrumTable(family="sym", n=n, rows=rows)
