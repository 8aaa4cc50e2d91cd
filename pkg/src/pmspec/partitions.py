"""Integer partitions with the surgery operations used by the eigenvalue
recurrences: part removal, uniform subtraction, single-box raising/lowering,
box transfers, dominance (majorization) order, and chain construction.

Conventions: a partition is a non-increasing tuple of positive integers; the
empty tuple is the unique partition of 0.  All part indices in the public
interface are 1-based, matching the usual mu_1 >= mu_2 >= ... notation.
"""

from __future__ import annotations

import enum
from typing import Iterable, Iterator, NamedTuple, Sequence


class Partition(tuple):
    """Canonical partition: non-increasing positive parts, no trailing zeros.

    Construction normalizes by stripping trailing zeros; an all-zero input
    yields the empty partition.  Negative entries or increasing sequences
    are rejected.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        data = tuple(int(p) for p in parts)
        if any(p < 0 for p in data):
            raise ValueError(f"negative part in {data!r}")
        if any(a < b for a, b in zip(data, data[1:])):
            raise ValueError(f"parts not non-increasing: {data!r}")
        while data and data[-1] == 0:
            data = data[:-1]
        return super().__new__(cls, data)

    # -- basic attributes -------------------------------------------------

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)!r}"

    # -- text format ------------------------------------------------------

    def to_text(self) -> str:
        """Render as '+'-joined parts; the empty partition renders as '0'."""
        return "+".join(str(p) for p in self) if self else "0"

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Parse the '+'-joined format; '0' denotes the empty partition."""
        text = text.strip()
        if text == "0":
            return cls()
        try:
            parts = [int(tok) for tok in text.split("+")]
        except ValueError as exc:
            raise ValueError(f"cannot parse partition {text!r}") from exc
        if any(p <= 0 for p in parts):
            raise ValueError(f"cannot parse partition {text!r}")
        return cls(parts)

    # -- surgery ----------------------------------------------------------

    def remove_last_part(self) -> "Partition":
        """Drop the last part."""
        if not self:
            raise ValueError("empty partition has no last part")
        return Partition(self[:-1])

    def subtract_all(self, k: int) -> "Partition":
        """Subtract k from every part (1 <= k <= last part), normalizing."""
        if not self:
            raise ValueError("cannot subtract from the empty partition")
        if not 1 <= k <= self[-1]:
            raise ValueError(f"k={k} out of range [1, {self[-1]}] for {self!r}")
        return Partition(p - k for p in self)

    def raise_part(self, i: int) -> "Partition":
        """Increment part i (1-based); requires 2 <= i <= length and a strict
        descent before i so the result stays non-increasing."""
        if not 2 <= i <= len(self):
            raise ValueError(f"raise index {i} out of range for {self!r}")
        if self[i - 2] <= self[i - 1]:
            raise ValueError(f"cannot raise part {i} of {self!r}: no descent at {i - 1}")
        return Partition(self[: i - 1] + (self[i - 1] + 1,) + self[i:])

    def lower_part(self, i: int) -> "Partition":
        """Decrement part i (1-based); requires i = length or a strict descent
        after i.  A part lowered to zero is stripped."""
        if not 2 <= i <= len(self):
            raise ValueError(f"lower index {i} out of range for {self!r}")
        if i < len(self) and self[i - 1] <= self[i]:
            raise ValueError(f"cannot lower part {i} of {self!r}: no descent at {i}")
        return Partition(self[: i - 1] + (self[i - 1] - 1,) + self[i:])

    def transfer(self, move: "TransferMove") -> "Partition":
        """Move one box down the index axis: raise part i, lower part j (i < j).

        The result has the same size, never a greater length, and strictly
        dominates the input.
        """
        i, j = move
        if not 2 <= i < j <= len(self):
            raise ValueError(f"transfer ({i},{j}) out of range for {self!r}")
        if self[i - 2] <= self[i - 1]:
            raise ValueError(f"transfer ({i},{j}) invalid on {self!r}: no descent at {i - 1}")
        if j < len(self) and self[j - 1] <= self[j]:
            raise ValueError(f"transfer ({i},{j}) invalid on {self!r}: no descent at {j}")
        return self.raise_part(i).lower_part(j)


class TransferMove(NamedTuple):
    """A single box transfer: raise at index i, lower at index j, 2 <= i < j."""

    i: int
    j: int


class Dominance(enum.Enum):
    LESS = "less"
    EQUAL = "equal"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def normalize(raw: Sequence[int]) -> Partition:
    """Canonicalize a raw non-increasing sequence (trailing zeros allowed)."""
    return Partition(raw)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in decreasing lexicographic order, (n) first."""
    if n < 0:
        raise ValueError("n must be nonnegative")

    def gen(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(parts) for parts in gen(n, n if n else 1)]


def dominance_compare(mu: Partition, nu: Partition) -> Dominance:
    """Compare two partitions of the same size in dominance order."""
    if mu.size != nu.size:
        raise ValueError(f"size mismatch: |{mu!r}| != |{nu!r}|")
    le = ge = True
    acc_mu = acc_nu = 0
    for k in range(max(len(mu), len(nu))):
        acc_mu += mu[k] if k < len(mu) else 0
        acc_nu += nu[k] if k < len(nu) else 0
        if acc_mu > acc_nu:
            le = False
        if acc_mu < acc_nu:
            ge = False
    if le and ge:
        return Dominance.EQUAL
    if le:
        return Dominance.LESS
    if ge:
        return Dominance.GREATER
    return Dominance.INCOMPARABLE


def dominated_by(mu: Partition, nu: Partition) -> bool:
    """True iff mu is dominated by nu (weakly)."""
    return dominance_compare(mu, nu) in (Dominance.LESS, Dominance.EQUAL)


def valid_transfers(mu: Partition) -> list[TransferMove]:
    """All transfer moves admissible on mu."""
    moves = []
    r = len(mu)
    for i in range(2, r + 1):
        if mu[i - 2] <= mu[i - 1]:
            continue
        for j in range(i + 1, r + 1):
            if j < r and mu[j - 1] <= mu[j]:
                continue
            moves.append(TransferMove(i, j))
    return moves


def dominance_chain(lam: Partition, target: Partition) -> list[TransferMove]:
    """A sequence of transfer moves taking lam to target.

    Both partitions must have the same size and the same first part, with
    lam dominated by target.  Every intermediate partition keeps the common
    first part (moves never touch index 1) and stays dominated by target.
    Tie-breaking is deterministic: smallest raise index i, then smallest
    lower index j, among moves that do not overshoot the target.
    """
    if lam.size != target.size:
        raise ValueError("size mismatch")
    if (lam[:1] or (0,)) != (target[:1] or (0,)):
        raise ValueError(f"first parts differ: {lam!r} vs {target!r}")
    cmp = dominance_compare(lam, target)
    if cmp is Dominance.EQUAL:
        return []
    if cmp is not Dominance.LESS:
        raise ValueError(f"{lam!r} is not dominated by {target!r}")

    moves: list[TransferMove] = []
    cur = lam
    while cur != target:
        for move in valid_transfers(cur):
            nxt = cur.transfer(move)
            if dominated_by(nxt, target):
                moves.append(move)
                cur = nxt
                break
        else:  # pragma: no cover - would indicate a broken move generator
            raise RuntimeError(f"no admissible move from {cur!r} toward {target!r}")
    return moves


def has_first_part_three_rest_small(mu: Partition) -> bool:
    """True iff the first part is 3 and every later part is at most 2.

    These partitions form the exact equality class of the absolute-value
    comparison: raising a box inside this family leaves the normalized
    eigenvalue unchanged.
    """
    return bool(mu) and mu[0] == 3 and all(p <= 2 for p in mu[1:])
