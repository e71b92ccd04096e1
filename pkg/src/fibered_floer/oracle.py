"""
Slow, independent recomputations used to cross-check the main modules.

Nothing here calls the arithmetic or enumeration code of the main
pipeline; only the plain data containers (twist words, diagrams) are
shared.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Sequence

from .errors import EnumerationTooLarge

ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class OracleReport:
    quantity: str
    main_value: Any
    oracle_value: Any

    @property
    def agree(self) -> bool:
        return self.main_value == self.oracle_value


def _mul(a, b):
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def brute_trace(word, use_abs: bool = False) -> int:
    """Trace of the 2x2 product, one unit transvection at a time."""
    m = [[1, 0], [0, 1]]
    for tw in word.twists:
        p = abs(tw.power) if use_abs else tw.power
        step = 1 if p > 0 else -1
        for _ in range(abs(p)):
            if tw.curve.kind == "gamma":
                m = _mul(m, [[1, step], [0, 1]])
            elif tw.curve.kind == "delta":
                # a delta twist acts by (1 0; -1 1); |.| flips the sign
                m = _mul(m, [[1, 0], [step if use_abs else -step, 1]])
            else:
                raise ValueError("brute_trace handles gamma/delta words only")
    return m[0][0] + m[1][1]


def brute_enumerate(d, k: int) -> dict[str, int]:
    """Pair counts at level ``k`` by walking the slot-wise product.

    Partial tuples that already hold more R/P points than level ``k``
    allows are abandoned early; every surviving full tuple is checked
    again before it is counted.
    """
    g = d.genus
    want = g - 1 - k
    sides = {
        "A": list(range(1, 2 * g - 1)) + [2 * g - 1],
        "B": list(range(1, 2 * g - 1)) + [2 * g],
    }
    found: dict[str, list[tuple]] = {}
    for side, slots in sides.items():
        size = 1
        for s in slots:
            size *= len(d.slots[s])
        if size > ENUMERATION_LIMIT:
            raise EnumerationTooLarge(f"{size} tuples on side {side}")
        out: list[tuple] = []

        def walk(pos: int, chosen: list, lifted: int) -> None:
            if lifted > want:
                return
            if pos == len(slots):
                if sum(1 for p in chosen if p.kind in ("R", "P")) == want:
                    out.append(tuple(chosen))
                return
            for p in d.slots[slots[pos]]:
                chosen.append(p)
                walk(pos + 1, chosen, lifted + (p.kind in ("R", "P")))
                chosen.pop()

        if want >= 0:
            walk(0, [], 0)
        found[side] = out

    def is_fake(t: tuple, slot: int) -> bool:
        last = t[-1]
        return last.kind == "R" and last.i == slot

    b_index: dict[tuple, tuple] = {}
    for t in found["B"]:
        b_index[(t[:-1], t[-1].kind)] = t
    total = fake = 0
    for t in found["A"]:
        partner = b_index.pop((t[:-1], t[-1].kind))
        total += 1
        fa, fb = is_fake(t, 2 * g - 1), is_fake(partner, 2 * g)
        if fa != fb:
            raise AssertionError("paired generators disagree on fakeness")
        fake += fa
    if b_index:
        raise AssertionError("unmatched B-side generators")
    return {"total": total, "fake": fake, "essential": total - fake}


def _full_matrix(block, g: int, other_blocks: Sequence = ()) -> list[list[int]]:
    n = 2 * g
    a = [[int(i == j) for j in range(n)] for i in range(n)]
    for h, blk in enumerate([block, *other_blocks]):
        for r in range(2):
            for c in range(2):
                a[2 * h + r][2 * h + c] = blk[r][c]
    return a


def series_coefficients(block, g: int, up_to: int, other_blocks: Sequence = ()) -> list[int]:
    """Coefficients 0..up_to of det(I - tA) / (1 - t)^2.

    A is the full 2g x 2g matrix with ``block`` on handle 1 (and
    ``other_blocks`` on handles 2, 3, ...). The determinant comes from
    Newton's identities on tr(A^i); the quotient from long division.
    """
    a = _full_matrix(block, g, other_blocks)
    n = len(a)
    power_sums = []
    ak = a
    for _ in range(n):
        power_sums.append(sum(ak[i][i] for i in range(n)))
        ak = _mul(ak, a)
    # det(I - tA) = sum c_k t^k, c_k = (-1)^k e_k
    c = [Fraction(1)]
    for k in range(1, n + 1):
        c.append(-sum(power_sums[i - 1] * c[k - i] for i in range(1, k + 1)) / k)
    coeffs = [int(x) for x in c]
    assert all(Fraction(x) == y for x, y in zip(coeffs, c))
    q: list[int] = []
    for j in range(up_to + 1):
        cj = coeffs[j] if j < len(coeffs) else 0
        q.append(cj + 2 * (q[j - 1] if j >= 1 else 0) - (q[j - 2] if j >= 2 else 0))
    return q
