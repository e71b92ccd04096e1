"""
Point-set model of the special genus 2g+1 Heegaard diagram of a mapping torus.

Only the data the rank computation depends on is kept: for each slot i
(the pair alpha_i, beta_i with 1 <= i <= 2g) the set of intersection
points, plus the A/A'/B/B' points where alpha_{2g+1} and beta_{2g+1} meet
the other curves. Twisting along gamma and delta only adds points to slot
1; those extra points are the ``P(i, j)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Mapping, NamedTuple

from .errors import SlotOutOfRange
from .mapping_class import (
    ALTERNATING,
    OPP,
    SAME,
    SANDWICH,
    CaseClass,
    TwistWord,
    _require_supported,
    abs_trace,
)

_KIND_ORDER = {"L": 0, "R": 1, "P": 2, "A": 3, "A'": 4, "B": 5, "B'": 6}


class IntersectionPoint(NamedTuple):
    """One intersection point: ``kind`` is L, R, P, A, A', B or B'.

    P points carry a second index ``j``; all others leave it at 0.
    """

    kind: str
    i: int
    j: int = 0

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.i, self.j)

    @property
    def label(self) -> str:
        if self.kind == "P":
            return f"P{self.i},{self.j}"
        return f"{self.kind}{self.i}"

    def __str__(self) -> str:
        return self.label

    @property
    def is_shifted(self) -> bool:
        """True for R and P points: each lowers the spin^c level by one."""
        return self.kind == "R" or self.kind == "P"


def L(i: int) -> IntersectionPoint:
    return IntersectionPoint("L", i)


def R(i: int) -> IntersectionPoint:
    return IntersectionPoint("R", i)


def P(i: int, j: int) -> IntersectionPoint:
    return IntersectionPoint("P", i, j)


def A(i: int) -> IntersectionPoint:
    return IntersectionPoint("A", i)


def B(i: int) -> IntersectionPoint:
    return IntersectionPoint("B", i)


@dataclass(frozen=True)
class CaseDiagram:
    genus: int
    case: CaseClass
    slots: Mapping[int, tuple[IntersectionPoint, ...]]
    p_grid: tuple[tuple[int, int], ...]
    removed: frozenset[IntersectionPoint] = frozenset()
    simplified: bool = False
    ab_points: tuple[IntersectionPoint, ...] = field(default=(), repr=False)

    def points(self, slot: int) -> tuple[IntersectionPoint, ...]:
        if not 1 <= slot <= 2 * self.genus:
            raise SlotOutOfRange(f"slot {slot} outside 1..{2 * self.genus}")
        return self.slots[slot]

    def to_json(self) -> dict[str, list[str]]:
        return {str(i): [p.label for p in pts] for i, pts in sorted(self.slots.items())}


def _grid(rows: int, cols: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for i in range(1, rows + 1) for j in range(1, cols + 1))


def p_grid_for(case: CaseClass) -> tuple[tuple[int, int], ...]:
    """Index set of the extra alpha_1/beta_1 points before any isotopy.

    OPP/SAME give an |m| x |n| grid and SANDWICH an (m1+m2) x n1 grid.
    ALTERNATING points carry no product structure; they are numbered
    P(1, 1) .. P(1, T-2) with T the absolute trace.
    """
    if case.tag in (OPP, SAME):
        m, n = case.params
        return _grid(abs(m), abs(n))
    if case.tag == SANDWICH:
        m1, n1, m2 = case.params
        return _grid(m1 + m2, n1)
    if case.tag == ALTERNATING:
        extra = alternating_abs_trace(case.params) - 2
        return _grid(1, extra)
    return ()


def alternating_abs_trace(pairs) -> int:
    """Absolute trace straight from ALTERNATING parameters."""
    a, b, c, d = 1, 0, 0, 1
    for m, n in pairs:
        m, n = abs(m), abs(n)
        a, b, c, d = a, a * m + b, c, c * m + d          # right-multiply by (1 m; 0 1)
        a, b, c, d = a + b * n, b, c + d * n, d          # right-multiply by (1 0; n 1)
    return a + d


def build_diagram(word: TwistWord) -> CaseDiagram:
    """Unsimplified diagram of ``word``; raises for unsupported words."""
    case = _require_supported(word)
    g = word.genus
    grid = p_grid_for(case)
    slots: dict[int, tuple[IntersectionPoint, ...]] = {
        i: (L(i), R(i)) for i in range(1, 2 * g + 1)
    }
    slots[1] = (L(1), R(1)) + tuple(P(i, j) for i, j in grid)
    if word.is_gamma_delta():
        assert len(slots[1]) == abs_trace(word)
    ab = tuple(
        IntersectionPoint(kind, i)
        for i in range(1, 2 * g + 1)
        for kind in ("A", "A'", "B", "B'")
    )
    return CaseDiagram(g, case, slots, grid, frozenset(), False, ab)


def simplify_isotopy(d: CaseDiagram) -> CaseDiagram:
    """Cancel the bigon on beta_1 that exists when both twist directions agree.

    SAME(m, n) loses R(1) and P(|m|, |n|). SANDWICH loses R(1) and P(1, 1),
    and the survivors are renumbered row-major so that the unused label is
    always the last grid cell, matching the SAME layout. Other cases carry
    no such bigon and come back unchanged (apart from the flag).
    """
    if d.simplified:
        return d
    tag = d.case.tag
    if tag not in (SAME, SANDWICH):
        return replace(d, simplified=True)

    if tag == SAME:
        m, n = (abs(x) for x in d.case.params)
        gone = P(m, n)
        grid = tuple(c for c in d.p_grid if c != (m, n))
    else:
        m1, n1, m2 = d.case.params
        rows, cols = m1 + m2, n1
        gone = P(1, 1)
        # row-major position f >= 1 moves to f - 1
        grid = tuple(divmod(f - 1, cols) for f in range(1, rows * cols))
        grid = tuple((i + 1, j + 1) for i, j in grid)
    slots = dict(d.slots)
    slots[1] = (L(1),) + tuple(P(i, j) for i, j in grid)
    return replace(
        d, slots=slots, p_grid=grid, removed=frozenset({R(1), gone}), simplified=True
    )


def intersection_count(d: CaseDiagram, i: int) -> int:
    return len(d.points(i))


def distinguished_cell(d: CaseDiagram) -> tuple[int, int] | None:
    """The grid label left unused after simplification (SAME/SANDWICH only)."""
    if d.case.tag == SAME:
        m, n = d.case.params
        return (abs(m), abs(n))
    if d.case.tag == SANDWICH:
        m1, n1, m2 = d.case.params
        return (m1 + m2, n1)
    return None
