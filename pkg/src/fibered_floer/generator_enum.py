"""
Floer generators of the special diagram, sorted into spin^c levels.

A generator on the A side uses the corner points (A_{2g}, B_{2g}) and picks
one point from each slot 1..2g-1; the B side uses (A_{2g-1}, B_{2g-1}) and
slots 1..2g-2, 2g. Each R or P coordinate lowers the level by one from the
top level g-1. An A generator and a B generator with the same coordinates
on the shared slots 1..2g-2 and the same L/R choice on their private slot
form a pair. The pair is fake when that private choice is R; those pairs
are joined by the basepoint-free disk D' and cannot survive.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from .errors import LevelOutOfRange, UnsupportedLevel
from .heegaard_model import CaseDiagram, IntersectionPoint, A, B, alternating_abs_trace
from .mapping_class import (
    ALTERNATING,
    DISJOINT,
    OPP,
    PRODUCT,
    SAME,
    SANDWICH,
    SINGLE,
    CaseClass,
)

FAKE = "FAKE"
ESSENTIAL = "ESSENTIAL"


@dataclass(frozen=True)
class Generator:
    """One point per slot of its side; ``coords[n]`` lives on ``slots[n]``."""

    side: str  # "A" or "B"
    genus: int
    coords: tuple[IntersectionPoint, ...]

    @property
    def slots(self) -> tuple[int, ...]:
        return side_slots(self.side, self.genus)

    @property
    def corner(self) -> tuple[IntersectionPoint, IntersectionPoint]:
        top = 2 * self.genus if self.side == "A" else 2 * self.genus - 1
        return (A(top), B(top))

    @property
    def points(self) -> tuple[IntersectionPoint, ...]:
        return self.corner + self.coords

    @property
    def private_slot(self) -> int:
        return 2 * self.genus - 1 if self.side == "A" else 2 * self.genus

    def at(self, slot: int) -> IntersectionPoint:
        if 1 <= slot <= 2 * self.genus - 2:
            return self.coords[slot - 1]
        if slot == self.private_slot:
            return self.coords[-1]
        raise KeyError(slot)

    @property
    def shifted_slots(self) -> tuple[int, ...]:
        return tuple(s for s, p in zip(self.slots, self.coords) if p.is_shifted)

    def sort_key(self):
        # only slot 1 offers more than one shifted point, so this is a total order
        return (self.side, self.coords[0].sort_key, self.shifted_slots)

    def label(self) -> str:
        return "(" + ", ".join(p.label for p in self.points) + ")"


def side_slots(side: str, g: int) -> tuple[int, ...]:
    shared = tuple(range(1, 2 * g - 1))
    return shared + ((2 * g - 1,) if side == "A" else (2 * g,))


def spinc_degree(gen: Generator, g: int) -> int:
    return (g - 1) - sum(1 for p in gen.coords if p.is_shifted)


def classify_fake(gen: Generator, g: int) -> str:
    slot = 2 * g - 1 if gen.side == "A" else 2 * g
    p = gen.at(slot)
    return FAKE if (p.kind == "R" and p.i == slot) else ESSENTIAL


@dataclass(frozen=True)
class GeneratorPair:
    a: Generator
    b: Generator
    fake: bool


@dataclass(frozen=True)
class GeneratorCensus:
    level: int
    pairs: tuple[GeneratorPair, ...]

    @property
    def pairs_total(self) -> int:
        return len(self.pairs)

    @property
    def pairs_fake(self) -> int:
        return sum(1 for p in self.pairs if p.fake)

    @property
    def pairs_essential(self) -> int:
        return self.pairs_total - self.pairs_fake

    @property
    def generators(self) -> list[Generator]:
        return [g for p in self.pairs for g in (p.a, p.b)]

    def counts(self) -> dict[str, int]:
        return {
            "total": self.pairs_total,
            "fake": self.pairs_fake,
            "essential": self.pairs_essential,
        }


def _check_level(d: CaseDiagram, k: int) -> None:
    g = d.genus
    if k >= g:
        raise LevelOutOfRange(f"S_{k} is empty for genus {g}")
    if d.case.tag != PRODUCT and k != g - 2:
        raise UnsupportedLevel(
            f"only level g-2 = {g - 2} is available for {d.case.tag} words, got {k}"
        )


def _side_generators(d: CaseDiagram, side: str, shifts: int) -> list[Generator]:
    g = d.genus
    slots = side_slots(side, g)
    lifted = [[p for p in d.points(s) if p.is_shifted] for s in slots]
    base = [next(p for p in d.points(s) if p.kind == "L") for s in slots]
    out = []
    for chosen in combinations(range(len(slots)), shifts):
        for picks in product(*(lifted[n] for n in chosen)):
            coords = list(base)
            for n, p in zip(chosen, picks):
                coords[n] = p
            out.append(Generator(side, g, tuple(coords)))
    return out


def _pair_key(gen: Generator):
    return gen.coords[:-1], gen.coords[-1].kind


def enumerate_level(d: CaseDiagram, k: int) -> GeneratorCensus:
    """All generators of level ``k`` in ``d``, matched into A/B pairs."""
    _check_level(d, k)
    g = d.genus
    r = g - 1 - k
    a_side = sorted(_side_generators(d, "A", r), key=Generator.sort_key)
    b_by_key = {_pair_key(x): x for x in _side_generators(d, "B", r)}
    if len(b_by_key) != len(a_side):
        raise AssertionError("A and B sides do not match up")
    pairs = []
    for a in a_side:
        b = b_by_key.pop(_pair_key(a))
        fake = classify_fake(a, g) == FAKE
        assert fake == (classify_fake(b, g) == FAKE)
        pairs.append(GeneratorPair(a, b, fake))
    return GeneratorCensus(k, tuple(pairs))


def closed_form_counts(case: CaseClass, g: int, k: int, simplified: bool = True) -> dict[str, int]:
    """Pair counts predicted directly from the case parameters."""
    if case.tag == PRODUCT:
        r = g - 1 - k
        total, fake = comb(2 * g - 1, r), comb(2 * g - 2, r - 1) if r >= 1 else 0
        return {"total": total, "fake": fake, "essential": total - fake}
    if k != g - 2:
        raise UnsupportedLevel(f"closed forms for {case.tag} exist only at level g-2")
    if case.tag in (SINGLE, DISJOINT):
        extra = 0
    elif case.tag == OPP:
        m, n = case.params
        extra = abs(m * n)
    elif case.tag == SAME:
        m, n = case.params
        extra = m * n - (2 if simplified else 0)
    elif case.tag == SANDWICH:
        m1, n1, m2 = case.params
        extra = (m1 + m2) * n1 - (2 if simplified else 0)
    elif case.tag == ALTERNATING:
        extra = alternating_abs_trace(case.params) - 2
    else:
        raise UnsupportedLevel(f"no closed form for {case.tag}")
    essential = 2 * g - 2 + extra
    return {"total": essential + 1, "fake": 1, "essential": essential}
