"""
Splitting the level g-2 generators into individual spin^c structures.

For SAME and SANDWICH words each surviving extra point P(i, j) sits in its
own structure s_{i,j}; every other generator lies in one distinguished
structure. All other cases are reported as a single aggregate bucket.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import NonIntegralEvaluation, UnsupportedCase
from .generator_enum import Generator, GeneratorCensus
from .heegaard_model import CaseDiagram, IntersectionPoint, distinguished_cell
from .mapping_class import SAME, SANDWICH

AGGREGATE = "AGGREGATE"
INDEXED = "INDEXED"
DISTINGUISHED = "DISTINGUISHED"
_LABEL_ORDER = {INDEXED: 0, DISTINGUISHED: 1, AGGREGATE: 2}


@dataclass(frozen=True)
class SpinCLabel:
    kind: str
    index: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == DISTINGUISHED:
            return DISTINGUISHED
        return f"{self.kind}({', '.join(map(str, self.index))})"

    def sort_key(self):
        return (_LABEL_ORDER[self.kind], self.index)


@dataclass(frozen=True)
class PeriodicDomainData:
    """Just the numbers the first Chern class formula needs from a domain.

    ``point_measures`` holds the local multiplicity at each intersection
    point (the average of the four corner regions), so entries are
    quarter-integers. Points not listed count as zero.
    """

    euler_measure: Fraction
    basepoint_mult: int
    point_measures: Mapping[IntersectionPoint, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "euler_measure", Fraction(self.euler_measure))
        measures = {p: Fraction(v) for p, v in self.point_measures.items()}
        for p, v in measures.items():
            if (4 * v).denominator != 1:
                raise ValueError(f"point measure at {p} is not a multiple of 1/4: {v}")
        object.__setattr__(self, "point_measures", measures)

    def __add__(self, other: "PeriodicDomainData") -> "PeriodicDomainData":
        pts = dict(self.point_measures)
        for p, v in other.point_measures.items():
            pts[p] = pts.get(p, Fraction(0)) + v
        return PeriodicDomainData(
            self.euler_measure + other.euler_measure,
            self.basepoint_mult + other.basepoint_mult,
            pts,
        )


def chern_eval(dom: PeriodicDomainData, gen: Generator) -> int:
    """<c_1(s_y), [P]> = chi(P) - 2 n_z(P) + 2 sum_{p in y} n_p(P)."""
    value = dom.euler_measure - 2 * dom.basepoint_mult
    value += 2 * sum((dom.point_measures.get(p, Fraction(0)) for p in gen.points), Fraction(0))
    if value.denominator != 1:
        raise NonIntegralEvaluation(f"Chern class evaluates to {value} on {gen.label()}")
    return int(value)


def partition(d: CaseDiagram, census: GeneratorCensus) -> dict[SpinCLabel, GeneratorCensus]:
    if d.case.tag not in (SAME, SANDWICH):
        return {SpinCLabel(AGGREGATE, (census.level,)): census}
    if not d.simplified:
        raise UnsupportedCase("partition needs the simplified diagram for SAME/SANDWICH words")
    if census.level != d.genus - 2:
        raise UnsupportedCase(f"partition is only defined at level g-2, got {census.level}")
    buckets: dict[SpinCLabel, list] = {
        SpinCLabel(INDEXED, cell): [] for cell in d.p_grid
    }
    buckets[SpinCLabel(DISTINGUISHED)] = []
    for pair in census.pairs:
        p1 = pair.a.at(1)
        label = SpinCLabel(INDEXED, (p1.i, p1.j)) if p1.kind == "P" else SpinCLabel(DISTINGUISHED)
        buckets[label].append(pair)
    assert distinguished_cell(d) not in d.p_grid
    return {
        lab: GeneratorCensus(census.level, tuple(prs))
        for lab, prs in sorted(buckets.items(), key=lambda kv: kv[0].sort_key())
    }


def euler_per_structure(parts: Mapping[SpinCLabel, GeneratorCensus], lefschetz_number: int) -> dict[SpinCLabel, int]:
    """Euler characteristic of each bucket, given the level total L.

    Indexed buckets carry +1 (their pair is joined by a single disk), and
    the distinguished bucket takes whatever is left so the values add up
    to L.
    """
    labels = list(parts)
    if len(labels) == 1 and labels[0].kind == AGGREGATE:
        return {labels[0]: lefschetz_number}
    indexed = [lab for lab in labels if lab.kind == INDEXED]
    out = {lab: 1 for lab in indexed}
    out[SpinCLabel(DISTINGUISHED)] = lefschetz_number - len(indexed)
    return out
