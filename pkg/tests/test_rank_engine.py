import pytest

from fibered_floer import rank_engine
from fibered_floer.errors import (
    InconclusiveSandwich,
    NoCitedComparison,
    UnsupportedLevel,
    UnsupportedMappingClass,
)
from fibered_floer.generator_enum import GeneratorCensus
from fibered_floer.rank_engine import compare_unperturbed, compute_rank, sandwich_rank

from wordgen import alternating, word


def test_sandwich_rank():
    assert sandwich_rank(-4, 4) == 4
    assert sandwich_rank(0, 0) == 0
    with pytest.raises(InconclusiveSandwich):
        sandwich_rank(-3, 5)


@pytest.mark.parametrize(
    "w, total",
    [
        (word(3, ("g", 7)), 4),
        (word(3, ("g", 1), ("d", -2)), 6),
        (word(3, ("g", 2), ("d", 2)), 6),
        (alternating(3, [1, 1], [-1, -1]), 9),
        (word(3, ("g", 1), ("d", 1)), 3),
        (word(3), 4),
    ],
)
def test_compute_rank_examples(w, total):
    r = compute_rank(w)
    assert r.total_rank == total
    assert r.ok, r.checks


def test_same_2_2_structure_ranks():
    r = compute_rank(word(3, ("g", 2), ("d", 2)))
    assert [(s.label.kind, s.rank) for s in r.per_structure] == [
        ("INDEXED", 1), ("INDEXED", 1), ("INDEXED", 1), ("DISTINGUISHED", 3)
    ]


def test_every_bucket_pinned():
    r = compute_rank(word(5, ("g", 2), ("d", 1), ("g", 3)))
    for s in r.per_structure:
        assert s.rank == s.essential_pairs == abs(s.chi)
    assert r.total_rank == sum(s.rank for s in r.per_structure)


def test_product_other_levels():
    r = compute_rank(word(4), level=1)
    assert r.total_rank == 15 and r.ok
    assert compute_rank(word(4), level=3).total_rank == 1
    with pytest.raises(UnsupportedLevel):
        compute_rank(word(4), level=0)
    with pytest.raises(UnsupportedLevel):
        compute_rank(word(4, ("g", 1)), level=1)


def test_unsupported():
    with pytest.raises(UnsupportedMappingClass):
        compute_rank(word(3, ("g", 1), ("d", 1), ("g", -1)))


def test_inconclusive_when_census_short(monkeypatch):
    real = rank_engine.enumerate_level

    def drop_one(d, k):
        c = real(d, k)
        return GeneratorCensus(c.level, c.pairs[1:])

    monkeypatch.setattr(rank_engine, "enumerate_level", drop_one)
    with pytest.raises(InconclusiveSandwich):
        compute_rank(word(3, ("g", 2)))


@pytest.mark.parametrize(
    "w, perturbed, unperturbed, diff",
    [
        (word(3, ("g", 1)), 4, 6, 2),
        (word(3, ("g", 1), ("d", -1)), 5, 5, 0),
        (word(3, ("g", 1), ("d", 1)), 3, 5, 2),
    ],
)
def test_compare_unperturbed(w, perturbed, unperturbed, diff):
    c = compare_unperturbed(compute_rank(w))
    assert (c.perturbed, c.unperturbed, c.difference) == (perturbed, unperturbed, diff)


def test_compare_uncited():
    with pytest.raises(NoCitedComparison):
        compare_unperturbed(compute_rank(word(3, ("g", 1), ("d", 1), ("g", 1))))
