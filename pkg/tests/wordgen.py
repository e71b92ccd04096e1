"""Word builders and the parameter grids shared by the test modules."""
from itertools import product

from fibered_floer.mapping_class import DELTA, GAMMA, DehnTwist, TwistWord, gamma_i


def word(g, *pairs):
    """word(3, ("g", 2), ("d", -3)) -> g^2 d^-3; ("g2", 1) is gamma_i(2)."""
    twists = []
    for name, p in pairs:
        if name == "g":
            c = GAMMA
        elif name == "d":
            c = DELTA
        else:
            c = gamma_i(int(name[1:]))
        twists.append(DehnTwist(c, p))
    return TwistWord(g, tuple(twists))


def alternating(g, ms, ns):
    pairs = []
    for m, n in zip(ms, ns):
        pairs += [("g", m), ("d", n)]
    return word(g, *pairs)


NONZERO3 = [n for n in range(-3, 4) if n]
NONZERO2 = [n for n in range(-2, 3) if n]


def single_grid():
    return [(g, word(g, ("g", n))) for g in range(3, 9) for n in NONZERO3]


def _placements(g, size):
    """Leading, trailing and spread-out handle choices for ``size`` curves."""
    spread = tuple(sorted({1 + (g - 1) * t // max(size - 1, 1) for t in range(size)}))
    picks = {tuple(range(1, size + 1)), tuple(range(g - size + 1, g + 1))}
    if len(spread) == size:
        picks.add(spread)
    return sorted(picks)


def disjoint_grid():
    out = []
    for g in range(3, 9):
        for i in range(1, g + 1):
            for p in NONZERO2:
                out.append((g, word(g, (f"g{i}", p))))
        for size in (2, 3):
            for idx in _placements(g, size):
                for pw in product(NONZERO2, repeat=size):
                    out.append((g, word(g, *((f"g{i}", p) for i, p in zip(idx, pw)))))
    return out


def opp_grid():
    out = []
    for g in range(3, 7):
        for m in range(1, 5):
            for n in range(-4, 0):
                out.append((g, word(g, ("g", m), ("d", n))))
                out.append((g, word(g, ("g", n), ("d", m))))
    return out


def same_grid():
    return [
        (g, word(g, ("g", m), ("d", n)))
        for g in range(3, 7) for m in range(1, 5) for n in range(1, 5)
    ]


def sandwich_grid():
    return [
        (g, word(g, ("g", m1), ("d", n1), ("g", m2)))
        for g in range(3, 6)
        for m1 in range(1, 4) for n1 in range(1, 4) for m2 in range(1, 4)
    ]


def alternating_grid():
    """Sign-alternating words of 2..4 syllable pairs, powers in {1, 2}."""
    out = []
    for g in range(3, 6):
        for k in range(2, 5):
            for ms in product((1, 2), repeat=k):
                for ns in product((1, 2), repeat=k):
                    out.append((g, alternating(g, ms, [-n for n in ns])))
                    out.append((g, alternating(g, [-m for m in ms], ns)))
    return out
