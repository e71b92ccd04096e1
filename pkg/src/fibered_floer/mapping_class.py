"""
Dehn-twist words on a closed genus-g surface and their homological data.

A word is a left-to-right product of powered twists along three kinds of
curve: the standard non-separating curve ``GAMMA``, the curve ``DELTA``
meeting it once, and the members ``gamma_i(i)`` of a standard disjoint
collection (one per handle). Everything here is exact integer algebra;
Python integers never overflow, so long words are safe.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

from .errors import (
    GenusTooSmall,
    LevelOutOfRange,
    UnsupportedCurve,
    UnsupportedMappingClass,
    ZeroExponent,
)

Matrix2 = tuple[tuple[int, int], tuple[int, int]]

IDENTITY: Matrix2 = ((1, 0), (0, 1))


@dataclass(frozen=True, order=True)
class Curve:
    kind: str  # "gamma", "delta" or "gamma_i"
    index: int = 0

    def __str__(self) -> str:
        if self.kind == "gamma_i":
            return f"g{self.index}"
        return "g" if self.kind == "gamma" else "d"


GAMMA = Curve("gamma")
DELTA = Curve("delta")


def gamma_i(i: int) -> Curve:
    """The standard curve of a disjoint collection sitting in handle ``i``."""
    if i < 1:
        raise UnsupportedCurve(f"disjoint curve index must be >= 1, got {i}")
    return Curve("gamma_i", i)


@dataclass(frozen=True)
class DehnTwist:
    curve: Curve
    power: int

    def __post_init__(self):
        if self.power == 0:
            raise ZeroExponent(f"twist along {self.curve} has power 0")

    def __str__(self) -> str:
        return f"{self.curve}^{self.power}"


@dataclass(frozen=True)
class TwistWord:
    """A mapping class written as a product of powered Dehn twists.

    Adjacent twists along the same curve are merged on construction, so
    ``TwistWord(3, [t(GAMMA, 1), t(GAMMA, 1)])`` is the single twist
    ``g^2``. A merge that cancels to power zero raises ``ZeroExponent``.
    """

    genus: int
    twists: tuple[DehnTwist, ...] = field(default=())

    def __post_init__(self):
        if self.genus <= 2:
            raise GenusTooSmall(f"genus must be at least 3, got {self.genus}")
        merged: list[DehnTwist] = []
        for tw in self.twists:
            if not isinstance(tw, DehnTwist):
                tw = DehnTwist(*tw)
            if tw.curve.kind == "gamma_i" and tw.curve.index > self.genus:
                raise UnsupportedCurve(
                    f"curve {tw.curve} does not exist on a genus {self.genus} surface"
                )
            if merged and merged[-1].curve == tw.curve:
                total = merged[-1].power + tw.power
                if total == 0:
                    raise ZeroExponent(
                        f"adjacent twists along {tw.curve} cancel to power 0"
                    )
                merged[-1] = DehnTwist(tw.curve, total)
            else:
                merged.append(tw)
        object.__setattr__(self, "twists", tuple(merged))

    def __len__(self) -> int:
        return len(self.twists)

    def __str__(self) -> str:
        return render_word(self)

    @property
    def curves(self) -> frozenset[Curve]:
        return frozenset(t.curve for t in self.twists)

    def is_gamma_delta(self) -> bool:
        return self.curves <= {GAMMA, DELTA}

    def rotated(self, shift: int = 1) -> "TwistWord":
        """Cyclic rotation (a conjugate, so the same mapping torus)."""
        tw = list(self.twists)
        if not tw:
            return self
        shift %= len(tw)
        tw = tw[shift:] + tw[:shift]
        # the old first/last twists become adjacent; a cancelling pair is dropped
        out: list[DehnTwist] = []
        for t in tw:
            if out and out[-1].curve == t.curve:
                p = out.pop().power + t.power
                if p:
                    out.append(DehnTwist(t.curve, p))
            else:
                out.append(t)
        return TwistWord(self.genus, tuple(out))


def render_word(word: TwistWord) -> str:
    """Inverse of :func:`fibered_floer.cli.parse_word` on normal-form words."""
    return " ".join(str(t) for t in word.twists)


# ---------------------------------------------------------------------------
# case classification
# ---------------------------------------------------------------------------

PRODUCT = "PRODUCT"
SINGLE = "SINGLE"
DISJOINT = "DISJOINT"
OPP = "OPP"
SAME = "SAME"
SANDWICH = "SANDWICH"
ALTERNATING = "ALTERNATING"
UNSUPPORTED = "UNSUPPORTED"

TWO_CURVE_TAGS = frozenset({OPP, SAME, SANDWICH, ALTERNATING})


@dataclass(frozen=True)
class CaseClass:
    """Which family a word belongs to, with the family's parameters.

    ``params`` by tag: SINGLE ``(n,)``; DISJOINT ``((i, n_i), ...)``;
    OPP and SAME ``(m, n)``; SANDWICH ``(m1, n1, m2)``; ALTERNATING
    ``((m_1, n_1), ..., (m_k, n_k))``; PRODUCT and UNSUPPORTED ``()``.
    """

    tag: str
    params: tuple = ()
    reason: str = field(default="", compare=False)

    def __str__(self) -> str:
        if not self.params:
            return self.tag
        return f"{self.tag}{self.params!r}" if self.tag in (DISJOINT, ALTERNATING) \
            else f"{self.tag}({', '.join(map(str, self.params))})"

    @property
    def supported(self) -> bool:
        return self.tag != UNSUPPORTED


def _unsupported(reason: str) -> CaseClass:
    return CaseClass(UNSUPPORTED, (), reason)


def classify(word: TwistWord) -> CaseClass:
    """Decide which family ``word`` falls into.

    Even-length gamma/delta words starting with ``d`` are rotated to start
    with ``g`` first (conjugation does not change the mapping torus).
    """
    tw = word.twists
    if not tw:
        return CaseClass(PRODUCT)
    curves = word.curves
    if len(tw) == 1:
        return CaseClass(SINGLE, (tw[0].power,))

    if all(c.kind == "gamma_i" for c in curves):
        idx = [t.curve.index for t in tw]
        if len(set(idx)) != len(idx):
            return _unsupported("repeated curve in a disjoint collection word")
        return CaseClass(DISJOINT, tuple((t.curve.index, t.power) for t in tw))
    if not word.is_gamma_delta():
        return _unsupported("word mixes disjoint-collection curves with gamma/delta")

    powers = [t.power for t in tw]
    if len(tw) % 2 == 0:
        if tw[0].curve == DELTA:
            powers = powers[1:] + powers[:1]
        ms, ns = powers[0::2], powers[1::2]
        if len(tw) == 2:
            m, n = ms[0], ns[0]
            return CaseClass(OPP if m * n < 0 else SAME, (m, n))
        if all(m * n < 0 for m in ms for n in ns):
            return CaseClass(ALTERNATING, tuple(zip(ms, ns)))
        return _unsupported("gamma/delta word whose signs do not alternate")
    if len(tw) == 3 and tw[0].curve == GAMMA and all(p > 0 for p in powers):
        return CaseClass(SANDWICH, tuple(powers))
    return _unsupported("odd-length gamma/delta word outside the positive g d g family")


def _require_supported(word: TwistWord) -> CaseClass:
    case = classify(word)
    if not case.supported:
        raise UnsupportedMappingClass(f"{render_word(word) or '<identity>'}: {case.reason}")
    return case


# ---------------------------------------------------------------------------
# action on H_1
# ---------------------------------------------------------------------------


def matmul(a: Matrix2, b: Matrix2) -> Matrix2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def trace(a: Matrix2) -> int:
    return a[0][0] + a[1][1]


def det(a: Matrix2) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


def gamma_matrix(m: int) -> Matrix2:
    return ((1, m), (0, 1))


def delta_matrix(n: int) -> Matrix2:
    return ((1, 0), (-n, 1))


@dataclass(frozen=True)
class H1Action:
    """Action on H_1: a 2x2 block on the distinguished handle, identity elsewhere."""

    block: Matrix2
    trivial_rank: int

    @property
    def trace(self) -> int:
        return trace(self.block) + self.trivial_rank


def _check_gamma_delta(word: TwistWord) -> None:
    if not word.is_gamma_delta():
        raise UnsupportedCurve(
            "the single-block H_1 action is only defined for gamma/delta words"
        )


def h1_action(word: TwistWord) -> H1Action:
    _check_gamma_delta(word)
    block = IDENTITY
    for t in word.twists:
        f = gamma_matrix(t.power) if t.curve == GAMMA else delta_matrix(t.power)
        block = matmul(block, f)
    return H1Action(block, 2 * word.genus - 2)


def abs_trace(word: TwistWord) -> int:
    """Trace of the product with every twist power replaced by its absolute value.

    For sign-alternating words this counts the intersections of alpha_1 and
    beta_1 in the special diagram.
    """
    _check_gamma_delta(word)
    block = IDENTITY
    for t in word.twists:
        p = abs(t.power)
        f = ((1, p), (0, 1)) if t.curve == GAMMA else ((1, 0), (p, 1))
        block = matmul(block, f)
    return trace(block)


def handle_blocks(word: TwistWord) -> list[Matrix2]:
    """Per-handle 2x2 blocks of the H_1 action, handle 1 first (g blocks)."""
    blocks = [IDENTITY] * word.genus
    if word.is_gamma_delta():
        blocks[0] = h1_action(word).block
        return blocks
    for t in word.twists:
        if t.curve.kind != "gamma_i":
            raise UnsupportedCurve("cannot place gamma/delta and disjoint curves together")
        i = t.curve.index - 1
        blocks[i] = matmul(blocks[i], gamma_matrix(t.power))
    return blocks


def lefschetz(word: TwistWord) -> int:
    """Alternating trace sum 1 - tr(H_1) + 1 of the monodromy."""
    _require_supported(word)
    return 2 - sum(trace(b) for b in handle_blocks(word))


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def symmetric_lefschetz(word: TwistWord, n: int) -> int:
    """Lefschetz number of the induced map on the n-th symmetric product.

    Read off as the t^n coefficient of det(I - tA) / (1 - t)^2, where
    det(I - tA) factors over handles as prod(1 - tr(B) t + det(B) t^2).
    """
    if n < 0:
        raise ValueError(f"symmetric power must be non-negative, got {n}")
    _require_supported(word)
    poly = [1]
    for b in handle_blocks(word):
        poly = _poly_mul(poly, [1, -trace(b), det(b)])
    # 1/(1-t)^2 = sum (j+1) t^j
    return sum(c * (n - a + 1) for a, c in enumerate(poly[: n + 1]))


def turaev_torsion_level(word: TwistWord, k: int) -> int:
    """Summed Turaev torsion over the spin^c structures of level k."""
    g = word.genus
    if k >= g:
        raise LevelOutOfRange(f"level S_{k} is empty for genus {g} (need k <= {g - 1})")
    return symmetric_lefschetz(word, g - 1 - k)


def product_torsion_closed_form(g: int, k: int) -> int:
    """(-1)^(g-1-k) C(2g-2, g-1-k): the torsion of Sigma_g x S^1 at level k."""
    n = g - 1 - k
    return (-1) ** n * comb(2 * g - 2, n)
