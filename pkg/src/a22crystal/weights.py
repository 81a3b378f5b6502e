"""Weight lattice of the affine algebra of type A_2^(2).

Weights are stored in the basis ``{Lambda_0, Lambda_1, delta/2}``.  Because the
null root is ``delta = 2 alpha_0 + alpha_1``, its half generates the imaginary
direction of the lattice and every weight that occurs in this package has
integer coordinates in this basis.
"""

from __future__ import annotations

from dataclasses import dataclass

CARTAN = ((2, -4), (-1, 2))

# coefficients of the canonical central element c = c0 h0 + c1 h1
CENTRAL = (1, 2)


@dataclass(frozen=True, slots=True)
class ClassicalWeight:
    """A weight modulo the null direction: ``c0 Lambda_0 + c1 Lambda_1``."""

    c0: int
    c1: int

    def __add__(self, other: ClassicalWeight) -> ClassicalWeight:
        other = _as_classical(other)
        return ClassicalWeight(self.c0 + other.c0, self.c1 + other.c1)

    def __sub__(self, other: ClassicalWeight) -> ClassicalWeight:
        other = _as_classical(other)
        return ClassicalWeight(self.c0 - other.c0, self.c1 - other.c1)

    def __neg__(self) -> ClassicalWeight:
        return ClassicalWeight(-self.c0, -self.c1)

    def __mul__(self, k: int) -> ClassicalWeight:
        return ClassicalWeight(k * self.c0, k * self.c1)

    __rmul__ = __mul__

    def pair(self, i: int) -> int:
        return pair(i, self)

    def level(self) -> int:
        return level(self)

    def cl(self) -> ClassicalWeight:
        return self

    def to_json(self) -> dict:
        return {"L0": self.c0, "L1": self.c1}

    def __str__(self) -> str:
        return _format_terms(((self.c0, "L0"), (self.c1, "L1")))


@dataclass(frozen=True, slots=True)
class Weight:
    """An affine weight ``c0 Lambda_0 + c1 Lambda_1 + cd (delta/2)``."""

    c0: int
    c1: int
    cd: int = 0

    def __add__(self, other: Weight) -> Weight:
        if not isinstance(other, Weight):
            return NotImplemented
        return Weight(self.c0 + other.c0, self.c1 + other.c1, self.cd + other.cd)

    def __sub__(self, other: Weight) -> Weight:
        if not isinstance(other, Weight):
            return NotImplemented
        return Weight(self.c0 - other.c0, self.c1 - other.c1, self.cd - other.cd)

    def __neg__(self) -> Weight:
        return Weight(-self.c0, -self.c1, -self.cd)

    def __mul__(self, k: int) -> Weight:
        return Weight(k * self.c0, k * self.c1, k * self.cd)

    __rmul__ = __mul__

    def pair(self, i: int) -> int:
        return pair(i, self)

    def level(self) -> int:
        return level(self)

    def cl(self) -> ClassicalWeight:
        return ClassicalWeight(self.c0, self.c1)

    def to_json(self) -> dict:
        return {"L0": self.c0, "L1": self.c1, "half_delta": self.cd}

    @classmethod
    def from_json(cls, data: dict) -> Weight:
        return cls(int(data["L0"]), int(data["L1"]), int(data.get("half_delta", 0)))

    def __str__(self) -> str:
        return _format_terms(((self.c0, "L0"), (self.c1, "L1"), (self.cd, "d/2")))


def _as_classical(w) -> ClassicalWeight:
    if isinstance(w, ClassicalWeight):
        return w
    if isinstance(w, Weight):
        return w.cl()
    raise TypeError(f"not a weight: {w!r}")


def _format_terms(terms) -> str:
    parts = [f"{c}{name}" for c, name in terms if c]
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


LAMBDA0 = Weight(1, 0, 0)
LAMBDA1 = Weight(0, 1, 0)
HALF_DELTA = Weight(0, 0, 1)
# alpha_0 carries the delta/2 coefficient because alpha_0(d) = 1 and delta/2 = alpha_0 + alpha_1/2
ALPHA0 = Weight(2, -1, 1)
ALPHA1 = Weight(-4, 2, 0)
DELTA = 2 * ALPHA0 + ALPHA1
ALPHA = (ALPHA0, ALPHA1)
ZERO = Weight(0, 0, 0)


def pair(i: int, w: Weight | ClassicalWeight) -> int:
    """Return ``<h_i, w>``; the delta/2 direction pairs to zero."""
    if i == 0:
        return w.c0
    if i == 1:
        return w.c1
    raise ValueError(f"simple root index must be 0 or 1, got {i}")


def level(w: Weight | ClassicalWeight) -> int:
    """Return ``<c, w>`` with ``c = h_0 + 2 h_1``."""
    return CENTRAL[0] * w.c0 + CENTRAL[1] * w.c1


def dominant(l: int, a: int) -> Weight:
    """The level-``l`` dominant weight ``(l - 2a) Lambda_0 + a Lambda_1``."""
    if l < 1:
        raise ValueError(f"level must be positive, got {l}")
    if not 0 <= a <= l // 2:
        raise ValueError(f"a = {a} is not in [0, {l // 2}]; weight would not be dominant")
    return Weight(l - 2 * a, a, 0)


def alpha(i: int) -> Weight:
    return ALPHA[i]
