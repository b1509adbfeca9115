"""Exact arithmetic on the Picard lattice of a blow-up of projective space.

The Picard group of the blow-up X of P^d at k points is Z^{k+1} with basis
H, E_1, ..., E_k.  A divisor class m0*H - sum_i m_i*E_i is stored by its
coefficient vector (m0, m1, ..., mk).  The alternative "bracket" coordinates
[m0, m0-m1, ..., m0-mk] are the ones in which the Weyl group acts by
permutations of the last k entries together with the Cremona involution.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Parameter or convention violation in Picard-lattice computations."""


class NotFinitelyGeneratedError(LatticeError):
    """Raised when an operation requires a Mori dream space and (k, d) is not one."""


def is_mori_dream(k: int, d: int) -> bool:
    """Finite-generation test for the Cox ring of the blow-up of P^d at k points.

    Evaluated exactly over the rationals: 1/(d+1) + 1/(k-d-1) > 1/2.
    For k <= d+1 the blow-up is toric, hence trivially finitely generated.
    """
    if d < 2 or k < 1:
        raise LatticeError(f"unsupported parameters (k, d) = ({k}, {d})")
    if k <= d + 1:
        return True
    return Fraction(1, d + 1) + Fraction(1, k - d - 1) > Fraction(1, 2)


@dataclass(frozen=True)
class DivisorClass:
    """A divisor class m0*H - sum m_i*E_i on the blow-up of P^d at k points."""

    k: int
    d: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.k + 1:
            raise LatticeError(
                f"expected {self.k + 1} coefficients, got {len(self.coeffs)}"
            )

    @property
    def m0(self) -> int:
        return self.coeffs[0]

    def multiplicities(self) -> tuple[int, ...]:
        return self.coeffs[1:]

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_space(self, other)
        return DivisorClass(
            self.k, self.d, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        _check_same_space(self, other)
        return DivisorClass(
            self.k, self.d, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, n: int) -> "DivisorClass":
        return DivisorClass(self.k, self.d, tuple(n * a for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        parts = []
        if self.m0:
            parts.append(f"{self.m0}H" if self.m0 != 1 else "H")
        for i, m in enumerate(self.coeffs[1:], start=1):
            if m:
                parts.append(f"-{m}E{i}" if m != 1 else f"-E{i}")
        return "".join(parts) if parts else "0"


def _check_same_space(a: DivisorClass, b: DivisorClass) -> None:
    if (a.k, a.d) != (b.k, b.d):
        raise LatticeError(
            f"divisor classes live on different blow-ups: ({a.k},{a.d}) vs ({b.k},{b.d})"
        )


def H(k: int, d: int) -> DivisorClass:
    return DivisorClass(k, d, (1,) + (0,) * k)


def E(i: int, k: int, d: int) -> DivisorClass:
    if not 1 <= i <= k:
        raise LatticeError(f"exceptional index {i} out of range 1..{k}")
    coeffs = [0] * (k + 1)
    coeffs[i] = -1
    return DivisorClass(k, d, tuple(coeffs))


def canonical_class(k: int, d: int) -> DivisorClass:
    """K = -(d+1)H + (d-1) * sum E_i."""
    return DivisorClass(k, d, (-(d + 1),) + (-(d - 1),) * k)


def anticanonical_class(k: int, d: int) -> DivisorClass:
    return -1 * canonical_class(k, d)


def mukai_pairing(D1: DivisorClass, D2: DivisorClass) -> int:
    """Symmetric bilinear form with (H,H) = d-1, (H,E_i) = 0, (E_i,E_j) = -delta_ij."""
    _check_same_space(D1, D2)
    s = (D1.d - 1) * D1.coeffs[0] * D2.coeffs[0]
    for a, b in zip(D1.coeffs[1:], D2.coeffs[1:]):
        s -= a * b
    return s


def anticanonical_degree(D: DivisorClass) -> Fraction:
    """(-K, D) / (d-1); returned as an exact rational so non-integral values surface."""
    if D.d < 2:
        raise LatticeError("anticanonical degree needs d >= 2")
    return Fraction(mukai_pairing(anticanonical_class(D.k, D.d), D), D.d - 1)


def to_bracket(D: DivisorClass) -> tuple[int, ...]:
    """[m0, m0-m1, ..., m0-mk]."""
    m0 = D.coeffs[0]
    return (m0,) + tuple(m0 - m for m in D.coeffs[1:])


def from_bracket(v: Sequence[int], k: int, d: int) -> DivisorClass:
    if len(v) != k + 1:
        raise LatticeError(f"bracket vector must have length {k + 1}, got {len(v)}")
    m0 = v[0]
    return DivisorClass(k, d, (m0,) + tuple(m0 - x for x in v[1:]))


def cremona(v: Sequence[int], d: int) -> tuple[int, ...]:
    """Cremona involution in bracket coordinates.

    With m0' = m1 + ... + m_{d+1} - m0, entries 1..d+1 are fixed and the
    remaining ones are shifted by m0' - m0.
    """
    k = len(v) - 1
    if k < d + 1:
        raise LatticeError(f"Cremona needs k >= d+1, got k={k}, d={d}")
    m0p = sum(v[1 : d + 2]) - v[0]
    shift = m0p - v[0]
    return (m0p,) + tuple(v[1 : d + 2]) + tuple(x + shift for x in v[d + 2 :])


def transpose_bracket(v: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    """Swap bracket entries i and j (1-based among the last k entries)."""
    w = list(v)
    w[i], w[j] = w[j], w[i]
    return tuple(w)


def weyl_generators(k: int, d: int):
    """Adjacent transpositions of the last k bracket entries, plus Cremona if k >= d+1."""
    gens = []
    for i in range(1, k):
        gens.append(lambda v, i=i: transpose_bracket(v, i, i + 1))
    if k >= d + 1:
        gens.append(lambda v: cremona(v, d))
    return gens


def apply_weyl_word(D: DivisorClass, word: Iterable) -> DivisorClass:
    """Apply a word over the alphabet {('t', i, j), ('cr',)} in bracket coordinates."""
    v = to_bracket(D)
    for letter in word:
        if letter[0] == "t":
            v = transpose_bracket(v, letter[1], letter[2])
        elif letter[0] == "cr":
            v = cremona(v, D.d)
        else:
            raise LatticeError(f"unknown Weyl letter {letter!r}")
    return from_bracket(v, D.k, D.d)


def weyl_orbit(D: DivisorClass) -> list[DivisorClass]:
    """Breadth-first closure of {D} under the Weyl generators, sorted by bracket.

    Refuses when the Cox ring is not finitely generated, since the orbit may
    then be infinite.
    """
    if not is_mori_dream(D.k, D.d):
        raise NotFinitelyGeneratedError(
            f"(k, d) = ({D.k}, {D.d}) is not a Mori dream space; orbit may be infinite"
        )
    gens = weyl_generators(D.k, D.d)
    start = to_bracket(D)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for g in gens:
            w = g(v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return [from_bracket(v, D.k, D.d) for v in sorted(seen)]


# Extra generator classes beyond the orbit of E_1, with their section dimensions.
# Keyed by (k, d); each entry is a list of (class builder, dimension).
_EXTRA_GENERATOR_CLASSES = {
    (8, 2): [(lambda: anticanonical_class(8, 2), 2)],
    (7, 3): [(lambda: _half(anticanonical_class(7, 3)), 3)],
    (8, 4): [
        (lambda: _two_h_minus(8, 4), 3),
        (lambda: anticanonical_class(8, 4), 6),
    ],
}


def _half(D: DivisorClass) -> DivisorClass:
    if any(c % 2 for c in D.coeffs):
        raise LatticeError(f"class {D} is not divisible by 2")
    return DivisorClass(D.k, D.d, tuple(c // 2 for c in D.coeffs))


def _two_h_minus(k: int, d: int) -> DivisorClass:
    # 2H - 2E_1 - sum_{i >= 2} E_i
    return DivisorClass(k, d, (2, 2) + (1,) * (k - 1))


@dataclass(frozen=True)
class DegreeOneCatalogue:
    """All degree-one divisor classes with their section dimensions."""

    k: int
    d: int
    classes: tuple[tuple[DivisorClass, int], ...]

    @property
    def total_generators(self) -> int:
        return sum(dim for _, dim in self.classes)

    def all_classes(self) -> list[DivisorClass]:
        return [D for D, _ in self.classes]


def degree_one_catalogue(k: int, d: int, allow_conjectural: bool = False) -> DegreeOneCatalogue:
    """Orbit of E_1 (dimension 1 each) plus the known extra classes.

    For (8, 4) the generator list beyond the orbit data is conjectural; it is
    returned only with allow_conjectural=True.
    """
    if not is_mori_dream(k, d):
        raise NotFinitelyGeneratedError(f"Cox ring of ({k}, {d}) is not finitely generated")
    if (k, d) == (8, 4) and not allow_conjectural:
        raisemsg = "(8, 4) generator catalogue is conjectural; pass allow_conjectural=True"
        raise LatticeError(raisemsg)
    if k < 1:
        raise LatticeError("need at least one point")
    entries: list[tuple[DivisorClass, int]] = []
    for D in weyl_orbit(E(1, k, d)):
        entries.append((D, 1))
    for builder, dim in _EXTRA_GENERATOR_CLASSES.get((k, d), []):
        entries.append((builder(), dim))
    for D, _ in entries:
        if anticanonical_degree(D) != 1:
            raise LatticeError(f"catalogue class {D} does not have anticanonical degree 1")
    return DegreeOneCatalogue(k, d, tuple(entries))


def orbit_canonical_form(v: Sequence[int], k: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest bracket vector in the Weyl orbit of v."""
    if not is_mori_dream(k, d):
        raise NotFinitelyGeneratedError(f"({k}, {d}) orbit may be infinite")
    gens = weyl_generators(k, d)
    start = tuple(v)
    seen = {start}
    queue = deque([start])
    best = start
    while queue:
        u = queue.popleft()
        for g in gens:
            w = g(u)
            if w not in seen:
                seen.add(w)
                if w < best:
                    best = w
                queue.append(w)
    return best


def parse_class_label(label: str, k: int, d: int) -> DivisorClass:
    """Parse a CLI class label.

    Accepted forms (invented plumbing; the conventions are ours):
      "E3"           exceptional class E_3
      "H"            hyperplane class
      "-K"           anticanonical class
      "H123" / "H_123"   H - E_1 - E_2 - E_3 (any number of single-digit indices)
      "m0,m1,...,mk" raw coefficient vector of m0*H - sum m_i E_i
    """
    text = label.strip()
    if "," in text:
        coeffs = tuple(int(x) for x in text.split(","))
        return DivisorClass(k, d, coeffs)
    if text in ("-K", "-k"):
        return anticanonical_class(k, d)
    if text in ("H", "h"):
        return H(k, d)
    body = text.replace("_", "")
    if body and body[0] in "Ee" and body[1:].isdigit():
        return E(int(body[1:]), k, d)
    if body and body[0] in "Hh" and body[1:].isdigit():
        cls = H(k, d)
        for ch in body[1:]:
            cls = cls + (-1 * E(int(ch), k, d))
        return cls
    raise LatticeError(f"cannot parse class label {label!r}")
