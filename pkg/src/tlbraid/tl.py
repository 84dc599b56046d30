"""The diagrammatic Temperley-Lieb algebra and the braid group's image in it.

A TL diagram on n strands is a non-crossing perfect pairing of 2n boundary
points: top endpoints 0..n-1 left to right, bottom endpoints n..2n-1 left
to right. Composition stacks one diagram above another and harvests closed
loops; LaurentPoly-weighted formal sums of diagrams form the algebra, with
each closed loop worth a factor of the loop value -A^2 - A^-2.
"""

from __future__ import annotations

from .braid import BraidWord
from .laurent import LaurentPoly, delta

ENUMERATION_MAX_N = 12

_DELTA_POWERS = [LaurentPoly.one()]


def _delta_power(k: int) -> LaurentPoly:
    while len(_DELTA_POWERS) <= k:
        _DELTA_POWERS.append(_DELTA_POWERS[-1] * delta())
    return _DELTA_POWERS[k]


def _cyclic_position(endpoint: int, n: int) -> int:
    # Boundary order walks the top left to right, then the bottom right to
    # left, so chord crossings reduce to interval interleaving.
    return endpoint if endpoint < n else 3 * n - 1 - endpoint


class PlanarPairing:
    """A non-crossing pairing of the 2n boundary points of a TL diagram."""

    __slots__ = ("size", "partner")

    def __init__(self, size: int, partner):
        p = tuple(int(x) for x in partner)
        if size < 1:
            raise ValueError("size must be >= 1")
        if len(p) != 2 * size:
            raise ValueError(f"partner array must have length {2 * size}")
        for i, j in enumerate(p):
            if not 0 <= j < 2 * size:
                raise ValueError(f"endpoint {i} pairs out of range ({j})")
            if j == i or p[j] != i:
                raise ValueError("partner must be a fixed-point-free involution")
        chords = []
        for i, j in enumerate(p):
            if i < j:
                a, b = _cyclic_position(i, size), _cyclic_position(j, size)
                chords.append((min(a, b), max(a, b)))
        for idx, (a, b) in enumerate(chords):
            for c, d in chords[idx + 1 :]:
                if (a < c < b < d) or (c < a < d < b):
                    raise ValueError("pairing has crossing chords")
        self.size = size
        self.partner = p

    def __setattr__(self, name, value):
        if hasattr(self, "partner"):
            raise AttributeError("PlanarPairing is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, PlanarPairing):
            return NotImplemented
        return self.size == other.size and self.partner == other.partner

    def __hash__(self):
        return hash((self.size, self.partner))

    def __repr__(self):
        return f"PlanarPairing({self.size}, {list(self.partner)})"

    @classmethod
    def identity(cls, n: int) -> "PlanarPairing":
        """n vertical strands: top i paired with bottom n+i."""
        return cls(n, tuple(list(range(n, 2 * n)) + list(range(n))))

    @classmethod
    def generator(cls, n: int, i: int) -> "PlanarPairing":
        """The cup-cap diagram: top i-1,i joined, bottom n+i-1,n+i joined.

        Requires n >= 2 and 1 <= i <= n-1; all other strands run vertically.
        """
        if n < 2 or not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} invalid for {n} strands")
        partner = list(range(n, 2 * n)) + list(range(n))
        partner[i - 1], partner[i] = i, i - 1
        partner[n + i - 1], partner[n + i] = n + i, n + i - 1
        return cls(n, tuple(partner))

    def compose(self, other: "PlanarPairing") -> tuple["PlanarPairing", int]:
        """Stack self above other; return (resulting pairing, closed loops).

        self's bottom boundary is glued to other's top boundary. Loops are
        the circles trapped entirely in the glued middle layer.
        """
        if not isinstance(other, PlanarPairing) or other.size != self.size:
            raise ValueError("can only compose pairings of equal size")
        n = self.size
        p1, p2 = self.partner, other.partner
        partner = [-1] * (2 * n)
        mid_seen = [False] * n
        for start in range(2 * n):
            if partner[start] != -1:
                continue
            if start < n:
                cur, in_top = p1[start], True
            else:
                cur, in_top = p2[start], False
            while True:
                if in_top:
                    if cur < n:  # surfaced at the top boundary
                        end = cur
                        break
                    j = cur - n
                    mid_seen[j] = True
                    cur, in_top = p2[j], False
                else:
                    if cur >= n:  # surfaced at the bottom boundary
                        end = cur
                        break
                    mid_seen[cur] = True
                    cur, in_top = p1[n + cur], True
            partner[start] = end
            partner[end] = start
        loops = 0
        for j0 in range(n):
            if mid_seen[j0]:
                continue
            loops += 1
            j = j0
            while not mid_seen[j]:
                mid_seen[j] = True
                j_via_top = p1[n + j] - n  # stays internal: outer paths are done
                mid_seen[j_via_top] = True
                j = p2[j_via_top]
        return PlanarPairing(n, partner), loops

    def closure_loops(self) -> int:
        """Loops of the trace closure joining top i to bottom n+i."""
        n = self.size
        p = self.partner
        seen = [False] * (2 * n)
        loops = 0
        for start in range(2 * n):
            if seen[start]:
                continue
            loops += 1
            x = start
            while not seen[x]:
                seen[x] = True
                y = p[x]
                seen[y] = True
                x = y + n if y < n else y - n
        return loops

    def to_json(self) -> dict:
        return {"n": self.size, "partner": list(self.partner)}

    @classmethod
    def from_json(cls, data: dict) -> "PlanarPairing":
        return cls(int(data["n"]), tuple(int(x) for x in data["partner"]))


def enumerate_pairings(n: int) -> list[PlanarPairing]:
    """All non-crossing pairings of 2n points (Catalan(n) of them), n <= 12.

    Returned sorted by partner array so the order is canonical.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}")

    def matchings(positions):
        if not positions:
            yield []
            return
        first = positions[0]
        for k in range(1, len(positions), 2):
            inner, outer = positions[1:k], positions[k + 1 :]
            for m1 in matchings(inner):
                for m2 in matchings(outer):
                    yield [(first, positions[k])] + m1 + m2

    def endpoint(pos):
        return pos if pos < n else 3 * n - 1 - pos

    result = []
    for matching in matchings(tuple(range(2 * n))):
        partner = [-1] * (2 * n)
        for pa, pb in matching:
            ea, eb = endpoint(pa), endpoint(pb)
            partner[ea], partner[eb] = eb, ea
        result.append(PlanarPairing(n, partner))
    result.sort(key=lambda d: d.partner)
    return result


class TLElement:
    """A formal LaurentPoly-weighted sum of TL diagrams of one size."""

    __slots__ = ("size", "_terms")

    def __init__(self, size: int, terms: dict[PlanarPairing, LaurentPoly] | None = None):
        clean = {}
        for diagram, coeff in (terms or {}).items():
            if diagram.size != size:
                raise ValueError("diagram size mismatch")
            if not coeff.is_zero():
                clean[diagram] = coeff
        self.size = size
        self._terms = clean

    def __setattr__(self, name, value):
        if hasattr(self, "_terms"):
            raise AttributeError("TLElement is immutable")
        object.__setattr__(self, name, value)

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        return cls(n, {PlanarPairing.identity(n): LaurentPoly.one()})

    @classmethod
    def generator(cls, n: int, i: int) -> "TLElement":
        return cls(n, {PlanarPairing.generator(n, i): LaurentPoly.one()})

    @property
    def terms(self) -> dict[PlanarPairing, LaurentPoly]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def scale(self, poly: LaurentPoly) -> "TLElement":
        return TLElement(self.size, {d: c * poly for d, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, TLElement) or other.size != self.size:
            return NotImplemented
        acc = dict(self._terms)
        for d, c in other._terms.items():
            acc[d] = acc[d] + c if d in acc else c
        return TLElement(self.size, acc)

    def __mul__(self, other):
        """Algebra product: compose diagrams, each trapped loop worth delta."""
        if not isinstance(other, TLElement) or other.size != self.size:
            return NotImplemented
        acc: dict[PlanarPairing, LaurentPoly] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                d, loops = d1.compose(d2)
                coeff = c1 * c2 * _delta_power(loops)
                acc[d] = acc[d] + coeff if d in acc else coeff
        return TLElement(self.size, acc)

    def __eq__(self, other):
        if not isinstance(other, TLElement):
            return NotImplemented
        return self.size == other.size and self._terms == other._terms

    def __hash__(self):
        return hash((self.size, frozenset(self._terms.items())))

    def __repr__(self):
        body = ", ".join(
            f"{d!r}: {c!r}" for d, c in sorted(self._terms.items(), key=lambda t: t[0].partner)
        )
        return f"TLElement({self.size}, {{{body}}})"

    def to_json(self) -> dict:
        pairs = sorted(self._terms.items(), key=lambda t: t[0].partner)
        return {
            "n": self.size,
            "terms": [[d.to_json(), c.to_json()] for d, c in pairs],
        }


def rep_braid_word(word: BraidWord) -> TLElement:
    """Image of a braid word in the TL algebra.

    Each positive letter maps to A*identity + A^-1*cupcap and each negative
    letter to A^-1*identity + A*cupcap; the whole word is the left-to-right
    product. Closing up the result with the Markov trace gives the bracket
    polynomial of the braid closure.
    """
    n = word.strands
    acc = TLElement.identity(n)
    for ell in word.letters:
        i = abs(ell)
        sign = 1 if ell > 0 else -1
        factor = TLElement(
            n,
            {
                PlanarPairing.identity(n): LaurentPoly.monomial(1, sign),
                PlanarPairing.generator(n, i): LaurentPoly.monomial(1, -sign),
            },
        )
        acc = acc * factor
    return acc


def markov_trace(element: TLElement) -> LaurentPoly:
    """Trace each diagram by its closure loops: a diagram with L loops
    contributes coefficient * delta^(L-1)."""
    total = LaurentPoly.zero()
    for diagram, coeff in element.terms.items():
        total = total + coeff * _delta_power(diagram.closure_loops() - 1)
    return total
