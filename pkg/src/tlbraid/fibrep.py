"""The golden-ratio representation of the Temperley-Lieb algebra on
Fibonacci sequence spaces, and the unitary braid representation it induces.

States of the n-label space are strings over {P, *} with no two adjacent
stars, read as if flanked by P on both ends; there are f_{n+1} of them
(f_0 = f_1 = 1). Temperley-Lieb generators U_1 .. U_{n+1} of the algebra
on n+2 strands act by a local three-symbol window rule, and braid
generators act as A*I + A^-1*U_i with A on the unit circle. At loop value
+-golden ratio with a matching phase the braid action is unitary.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

GOLDEN_RATIO = (1.0 + math.sqrt(5.0)) / 2.0
FIBONACCI_PHASE = 3.0 * math.pi / 5.0

SEQUENCE_MAX_N = 25  # f_26 = 196418 strings; enumeration stays snappy
MATRIX_MAX_N = 12  # dense matrices up to dimension f_13 = 377


def fib_dim(n: int) -> int:
    """Dimension f_{n+1} of the length-n sequence space (f_0 = f_1 = 1)."""
    if n < 1:
        raise ValueError("sequence length must be >= 1")
    prev, cur = 1, 1
    for _ in range(n):
        prev, cur = cur, prev + cur
    return cur


class FibBasis:
    """The ordered basis of length-n admissible strings, P before *."""

    __slots__ = ("n", "sequences", "_index")

    def __init__(self, n: int, sequences: tuple[str, ...]):
        self.n = n
        self.sequences = sequences
        self._index = {seq: k for k, seq in enumerate(sequences)}

    def __setattr__(self, name, value):
        if hasattr(self, "_index"):
            raise AttributeError("FibBasis is immutable")
        object.__setattr__(self, name, value)

    def __len__(self):
        return len(self.sequences)

    def __iter__(self):
        return iter(self.sequences)

    def __getitem__(self, k):
        return self.sequences[k]

    def index(self, seq: str) -> int:
        return self._index[seq]

    def __repr__(self):
        return f"FibBasis(n={self.n}, dim={len(self.sequences)})"


@lru_cache(maxsize=None)
def fib_sequences(n: int) -> FibBasis:
    """All length-n strings over {P, *} with no two adjacent stars.

    Lexicographic with P < *, so e.g. n=2 lists PP, P*, *P. The count is
    always fib_dim(n). Supports 1 <= n <= 25.
    """
    if not 1 <= n <= SEQUENCE_MAX_N:
        raise ValueError(f"sequence enumeration supports 1 <= n <= {SEQUENCE_MAX_N}")
    out: list[str] = []

    def extend(prefix: list[str]):
        if len(prefix) == n:
            out.append("".join(prefix))
            return
        prefix.append("P")
        extend(prefix)
        prefix.pop()
        if not prefix or prefix[-1] != "*":
            prefix.append("*")
            extend(prefix)
            prefix.pop()

    extend([])
    return FibBasis(n, tuple(out))


@dataclass(frozen=True)
class ModelParams:
    """Constants of the sequence-space representation.

    delta is the loop value, a = 1/delta and b = sqrt(1 - delta^-2) are the
    window-rule couplings, a_phase is the argument of the bracket variable
    A on the unit circle, and (lam, mu) are the two local exchange
    eigenvalues with mu = -lam^-3. Build instances with make_params or
    fibonacci_params rather than directly.
    """

    delta: float
    a: float
    b: float
    a_phase: float
    lam: complex
    mu: complex


def compatible_phase(delta: float) -> float:
    """A phase theta with -2*cos(2*theta) == delta, when one exists.

    Prefers the classic 3*pi/5 at the golden point; for |delta| <= 2 picks
    the principal solution, and falls back to 3*pi/5 when no unit-circle
    phase can reproduce delta.
    """
    if abs(delta - GOLDEN_RATIO) < 1e-9:
        return FIBONACCI_PHASE
    if abs(delta) <= 2.0:
        return 0.5 * math.acos(max(-1.0, min(1.0, -delta / 2.0)))
    return FIBONACCI_PHASE


def make_params(
    delta: float, a_phase: float | None = None, lam: complex | None = None
) -> ModelParams:
    """Build ModelParams for a given loop value.

    Requires delta^2 >= 1 so b is real. When a_phase is omitted a phase
    compatible with delta is chosen; when lam is omitted it defaults to
    conj(A), the exchange eigenvalue convention under which
    delta = lam*(mu - lam) holds at every compatible phase.
    """
    if delta * delta < 1.0:
        raise ValueError("b = sqrt(1 - delta^-2) requires delta^2 >= 1")
    a = 1.0 / delta
    b = math.sqrt(1.0 - a * a)
    if a_phase is None:
        a_phase = compatible_phase(delta)
    bracket_a = cmath.exp(1j * a_phase)
    if lam is None:
        lam = bracket_a.conjugate()
    lam = complex(lam)
    if abs(abs(lam) - 1.0) > 1e-12:
        raise ValueError("lam must have unit modulus")
    mu = -(lam ** -3)
    return ModelParams(delta=delta, a=a, b=b, a_phase=a_phase, lam=lam, mu=mu)


def fibonacci_params(sign: int = 1, a_phase: float | None = None) -> ModelParams:
    """Parameters at loop value sign * golden ratio (sign is +1 or -1)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return make_params(sign * GOLDEN_RATIO, a_phase)


_UNIFORM = "uniform"
_LITERAL = "literal"


def tl_generator_matrix(
    n: int, i: int, params: ModelParams, right_end: str = _UNIFORM
) -> np.ndarray:
    """Matrix of U_i (1 <= i <= n+1) on fib_sequences(n), columns acting.

    The window rule pads the string x to y = "*P" + x + "P" and lets U_i
    read (y[i-1], y[i], y[i+1]), rewriting the center:

        (P, *, P) -> a*(P, *, P) + b*(P, P, P)
        (P, P, P) -> b*(P, *, P) + (delta - a)*(P, P, P)
        (*, P, *) -> delta * unchanged
        (*, P, P) and (P, P, *) -> 0

    (delta - a equals delta*b^2.) The leading "*P" padding only ever meets
    the two diagonal rules, so the flanks are never rewritten.
    right_end="literal" instead kills the (P, *, P) window at the last
    position; that variant breaks U^2 = delta*U and is kept purely as a
    diagnostic.
    """
    if right_end not in (_UNIFORM, _LITERAL):
        raise ValueError(f"right_end must be {_UNIFORM!r} or {_LITERAL!r}")
    if not 1 <= n <= MATRIX_MAX_N:
        raise ValueError(f"matrices support 1 <= n <= {MATRIX_MAX_N}")
    if not 1 <= i <= n + 1:
        raise ValueError(f"generator index {i} out of range 1..{n + 1}")
    basis = fib_sequences(n)
    dlt, a, b = params.delta, params.a, params.b
    dbb = dlt - a  # delta*b^2, via the exact identity delta*(1 - 1/delta^2)
    mat = np.zeros((len(basis), len(basis)))
    for col, seq in enumerate(basis.sequences):
        ext = "*P" + seq + "P"
        left, center, right = ext[i - 1], ext[i], ext[i + 1]
        if center == "*":
            # neighbors of a star are forced to P, so the window is (P,*,P)
            if right_end == _LITERAL and i == n + 1:
                continue
            mat[col, col] += a
            flipped = seq[: i - 2] + "P" + seq[i - 1 :]
            mat[basis.index(flipped), col] += b
        elif left == "P" and right == "P":
            mat[col, col] += dbb
            starred = seq[: i - 2] + "*" + seq[i - 1 :]
            mat[basis.index(starred), col] += b
        elif left == "*" and right == "*":
            mat[col, col] += dlt
        # (*,P,P) and (P,P,*) windows contribute nothing
    return mat


def braid_generator_matrix(
    n: int, i: int, params: ModelParams, inverse: bool = False
) -> np.ndarray:
    """Braid generator A*I + A^-1*U_i (swap the weights when inverse)."""
    u = tl_generator_matrix(n, i, params)
    phase = cmath.exp(1j * params.a_phase)
    ci, cu = (phase.conjugate(), phase) if inverse else (phase, phase.conjugate())
    return ci * np.eye(len(u), dtype=complex) + cu * u


def braid_word_matrix(word, basis_n: int, params: ModelParams) -> np.ndarray:
    """Left-to-right product of generator matrices for a braid word.

    The word must live on basis_n + 2 strands: the algebra on n+2 strands
    is what acts on length-n sequences.
    """
    if word.strands != basis_n + 2:
        raise ValueError(
            f"word on {word.strands} strands needs basis_n = {word.strands - 2}"
        )
    dim = fib_dim(basis_n)
    mat = np.eye(dim, dtype=complex)
    for ell in word.letters:
        mat = mat @ braid_generator_matrix(basis_n, abs(ell), params, inverse=ell < 0)
    return mat


def f_matrix(params: ModelParams) -> np.ndarray:
    """The 2x2 basis-change involution [[a, b], [b, -a]] on {|*>, |P>}."""
    a, b = params.a, params.b
    return np.array([[a, b], [b, -a]])


def r_matrix(params: ModelParams) -> np.ndarray:
    """The local exchange matrix diag(mu, lam) on {|*>, |P>}.

    With the default lam = conj(A) at the golden point this is
    diag(e^(4*pi*i/5), -e^(2*pi*i/5)), the classic Fibonacci braiding
    eigenvalues; it coincides with the inverse braid generator on one
    label, basis order swapped.
    """
    return np.array([[params.mu, 0.0], [0.0, params.lam]], dtype=complex)


def theta_validity(theta: float) -> bool:
    """Whether b is real at phase theta: cos(2*theta)^2 >= 1/4.

    True exactly on [0, pi/6] u [pi/3, 2pi/3] u [5pi/6, 7pi/6] u
    [4pi/3, 5pi/3] modulo 2pi, boundaries included (up to float slack).
    """
    return math.cos(2.0 * theta) ** 2 >= 0.25 - 1e-12


@dataclass(frozen=True, eq=False)
class ThreeStrandFamily:
    """The one-parameter family of 2x2 three-strand representations."""

    theta: float
    delta: float
    u: np.ndarray
    f: np.ndarray
    v: np.ndarray
    r: np.ndarray
    s: np.ndarray


def three_strand_family(theta: float) -> ThreeStrandFamily:
    """2x2 matrices generating the three-strand braid representation.

    On basis order {|*>, |P>}: U = diag(delta, 0), F the involution from
    f_matrix, V = F U F, and the braid generator pair R = lam*I +
    lam^-1*U, S = F R F with lam = e^(i*theta). Valid only where
    theta_validity holds; delta = -2*cos(2*theta).
    """
    if not theta_validity(theta):
        raise ValueError(
            f"theta = {theta!r} invalid: needs cos(2*theta)^2 >= 1/4 for real b"
        )
    dlt = -2.0 * math.cos(2.0 * theta)
    a = 1.0 / dlt
    b = math.sqrt(max(0.0, 1.0 - a * a))
    u = np.array([[dlt, 0.0], [0.0, 0.0]])
    f = np.array([[a, b], [b, -a]])
    v = f @ u @ f
    lam = cmath.exp(1j * theta)
    r = lam * np.eye(2, dtype=complex) + lam.conjugate() * u
    s = f @ r @ f
    return ThreeStrandFamily(theta=theta, delta=dlt, u=u, f=f, v=v, r=r, s=s)


@dataclass(frozen=True)
class RelationCheck:
    name: str
    residual: float
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    """Relation-by-relation residuals for one parameter point."""

    n: int
    delta: float
    tol: float
    checks: tuple[RelationCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _max_abs(values) -> float:
    worst = 0.0
    for m in values:
        if m.size:
            worst = max(worst, float(np.max(np.abs(m))))
    return worst


def verify_model(
    n: int, params: ModelParams, tol: float = 1e-10, right_end: str = _UNIFORM
) -> VerifyReport:
    """Check every defining relation of the representation at one point.

    Builds U_1 .. U_{n+1} on the length-n space and reports max-entry
    residuals for the Temperley-Lieb relations, symmetry, unitarity and
    the braid relations. All residuals pass at delta = +-golden ratio with
    a compatible phase; a generic delta fails the U_i U_(i+-1) U_i = U_i
    row, which is the point of running it as a negative control.
    """
    us = [tl_generator_matrix(n, i, params, right_end) for i in range(1, n + 2)]
    rhos = [braid_generator_matrix(n, i, params) for i in range(1, n + 2)]
    rho_invs = [
        braid_generator_matrix(n, i, params, inverse=True) for i in range(1, n + 2)
    ]
    dim = len(us[0])
    eye = np.eye(dim, dtype=complex)
    dlt = params.delta

    checks = []

    def add(name, residuals):
        worst = _max_abs(residuals)
        checks.append(RelationCheck(name, worst, worst <= tol))

    add("U_i^2 = delta U_i", [u @ u - dlt * u for u in us])
    add(
        "U_i U_j U_i = U_i (|i-j| = 1)",
        [
            us[i] @ us[j] @ us[i] - us[i]
            for i in range(len(us))
            for j in (i - 1, i + 1)
            if 0 <= j < len(us)
        ],
    )
    add(
        "U_i U_j = U_j U_i (|i-j| > 1)",
        [
            us[i] @ us[j] - us[j] @ us[i]
            for i in range(len(us))
            for j in range(i + 2, len(us))
        ],
    )
    add("U_i symmetric", [u - u.T for u in us])
    add("rho_i unitary", [r @ r.conj().T - eye for r in rhos])
    add("rho_i rho_i^-1 = I", [r @ ri - eye for r, ri in zip(rhos, rho_invs)])
    add(
        "rho_i rho_j rho_i = rho_j rho_i rho_j (|i-j| = 1)",
        [
            rhos[i] @ rhos[i + 1] @ rhos[i] - rhos[i + 1] @ rhos[i] @ rhos[i + 1]
            for i in range(len(rhos) - 1)
        ],
    )
    add(
        "rho_i rho_j = rho_j rho_i (|i-j| > 1)",
        [
            rhos[i] @ rhos[j] - rhos[j] @ rhos[i]
            for i in range(len(rhos))
            for j in range(i + 2, len(rhos))
        ],
    )
    return VerifyReport(n=n, delta=dlt, tol=tol, checks=tuple(checks))
