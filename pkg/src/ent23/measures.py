"""Entanglement measures for bipartite pure states with a qubit on side A.

The central quantity is the concurrence, computed here along three routes
that share no code path:

- ``concurrence_amplitudes``: directly from the 2x2 minors of the amplitude
  grid,
- ``concurrence_bloch``: from the norm of the qubit Bloch vector extracted by
  the coherence-vector codec,
- ``concurrence_schmidt``: from the Schmidt coefficients, themselves obtained
  by closed-form diagonalization of the qubit reduced matrix.

For any normalized state all three agree to floating precision away from the
``C = 0`` boundary (the Bloch and Schmidt forms take a square root of a
quantity that vanishes quadratically there, so on exact product states their
absolute error grows to ``sqrt(eps)``; the amplitude form has no such
amplification).  The entanglement of formation follows from the concurrence
through the binary entropy and equals the Von Neumann entropy of either
reduced state, which this module also computes as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .bases import DensityMatrix, decompose, reduced_a
from .errors import ValidationError
from .linalg import hermitian_eig2, hermitian_eig3, hermitian_eigvecs2, require_finite

#: Construction tolerance on the squared norm of a pure state.
STATE_NORM_TOL = 1e-9

#: Slack accepted on the domain edges of entropy-like functions.
DOMAIN_TOL = 1e-12

#: Schmidt coefficient below which a state is treated as a product state:
#: the coefficient is flushed to exactly zero and the second partner-side
#: vector is completed by orthonormal extension.  Forming the reduced matrix
#: squares the small singular value, so on an exact product state the
#: eigenvalue route returns noise of order sqrt(eps) ~ 1.3e-8 rather than
#: zero; the threshold sits above that floor.
SCHMIDT_ZERO_TOL = 5e-8

#: Magnitude below which a component is ignored when fixing a vector's phase.
PHASE_TOL = 1e-12


@dataclass(frozen=True)
class PureState:
    """Normalized pure state of a (2, d_b) system, d_b in {2, 3}.

    ``amplitudes[i, j]`` is the coefficient of qubit level ``i`` and partner
    level ``j``; the flattened (composite) index is ``d_b * i + j``.
    """

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = np.array(self.amplitudes, dtype=complex)
        if amp.shape not in ((2, 2), (2, 3)):
            raise ValidationError(
                f"amplitude grid must have shape (2, 2) or (2, 3), got {amp.shape}"
            )
        require_finite(amp, "amplitudes")
        norm_sq = float(np.sum(amp.real ** 2 + amp.imag ** 2))
        if abs(norm_sq - 1.0) > STATE_NORM_TOL:
            raise ValidationError(
                f"state is not normalized: sum of |a|^2 is {norm_sq:.12g}"
            )
        amp.setflags(write=False)
        object.__setattr__(self, "amplitudes", amp)

    @property
    def d_b(self) -> int:
        return self.amplitudes.shape[1]

    @property
    def dims(self) -> tuple[int, int]:
        return (2, self.d_b)

    def vector(self) -> np.ndarray:
        """Amplitudes flattened by composite index ``d_b * i + j``."""
        return self.amplitudes.reshape(-1).copy()

    def density(self) -> DensityMatrix:
        """Projector onto this state's ray, normalized to unit trace."""
        vec = self.amplitudes.reshape(-1)
        outer = np.outer(vec, vec.conj())
        return DensityMatrix(outer / outer.trace().real)


@dataclass(frozen=True)
class SchmidtForm:
    """Two-term Schmidt decomposition ``k1 |x1>|y1> + k2 |x2>|y2>``."""

    k1: float
    k2: float
    x1: np.ndarray
    x2: np.ndarray
    y1: np.ndarray
    y2: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Amplitude grid rebuilt from the decomposition."""
        return (self.k1 * np.outer(self.x1, self.y1)
                + self.k2 * np.outer(self.x2, self.y2))


@dataclass(frozen=True)
class EntanglementReport:
    """Every measure of one state, each field computed by its own route."""

    c_amplitude: float
    c_bloch: float
    c_schmidt: float
    eof: float
    vn_entropy_a: float
    u_norm: float
    v_norm: float
    k1: float
    k2: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def embed_qutrit(psi: PureState) -> PureState:
    """View a qubit-qubit state as qubit-qutrit by appending a zero column."""
    if psi.d_b == 3:
        return psi
    padded = np.zeros((2, 3), dtype=complex)
    padded[:, :2] = psi.amplitudes
    return PureState(padded)


def concurrence_amplitudes(psi: PureState) -> float:
    """Concurrence from the 2x2 minors of the amplitude grid.

    Twice the root-sum-square of the moduli of all 2x2 minors; for a 2x2
    state there is a single minor and this reduces to ``2 |a00 a11 - a01 a10|``.
    """
    a = psi.amplitudes
    if psi.d_b == 2:
        return min(1.0, 2.0 * abs(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]))
    m01 = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
    m20 = a[0, 2] * a[1, 0] - a[0, 0] * a[1, 2]
    m12 = a[0, 1] * a[1, 2] - a[0, 2] * a[1, 1]
    c = 2.0 * math.sqrt(abs(m01) ** 2 + abs(m20) ** 2 + abs(m12) ** 2)
    return min(1.0, c)


def concurrence_bloch(psi: PureState) -> float:
    """Concurrence from the qubit Bloch vector, ``sqrt(1 - |u|**2)``.

    ``u`` comes from the coherence-vector codec applied to the state's
    projector; qubit-qubit states are embedded as qubit-qutrit first.  The
    argument of the root is clamped at zero against rounding.
    """
    coeffs = decompose(embed_qutrit(psi).density())
    u_sq = float(coeffs.u @ coeffs.u)
    return math.sqrt(max(0.0, 1.0 - u_sq))


def _canonical_phase(vec: np.ndarray) -> np.ndarray:
    """Rotate a global phase so the first non-tiny component is real positive."""
    for comp in vec:
        if abs(comp) > PHASE_TOL:
            return vec * (comp.conjugate() / abs(comp))
    return vec


def _orthonormal_extension(y1: np.ndarray) -> np.ndarray:
    """First standard basis vector orthonormalized against unit vector ``y1``.

    At most one basis vector lies within distance 0.5 of the ray of ``y1``,
    so the scan always terminates on index 0 or 1.
    """
    for m in range(len(y1)):
        candidate = np.zeros(len(y1), dtype=complex)
        candidate[m] = 1.0
        candidate -= y1 * y1[m].conjugate()
        residual = np.linalg.norm(candidate)
        if residual > 0.5:
            return _canonical_phase(candidate / residual)
    raise AssertionError("no basis vector is independent of y1")


def schmidt_decompose(psi: PureState) -> SchmidtForm:
    """Two-term Schmidt decomposition of a (2, d_b) pure state.

    The squared coefficients are the eigenvalues of the qubit reduced matrix
    ``A A^+`` (``A`` the amplitude grid), obtained in closed form; they solve
    ``x**2 - x + C**2/4 = 0``.  The qubit vectors are the corresponding
    eigenvectors and the partner vectors follow as
    ``y_i = conj(A^+ x_i) / k_i``, which makes
    ``k1 x1 (x) y1 + k2 x2 (x) y2`` reproduce the amplitudes exactly.

    Deterministic conventions: each ``x_i`` carries a real positive leading
    component (the ``y_i`` phases are then fixed by the formula above, which
    is what keeps the reconstruction phase-exact); a degenerate spectrum
    yields the standard basis on the qubit side; a ``k2`` at or below
    :data:`SCHMIDT_ZERO_TOL` is indistinguishable from the eigenvalue noise
    of a product state and is flushed to exactly zero, with the undefined
    ``y2`` completed as the first standard basis vector orthonormalized
    against ``y1``.
    """
    a = psi.amplitudes
    rho_a = a @ a.conj().T
    rho_a = 0.5 * (rho_a + rho_a.conj().T)
    values, vectors = hermitian_eigvecs2(rho_a)
    k1 = math.sqrt(min(1.0, max(0.0, float(values[0]))))
    k2 = math.sqrt(min(1.0, max(0.0, float(values[1]))))
    x1 = _canonical_phase(vectors[:, 0])
    x2 = _canonical_phase(vectors[:, 1])

    y1 = a.T @ x1.conj() / k1          # k1 >= 1/sqrt(2), never zero
    y1 = y1 / np.linalg.norm(y1)
    if k2 > SCHMIDT_ZERO_TOL:
        y2 = a.T @ x2.conj() / k2
        y2 = y2 - y1 * (y1.conj() @ y2)
        y2 = y2 / np.linalg.norm(y2)
    else:
        k2 = 0.0
        y2 = _orthonormal_extension(y1)

    for arr in (x1, x2, y1, y2):
        arr.setflags(write=False)
    return SchmidtForm(k1=k1, k2=k2, x1=x1, x2=x2, y1=y1, y2=y2)


def concurrence_schmidt(form: SchmidtForm) -> float:
    """Concurrence from the Schmidt coefficients, ``2 k1 k2``."""
    return min(1.0, 2.0 * form.k1 * form.k2)


def binary_entropy(x: float) -> float:
    """Entropy in bits of the distribution ``(x, 1 - x)``.

    The endpoint convention ``0 log 0 = 0`` applies; inputs within
    :data:`DOMAIN_TOL` outside [0, 1] are clamped, anything further out is a
    domain error.
    """
    if x < -DOMAIN_TOL or x > 1.0 + DOMAIN_TOL:
        raise ValidationError(f"binary entropy argument {x!r} is outside [0, 1]")
    x = min(1.0, max(0.0, x))
    if x == 0.0 or x == 1.0:
        return 0.0
    return -(x * math.log2(x) + (1.0 - x) * math.log2(1.0 - x))


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation of a pure state with concurrence ``c``.

    ``h((1 + sqrt(1 - c**2)) / 2)`` with the root argument clamped at zero;
    strictly increasing from 0 at ``c = 0`` to 1 at ``c = 1``.
    """
    if c < -DOMAIN_TOL or c > 1.0 + DOMAIN_TOL:
        raise ValidationError(f"concurrence {c!r} is outside [0, 1]")
    c = min(1.0, max(0.0, c))
    return binary_entropy(0.5 * (1.0 + math.sqrt(max(0.0, 1.0 - c * c))))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """Entropy in bits of a dimension-2 or dimension-3 density matrix.

    Eigenvalues come from the closed-form solvers and are clamped to [0, 1]
    before the ``p log2 p`` sum.
    """
    if not isinstance(rho, DensityMatrix) or rho.dim not in (2, 3):
        raise ValidationError("entropy expects a DensityMatrix of dimension 2 or 3")
    # DensityMatrix tolerates a larger hermiticity deviation than the
    # eigensolvers; hand them the exactly Hermitian part.
    matrix = 0.5 * (rho.matrix + rho.matrix.conj().T)
    if rho.dim == 2:
        eigenvalues = hermitian_eig2(matrix)
    else:
        eigenvalues = hermitian_eig3(matrix)
    total = 0.0
    for p in eigenvalues:
        p = min(1.0, max(0.0, p))
        if p > 0.0:
            total -= p * math.log2(p)
    return total


def full_report(psi: PureState) -> EntanglementReport:
    """Compute every measure of ``psi``, each along its own route.

    No field is copied from another: the three concurrences, the
    entanglement of formation (from the amplitude-route concurrence) and the
    subsystem entropy are all evaluated independently so that any
    disagreement between them is visible to the verification layer rather
    than masked here.
    """
    embedded = embed_qutrit(psi)
    rho_ab = embedded.density()
    coeffs = decompose(rho_ab)
    form = schmidt_decompose(psi)
    c_amp = concurrence_amplitudes(psi)
    return EntanglementReport(
        c_amplitude=c_amp,
        c_bloch=concurrence_bloch(psi),
        c_schmidt=concurrence_schmidt(form),
        eof=eof_from_concurrence(c_amp),
        vn_entropy_a=von_neumann_entropy(reduced_a(rho_ab)),
        u_norm=float(np.linalg.norm(coeffs.u)),
        v_norm=float(np.linalg.norm(coeffs.v)),
        k1=form.k1,
        k2=form.k2,
    )
