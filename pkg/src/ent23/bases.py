"""SU(2)/SU(3) generator tables and the coherence-vector codec.

Conventions, all of which downstream signs depend on:

- Both generator families are normalized to ``tr(g_i g_j) = 2 delta_ij``.
- The composite index of the qubit-qutrit space is ``3*i + j`` for qubit
  level ``i`` and qutrit level ``j`` (qubit-major, row-major).
- A 6x6 Hermitian unit-trace matrix ``rho`` is encoded as the real
  coefficients ``u`` (length 3), ``v`` (length 8) and ``beta`` (3x8)::

      u_i     = tr(rho . sigma_i x I)
      v_j     = (sqrt(3)/2) tr(rho . I x lambda_j)
      beta_ij = (3/2) tr(rho . sigma_i x lambda_j)

  and decoded as::

      rho = (1/6) (I x I + sum_i u_i sigma_i x I
                   + sqrt(3) sum_j v_j I x lambda_j
                   + sum_ij beta_ij sigma_i x lambda_j)

  Note the asymmetry: the sqrt(3) weight sits on the qutrit term only.  With
  these scalings encode/decode are exact inverses, and the reduced matrices
  are ``rho_A = (I + sum u_i sigma_i)/2`` and
  ``rho_B = (I + sqrt(3) sum v_j lambda_j)/3``.

The decoder accepts arbitrary finite coefficients; the affine map above is a
bijection on Hermitian unit-trace matrices, not on physical states, so its
output is a plain array and positivity is checked only where a
:class:`DensityMatrix` is actually constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ValidationError
from .linalg import require_finite, require_hermitian

#: Validation tolerances for density matrices.
DENSITY_HERMITICITY_TOL = 1e-10
DENSITY_TRACE_TOL = 1e-10
DENSITY_EIGENVALUE_FLOOR = -1e-10

#: Largest imaginary part tolerated in a coefficient trace before the input
#: is declared inconsistent (a non-Hermitian matrix slipped through).
TRACE_IMAG_TOL = 1e-10

_SQRT3 = math.sqrt(3.0)


def _constant(rows) -> np.ndarray:
    arr = np.array(rows, dtype=complex)
    arr.setflags(write=False)
    return arr


#: Pauli matrices sigma_1, sigma_2, sigma_3.
PAULI = (
    _constant([[0, 1], [1, 0]]),
    _constant([[0, -1j], [1j, 0]]),
    _constant([[1, 0], [0, -1]]),
)

#: Gell-Mann matrices lambda_1 .. lambda_8 in the standard convention.
GELL_MANN = (
    _constant([[0, 1, 0], [1, 0, 0], [0, 0, 0]]),
    _constant([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]]),
    _constant([[1, 0, 0], [0, -1, 0], [0, 0, 0]]),
    _constant([[0, 0, 1], [0, 0, 0], [1, 0, 0]]),
    _constant([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]]),
    _constant([[0, 0, 0], [0, 0, 1], [0, 1, 0]]),
    _constant([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]]),
    _constant(np.diag([1, 1, -2]) / _SQRT3),
)

_ID2 = np.eye(2, dtype=complex)
_ID3 = np.eye(3, dtype=complex)
_ID6 = np.eye(6, dtype=complex)

# Stacked tensor-product operator tables, built once at import.
_QUBIT_OPS = np.stack([np.kron(s, _ID3) for s in PAULI])                 # (3, 6, 6)
_QUTRIT_OPS = np.stack([np.kron(_ID2, g) for g in GELL_MANN])            # (8, 6, 6)
_PAIR_OPS = np.stack([np.stack([np.kron(s, g) for g in GELL_MANN])
                      for s in PAULI])                                   # (3, 8, 6, 6)
for _arr in (_QUBIT_OPS, _QUTRIT_OPS, _PAIR_OPS):
    _arr.setflags(write=False)


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix of dimension 2, 3 or 6."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        mat = np.array(self.matrix, dtype=complex)
        if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] not in (2, 3, 6):
            raise ValidationError(
                f"density matrix must be square of dimension 2, 3 or 6, got shape {mat.shape}"
            )
        require_finite(mat, "density matrix")
        require_hermitian(mat, DENSITY_HERMITICITY_TOL, "density matrix")
        trace = mat.trace()
        if abs(trace - 1.0) > DENSITY_TRACE_TOL:
            raise ValidationError(f"density matrix trace is {trace.real:.12g}, expected 1")
        smallest = float(np.linalg.eigvalsh(mat)[0])
        if smallest < DENSITY_EIGENVALUE_FLOOR:
            raise ValidationError(
                f"density matrix has negative eigenvalue {smallest:.3e}"
            )
        mat.setflags(write=False)
        object.__setattr__(self, "matrix", mat)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class CoherenceDecomposition:
    """Real expansion coefficients of a qubit-qutrit matrix in the generator basis.

    ``u`` is the Bloch vector of the qubit subsystem, ``v`` the coherence
    vector of the qutrit subsystem and ``beta`` the 3x8 correlation tensor.
    """

    u: np.ndarray
    v: np.ndarray
    beta: np.ndarray

    def __post_init__(self) -> None:
        u = np.array(self.u, dtype=float)
        v = np.array(self.v, dtype=float)
        beta = np.array(self.beta, dtype=float)
        if u.shape != (3,) or v.shape != (8,) or beta.shape != (3, 8):
            raise ValidationError(
                f"expected shapes (3,), (8,), (3, 8); got {u.shape}, {v.shape}, {beta.shape}"
            )
        for arr, name in ((u, "u"), (v, "v"), (beta, "beta")):
            require_finite(arr, name)
            arr.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "beta", beta)


def _as_matrix6(rho) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        if rho.dim != 6:
            raise ValidationError(f"expected a 6-dimensional matrix, got dim {rho.dim}")
        return rho.matrix
    mat = np.asarray(rho, dtype=complex)
    if mat.shape != (6, 6):
        raise ValidationError(f"expected a 6x6 matrix, got shape {mat.shape}")
    require_finite(mat, "matrix")
    return mat


def decompose(rho) -> CoherenceDecomposition:
    """Extract the coherence-vector coefficients of a 6x6 matrix.

    Accepts a :class:`DensityMatrix` or a raw Hermitian array (the decoder's
    output never re-enters as a validated state, so the raw form keeps the
    round trip testable on unphysical coefficients).  Each coefficient trace
    must be real within :data:`TRACE_IMAG_TOL`; a larger imaginary part means
    the input was not Hermitian and raises :class:`ConsistencyError`.
    """
    mat = _as_matrix6(rho)
    raw_u = np.einsum("ab,kba->k", mat, _QUBIT_OPS)
    raw_v = np.einsum("ab,kba->k", mat, _QUTRIT_OPS)
    raw_beta = np.einsum("ab,kjba->kj", mat, _PAIR_OPS)
    worst_imag = max(
        float(np.max(np.abs(raw_u.imag))),
        float(np.max(np.abs(raw_v.imag))),
        float(np.max(np.abs(raw_beta.imag))),
    )
    if worst_imag > TRACE_IMAG_TOL:
        raise ConsistencyError(
            f"coefficient traces have imaginary part {worst_imag:.3e}; "
            "input matrix is not Hermitian"
        )
    return CoherenceDecomposition(
        u=raw_u.real,
        v=(_SQRT3 / 2.0) * raw_v.real,
        beta=1.5 * raw_beta.real,
    )


def reconstruct(coeffs: CoherenceDecomposition) -> np.ndarray:
    """Rebuild the 6x6 matrix encoded by ``coeffs``.

    The result is Hermitian with unit trace by construction.  Positivity is
    not checked: arbitrary coefficients need not describe a physical state.
    Wrap the result in :class:`DensityMatrix` when a validated state is needed.
    """
    mat = (_ID6
           + np.einsum("k,kab->ab", coeffs.u, _QUBIT_OPS)
           + _SQRT3 * np.einsum("k,kab->ab", coeffs.v, _QUTRIT_OPS)
           + np.einsum("kj,kjab->ab", coeffs.beta, _PAIR_OPS))
    return mat / 6.0


def reduced_a(rho_ab: DensityMatrix) -> DensityMatrix:
    """Qubit reduced density matrix: trace out the qutrit."""
    if not isinstance(rho_ab, DensityMatrix) or rho_ab.dim != 6:
        raise ValidationError("reduced_a expects a 6-dimensional DensityMatrix")
    blocks = rho_ab.matrix.reshape(2, 3, 2, 3)
    return DensityMatrix(np.einsum("ijkj->ik", blocks))


def reduced_b(rho_ab: DensityMatrix) -> DensityMatrix:
    """Qutrit reduced density matrix: trace out the qubit."""
    if not isinstance(rho_ab, DensityMatrix) or rho_ab.dim != 6:
        raise ValidationError("reduced_b expects a 6-dimensional DensityMatrix")
    blocks = rho_ab.matrix.reshape(2, 3, 2, 3)
    return DensityMatrix(np.einsum("ijik->jk", blocks))
