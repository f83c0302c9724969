"""Closed-form eigensolvers for 2x2 and 3x3 Hermitian matrices.

Every matrix this package diagonalizes has dimension 2 or 3, so instead of an
iterative general-purpose routine both solvers use exact algebraic forms: the
2x2 case reduces to a quadratic in the trace and determinant, the 3x3 case to
the trigonometric solution of the shifted characteristic cubic.  The 2x2
quadratic is evaluated on its numerically stable branch -- the larger-magnitude
root comes from the sign-matched formula and the other from the product
``det / root`` -- which keeps the small eigenvalue of a nearly rank-deficient
matrix accurate to machine precision instead of ``sqrt(eps)``.

All functions are pure and thread-safe.  NaN/Inf inputs are rejected at the
boundary; nothing downstream is expected to cope with them.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ValidationError

#: Maximum entrywise deviation from the conjugate transpose accepted as Hermitian.
HERMITICITY_TOL = 1e-12

#: Eigenvalue gap below which a 2x2 matrix is treated as a multiple of the
#: identity and the standard basis is returned as its eigenbasis.
DEGENERACY_TOL = 1e-12


def require_finite(values, what: str = "input") -> np.ndarray:
    """Return ``values`` as an ndarray, rejecting NaN or Inf entries."""
    arr = np.asarray(values)
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{what} contains NaN or Inf entries")
    return arr


def require_hermitian(matrix: np.ndarray, tol: float = HERMITICITY_TOL,
                      what: str = "matrix") -> None:
    """Raise unless ``matrix`` equals its conjugate transpose within ``tol``."""
    deviation = float(np.max(np.abs(matrix - matrix.conj().T)))
    if deviation > tol:
        raise ValidationError(
            f"{what} is not Hermitian: max deviation {deviation:.3e} exceeds {tol:g}"
        )


def _checked(matrix, dim: int) -> np.ndarray:
    m = np.asarray(matrix, dtype=complex)
    if m.shape != (dim, dim):
        raise ValidationError(f"expected a {dim}x{dim} matrix, got shape {m.shape}")
    require_finite(m, "matrix")
    require_hermitian(m)
    return m


def hermitian_eig2(matrix) -> tuple[float, float]:
    """Eigenvalues of a 2x2 Hermitian matrix, descending.

    Roots of ``x**2 - tr*x + det = 0``.  The discriminant is assembled as
    ``(a - d)**2 + 4|b|**2``, which is nonnegative by construction and free of
    cancellation; the smaller-magnitude root is recovered through the product
    of roots.
    """
    m = _checked(matrix, 2)
    a = m[0, 0].real
    d = m[1, 1].real
    b = m[0, 1]
    trace = a + d
    det = a * d - (b.real * b.real + b.imag * b.imag)
    disc = (a - d) * (a - d) + 4.0 * (b.real * b.real + b.imag * b.imag)
    root = math.sqrt(disc)
    big = 0.5 * (trace + root) if trace >= 0.0 else 0.5 * (trace - root)
    if big == 0.0:
        # trace and discriminant both vanish, so the matrix is zero.
        return (0.0, 0.0)
    other = det / big
    return (big, other) if big >= other else (other, big)


def hermitian_eigvecs2(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and orthonormal eigenvector columns, 2x2.

    When the spectrum is degenerate within :data:`DEGENERACY_TOL` the matrix
    is a multiple of the identity up to that tolerance and the standard basis
    is returned, which keeps outputs deterministic.  The second column is the
    exact orthogonal complement of the first, so the pair is orthonormal to
    machine precision regardless of conditioning.
    """
    m = _checked(matrix, 2)
    w1, w2 = hermitian_eig2(m)
    values = np.array([w1, w2])
    if w1 - w2 <= DEGENERACY_TOL:
        return values, np.eye(2, dtype=complex)
    b = m[0, 1]
    cand_a = np.array([b, w1 - m[0, 0].real], dtype=complex)
    cand_b = np.array([w1 - m[1, 1].real, b.conjugate()], dtype=complex)
    v1 = cand_a if np.linalg.norm(cand_a) >= np.linalg.norm(cand_b) else cand_b
    v1 = v1 / np.linalg.norm(v1)
    v2 = np.array([-v1[1].conjugate(), v1[0].conjugate()])
    return values, np.column_stack((v1, v2))


def _det3(m: np.ndarray) -> complex:
    return (m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
            - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
            + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0]))


def hermitian_eig3(matrix) -> tuple[float, float, float]:
    """Eigenvalues of a 3x3 Hermitian matrix, descending.

    Shift by ``trace/3``, scale so the traceless remainder ``B`` satisfies
    ``tr(B**2) = 6``, then solve the depressed cubic trigonometrically: the
    eigenvalues of ``B`` are ``2*cos(phi + 2*pi*k/3)`` with
    ``cos(3*phi) = det(B)/2``.  Only the root on the side ``sign(det B)``
    points to is taken from the cosine form -- it is the isolated one, where
    the arccosine is flat -- and the remaining close pair comes from the
    deflated characteristic quadratic on the same stable branch as the 2x2
    solver.  (Near ``|cos(3*phi)| = 1`` the arccosine has unbounded
    derivative, so reading a nearly degenerate pair off the cosine form
    splits it by ~sqrt(eps); the deflation keeps exact inputs exact.)
    """
    m = _checked(matrix, 3)
    a = m[0, 0].real
    b = m[1, 1].real
    c = m[2, 2].real
    trace = a + b + c
    q = trace / 3.0
    off2 = (abs(m[0, 1]) ** 2 + abs(m[0, 2]) ** 2 + abs(m[1, 2]) ** 2)
    p2 = (a - q) ** 2 + (b - q) ** 2 + (c - q) ** 2 + 2.0 * off2
    if p2 == 0.0:
        return (q, q, q)
    p = math.sqrt(p2 / 6.0)
    shifted = (m - q * np.eye(3)) / p
    r = _det3(shifted).real / 2.0
    r = min(1.0, max(-1.0, r))
    phi = math.acos(r) / 3.0
    if r >= 0.0:
        isolated = q + 2.0 * p * math.cos(phi)
    else:
        isolated = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    minors = ((a * b - abs(m[0, 1]) ** 2)
              + (a * c - abs(m[0, 2]) ** 2)
              + (b * c - abs(m[1, 2]) ** 2))
    pair_sum = trace - isolated
    pair_prod = minors - isolated * pair_sum
    disc = max(0.0, pair_sum * pair_sum - 4.0 * pair_prod)
    root = math.sqrt(disc)
    big = 0.5 * (pair_sum + root) if pair_sum >= 0.0 else 0.5 * (pair_sum - root)
    other = pair_prod / big if big != 0.0 else 0.0
    w1, w2, w3 = sorted((isolated, big, other), reverse=True)
    return (w1, w2, w3)
