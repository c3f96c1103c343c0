"""Dense complex linear algebra: Householder reflections and tridiagonalization.

All matrices are plain ``numpy.ndarray`` of ``complex128``.  Validation
helpers enforce the invariants (finiteness, hermiticity, unit norm,
unitarity) at the tolerances used throughout the package.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidInputError

HERMITICITY_TOL = 1e-12
UNIT_NORM_TOL = 1e-12
UNITARITY_TOL = 1e-10
SKIP_COLUMN_TOL = 1e-14


def as_complex_matrix(m) -> np.ndarray:
    """Coerce to a square complex matrix with finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InvalidInputError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise InvalidInputError("matrix entries must be finite (no NaN/Inf)")
    return a


def is_hermitian(m: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    """Hermiticity check relative to the largest entry magnitude."""
    scale = max(np.abs(m).max(), 1.0) if m.size else 1.0
    return bool(np.abs(m - m.conj().T).max() <= tol * scale)


def require_hermitian(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = as_complex_matrix(m)
    if not is_hermitian(a, tol):
        raise InvalidInputError("matrix is not hermitian within tolerance")
    return a


def is_unitary(m: np.ndarray, tol: float = UNITARITY_TOL) -> bool:
    eye = np.eye(m.shape[0], dtype=complex)
    return bool(np.abs(m.conj().T @ m - eye).max() <= tol)


def multiply(a, b) -> np.ndarray:
    """Matrix @ matrix or matrix @ vector with explicit dimension checking."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or b.ndim not in (1, 2) or a.shape[1] != b.shape[0]:
        raise InvalidInputError(
            f"dimension mismatch in multiply: {a.shape} x {b.shape}"
        )
    return a @ b


def adjoint(a) -> np.ndarray:
    return np.asarray(a, dtype=complex).conj().T


def add(a, b) -> np.ndarray:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise InvalidInputError(f"dimension mismatch in add: {a.shape} vs {b.shape}")
    return a + b


def scale(a, factor: complex) -> np.ndarray:
    return np.asarray(a, dtype=complex) * factor


def reflection_from_vector(v) -> np.ndarray:
    """Householder reflection ``I - 2|v><v|`` for a normalized complex vector.

    The result is hermitian, unitary and involutary with determinant -1;
    it maps ``v`` to ``-v`` and fixes the orthogonal hyperplane.
    """
    vec = np.asarray(v, dtype=complex)
    if vec.ndim != 1 or vec.size < 1:
        raise InvalidInputError("reflection vector must be one-dimensional")
    if not np.all(np.isfinite(vec.real)) or not np.all(np.isfinite(vec.imag)):
        raise InvalidInputError("reflection vector entries must be finite")
    norm = np.linalg.norm(vec)
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidInputError(
            f"reflection vector must have unit norm (got {norm!r})"
        )
    return np.eye(vec.size, dtype=complex) - 2.0 * np.outer(vec, vec.conj())


def tridiagonalize(h) -> tuple[np.ndarray, np.ndarray]:
    """Reduce a hermitian matrix to tridiagonal form by Householder reflections.

    Returns ``(T, Q)`` with ``T = Q^dagger H Q`` tridiagonal and ``Q`` unitary
    (a product of at most ``dim - 2`` reflections).  At step ``k`` the
    reflection annihilates the part of column ``k`` below the subdiagonal;
    the pivot shift carries the phase of the subdiagonal entry so the two
    contributions add in magnitude instead of cancelling.  A step is skipped
    when that sub-column is already negligible relative to ``|H|``.
    """
    H = require_hermitian(h)
    n = H.shape[0]
    if n < 2:
        raise InvalidInputError("tridiagonalize requires dim >= 2")
    T = H.copy()
    Q = np.eye(n, dtype=complex)
    h_norm = np.linalg.norm(H)
    if h_norm == 0.0:
        return T, Q
    for k in range(n - 2):
        if np.linalg.norm(T[k + 2:, k]) < SKIP_COLUMN_TOL * h_norm:
            continue
        x = np.zeros(n, dtype=complex)
        x[k + 1:] = T[k + 1:, k]
        x_norm = np.linalg.norm(x)
        pivot = x[k + 1]
        phase = pivot / abs(pivot) if abs(pivot) > 0.0 else 1.0
        v = x.copy()
        v[k + 1] += phase * x_norm
        v /= np.linalg.norm(v)
        R = np.eye(n, dtype=complex) - 2.0 * np.outer(v, v.conj())
        T = R @ T @ R
        Q = Q @ R
    return T, Q


def offtridiagonal_magnitude(m: np.ndarray) -> float:
    """Largest |entry| strictly outside the tridiagonal band."""
    n = m.shape[0]
    mask = np.abs(np.subtract.outer(np.arange(n), np.arange(n))) > 1
    return float(np.abs(m[mask]).max()) if mask.any() else 0.0


# --- plain-text matrix format (first line N, then N rows of a+bi entries) ---


def _format_entry(z: complex) -> str:
    return f"{z.real:.17g}{z.imag:+.17g}i"


def _parse_entry(token: str) -> complex:
    try:
        return complex(token.replace("i", "j").replace("I", "j"))
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse matrix entry {token!r}") from exc


def format_matrix_text(m) -> str:
    a = as_complex_matrix(m)
    lines = [str(a.shape[0])]
    for row in a:
        lines.append(" ".join(_format_entry(z) for z in row))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> np.ndarray:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise InvalidInputError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise InvalidInputError(
            f"first line must be the dimension, got {lines[0]!r}"
        ) from exc
    if n < 1:
        raise InvalidInputError(f"matrix dimension must be positive, got {n}")
    if len(lines) - 1 < n:
        raise InvalidInputError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for i in range(1, n + 1):
        tokens = lines[i].split()
        if len(tokens) != n:
            raise InvalidInputError(
                f"row {i} has {len(tokens)} entries, expected {n}"
            )
        rows.append([_parse_entry(tok) for tok in tokens])
    return as_complex_matrix(np.array(rows, dtype=complex))
