"""Left-invariant curvature from structure constants and a Gram matrix.

The metric is determined by its Gram matrix G on the fixed basis e1,e2,e3.
An orthonormal frame is x_i = B e_i with B = L^-T from the Cholesky
factorization G = L L^T; on that frame the Levi-Civita connection has
constant coefficients given by the Koszul formula, and the Ricci operator
follows from finite sums over the frame structure constants.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonSPDMetricError
from .lie_core import StructureConstants, change_basis


@dataclass(frozen=True)
class MetricData:
    """Structure constants, Gram matrix, and an orthonormal frame matrix."""

    sc: StructureConstants
    gram: np.ndarray
    frame: np.ndarray


@dataclass(frozen=True)
class RicciResult:
    """Ricci operator on the orthonormal frame and on the canonical basis."""

    ric_frame: np.ndarray
    ric_canonical: np.ndarray
    scalar: float


def metric_data(sc: StructureConstants, gram: np.ndarray) -> MetricData:
    """Validate a Gram matrix and attach an orthonormal frame.

    Raises NonSPDMetricError unless ``gram`` is symmetric positive
    definite.  The frame satisfies B^T G B = I, with B upper triangular.
    """
    gram = np.asarray(gram, dtype=float)
    if gram.shape != (3, 3):
        raise NonSPDMetricError("Gram matrix must be 3x3")
    if not np.allclose(gram, gram.T, rtol=0.0, atol=1e-12 * max(1.0, np.abs(gram).max())):
        raise NonSPDMetricError("Gram matrix is not symmetric")
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        raise NonSPDMetricError("Gram matrix is not positive definite") from None
    frame = np.linalg.inv(chol).T
    return MetricData(sc=sc, gram=gram, frame=frame)


def connection_coeffs(c: np.ndarray) -> np.ndarray:
    """Koszul coefficients Gamma[i,j,k] on an orthonormal frame.

    For constant structure constants c on an orthonormal frame the Koszul
    formula collapses to Gamma_ij^k = (c_ij^k + c_ki^j + c_kj^i) / 2, where
    nabla_{x_i} x_j = sum_k Gamma[i,j,k] x_k.
    """
    c = np.asarray(c, dtype=float)
    return (c + np.einsum("kij->ijk", c) + np.einsum("kji->ijk", c)) / 2.0


def ricci_operator(m: MetricData) -> RicciResult:
    """Ricci operator of the left-invariant metric.

    Computed by (i) rewriting the structure constants on the orthonormal
    frame, (ii) forming the connection coefficients, (iii) contracting the
    curvature tensor R(x,y)z = nabla_x nabla_y z - nabla_y nabla_x z -
    nabla_[x,y] z over the frame.  ``ric_canonical`` is the same operator
    conjugated back to the canonical basis.
    """
    scf = change_basis(m.sc.to_float(), m.frame)
    c = scf.c
    gamma = connection_coeffs(c)
    riem = (np.einsum("jkl,ilm->ijkm", gamma, gamma)
            - np.einsum("ikl,jlm->ijkm", gamma, gamma)
            - np.einsum("ijl,lkm->ijkm", c, gamma))
    ric_frame = np.einsum("jiim->mj", riem)
    ric_canonical = m.frame @ ric_frame @ np.linalg.inv(m.frame)
    return RicciResult(ric_frame=ric_frame,
                       ric_canonical=ric_canonical,
                       scalar=float(np.trace(ric_frame)))


def ricci_closed_form(a, b, c, d) -> np.ndarray:
    """Ricci operator for [x1,x2] = a x2 + b x3, [x1,x3] = c x2 + d x3.

    The frame x1, x2, x3 is orthonormal and [x2,x3] = 0; every bracket in
    this package's families takes this shape on its Milnor frame.  Exact
    when the inputs are exact.
    """
    half = (b + c) * (b + c) / 2
    skew = (b * b - c * c) / 2
    return np.array([
        [-(a * a + d * d + half), 0 * a, 0 * a],
        [0 * a, -(a * (a + d) + skew), -(a * c + b * d)],
        [0 * a, -(a * c + b * d), -(d * (a + d) - skew)],
    ])
