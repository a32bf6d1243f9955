"""Canonical representatives for left-invariant metrics up to isometry.

Metrics on a fixed family correspond to group elements g in GL(3) through
G = g^-T g^-1 (the metric is the pushforward of the standard inner product).
Two elements give isometric metrics when they lie in the same double coset
of R* x Aut x O(3), acting by scaling and automorphisms on the left and by
orthogonal maps on the right.  ``reduce`` computes a canonical coset
representative g_lambda together with an explicit witness factorization

    rep = c * phi * g * k,   c > 0,  phi an automorphism,  k orthogonal,

whose factors are recorded step by step in a :class:`ReductionTrace`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import linalg
from .errors import InvalidFamilyError, NonSPDMetricError
from .lie_core import Family, StructureConstants, change_basis, make_family


@dataclass(frozen=True)
class Representative:
    """Canonical group element of an isometry class within a family."""

    family: Family
    lam: float
    matrix: np.ndarray


@dataclass(frozen=True)
class ReductionTrace:
    """Witness factors for rep = scalar * auto_part * g * orth."""

    scalar: float
    auto_part: np.ndarray
    orth: np.ndarray
    steps: tuple


def metric_to_group(gram: np.ndarray) -> np.ndarray:
    """A group element g with g^-T g^-1 = G, from the Cholesky factor.

    g is upper triangular with positive diagonal; any other solution
    differs by an orthogonal factor on the right.
    """
    gram = np.asarray(gram, dtype=float)
    if gram.shape != (3, 3) or not np.allclose(gram, gram.T, atol=1e-12 * max(1.0, np.abs(gram).max())):
        raise NonSPDMetricError("Gram matrix must be symmetric 3x3")
    try:
        chol = np.linalg.cholesky(gram)
    except np.linalg.LinAlgError:
        raise NonSPDMetricError("Gram matrix is not positive definite") from None
    return np.linalg.inv(chol.T)


def rep_matrix(family: Family, lam: float, exact: bool = False) -> np.ndarray:
    """The canonical group element g_lambda of a family.

    r3 and r3p_a use diag(1, 1, 1/lambda); r3_a uses the unipotent matrix
    with (3,2)-entry lambda; the single-class families h3 and r3_1 use the
    identity (lam is ignored for them).
    """
    _check_lambda(family, lam)
    one = Fraction(1) if exact else 1.0
    lam = Fraction(lam) if exact else float(lam)
    eye = np.diag([one, one, one]) if exact else np.eye(3)
    if family.tag in ("h3", "r3_1"):
        return eye
    mat = eye.copy()
    if family.tag == "r3_a":
        mat[2, 1] = lam
    else:
        mat[2, 2] = one / lam
    return mat


def _check_lambda(family: Family, lam: float) -> None:
    if family.tag == "r3" and not lam > 0:
        raise InvalidFamilyError(f"r3 requires lambda > 0, got {lam}")
    if family.tag == "r3p_a" and not lam >= 1:
        raise InvalidFamilyError(f"r3p_a requires lambda >= 1, got {lam}")
    if family.tag == "r3_a" and not np.isfinite(float(lam)):
        raise InvalidFamilyError("lambda must be finite")


def frame_constants(family: Family, lam: float, exact: bool = False) -> StructureConstants:
    """Structure constants on the Milnor frame x_i = g_lambda e_i."""
    return change_basis(make_family(family, exact=exact),
                        rep_matrix(family, lam, exact=exact))


def _transitive(family: Family) -> bool:
    return family.tag in ("h3", "r3_1") or (family.tag == "r3_a" and family.a == 1)


def reduce(family: Family, g: np.ndarray, det_tol: float = 1e-9):
    """Canonical representative and witness factorization of g's coset.

    Steps: an LQ-type factorization g k1 = L (lower triangular, positive
    diagonal); a normalizer from the subgroup F of lower-triangular
    automorphism-scalings clearing the first column and (2,2)-entry; then
    one family-specific move fixing the remaining (3,2)/(3,3) block: a
    shear for r3, a diagonal rescale for r3_a, a 2x2 polar/Cartan split
    for r3p_a.  For the single-class families (h3, r3_1, and r3_a at
    a = 1) the inverse of L itself splits into scalar times automorphism
    and the representative is the identity.

    Returns (Representative, ReductionTrace); the product
    scalar * auto_part @ g @ orth reproduces the representative matrix.
    """
    g = np.asarray(g, dtype=float)
    if g.shape != (3, 3):
        raise ValueError("group element must be a 3x3 matrix")
    lower, k1 = linalg.lower_triangular_lq(g, det_tol)
    steps = [("lq_orthogonal", k1)]

    if _transitive(family):
        m = np.linalg.inv(lower)
        steps.append(("triangular_inverse", m))
        if family.tag == "h3":
            scalar = m[0, 0] * m[1, 1] / m[2, 2]
        else:
            scalar = m[0, 0]
        phi = m / scalar
        rep = Representative(family, 1.0, np.eye(3))
        return rep, ReductionTrace(float(scalar), phi, k1, tuple(steps))

    l11, l21, l22 = lower[0, 0], lower[1, 0], lower[1, 1]
    l31, l32, l33 = lower[2, 0], lower[2, 1], lower[2, 2]
    phi1 = np.array([[l22, 0.0, 0.0],
                     [-l21, l11, 0.0],
                     [-l31, 0.0, l11]]) / (l11 * l22)
    steps.append(("f_normalizer", phi1))
    gp = phi1 @ lower
    a32, a33 = gp[2, 1], gp[2, 2]

    if family.tag == "r3":
        phi2 = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -a32, 1.0]])
        steps.append(("shear", phi2))
        lam = 1.0 / a33
        left = phi2 @ phi1
        orth = k1
    elif family.tag == "r3_a":
        phi2 = np.diag([1.0, 1.0, 1.0 / a33])
        steps.append(("diagonal_rescale", phi2))
        lam = a32 / a33
        left = phi2 @ phi1
        orth = k1
    elif family.tag == "r3p_a":
        block = np.array([[1.0, 0.0], [a32, a33]])
        u, sigma, vt = np.linalg.svd(block)
        if np.linalg.det(u) < 0:
            u[:, 1] = -u[:, 1]
            vt[1, :] = -vt[1, :]
        rot = np.eye(3)
        rot[1:, 1:] = u.T
        k2 = np.eye(3)
        k2[1:, 1:] = vt.T
        steps.append(("cartan_rotation", rot))
        steps.append(("cartan_orthogonal", k2))
        phi3 = np.diag([1.0, 1.0 / sigma[0], 1.0 / sigma[0]])
        steps.append(("block_rescale", phi3))
        lam = sigma[0] / sigma[1]
        left = phi3 @ rot @ phi1
        orth = k1 @ k2
    else:
        raise InvalidFamilyError(f"no reduction defined for {family.tag}")

    scalar = left[0, 0]
    phi = left / scalar
    rep = Representative(family, float(lam), rep_matrix(family, float(lam)))
    return rep, ReductionTrace(float(scalar), phi, orth, tuple(steps))


def witness_residual(rep: Representative, trace: ReductionTrace, g: np.ndarray) -> float:
    """max-norm of rep - scalar * auto_part @ g @ orth."""
    recon = trace.scalar * trace.auto_part @ np.asarray(g, dtype=float) @ trace.orth
    return float(np.max(np.abs(rep.matrix - recon)))


@dataclass(frozen=True)
class MilnorData:
    """Frame data of a metric: lambda, the frame scale, frame brackets."""

    lam: float
    k_scale: float
    frame_brackets: StructureConstants


def milnor_data(family: Family, gram: np.ndarray) -> MilnorData:
    """Reduce the metric with Gram matrix ``gram`` to its Milnor frame.

    ``k_scale`` is the square of the witness scalar c: with
    rep = c * phi * g * k, the frame {phi^-1 rep e_i} is orthonormal for
    the metric rescaled by 1/c^2.
    """
    g = metric_to_group(gram)
    rep, trace = reduce(family, g)
    return MilnorData(lam=rep.lam,
                      k_scale=float(trace.scalar ** 2),
                      frame_brackets=frame_constants(family, rep.lam))


def same_class(family: Family, gram1: np.ndarray, gram2: np.ndarray,
               tol: float = 1e-7) -> bool:
    """Whether two metrics reduce to the same canonical representative."""
    lam1 = reduce(family, metric_to_group(gram1))[0].lam
    lam2 = reduce(family, metric_to_group(gram2))[0].lam
    return abs(lam1 - lam2) <= tol
