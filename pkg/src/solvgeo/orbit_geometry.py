"""Orbit geometry in the space of inner products on R^3.

The ambient space is GL(3)/O(3) realized at the base point as sym(3) with
the trace form <X,Y> = tr(XY); a matrix X in gl(3) acts with value
dpi(X) = (X + X^T)/2 there.  For a Lie subalgebra u' of gl(3) the orbit of
its group through the base point has tangent space dpi(u'), and its mean
curvature vector is computed from the trace of the second fundamental
form using lifts of an orthonormal tangent basis chosen orthogonal to the
stabilizer.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .derivations import MatrixSubspace, conjugate_subspace, derivation_algebra, scalar_plus
from .lie_core import Family, make_family
from .moduli import metric_to_group, reduce

SYM_DIM = 6


def dpi(x: np.ndarray) -> np.ndarray:
    """Tangent value of the action of x at the base point."""
    x = np.asarray(x, dtype=float)
    return (x + x.T) / 2.0


def trace_form(x: np.ndarray, y: np.ndarray) -> float:
    """The ambient inner product <X,Y> = tr(XY) on sym(3)."""
    return float(np.trace(np.asarray(x) @ np.asarray(y)))


def sym_basis() -> list[np.ndarray]:
    """Orthonormal basis of sym(3) for the trace form: E_ii, then
    (E_ij + E_ji)/sqrt(2) for i < j."""
    basis = [np.diag([1.0 if k == i else 0.0 for k in range(3)]) for i in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            m = np.zeros((3, 3))
            m[i, j] = m[j, i] = 1.0 / np.sqrt(2.0)
            basis.append(m)
    return basis


@dataclass(frozen=True)
class OrbitData:
    """Tangent/normal split of an orbit with stabilizer and lifts."""

    subspace: MatrixSubspace
    tangent: tuple
    normals: tuple
    lifts: tuple
    stabilizer: tuple
    orbit_dim: int
    stab_dim: int


def orbit_data(subspace: MatrixSubspace) -> OrbitData:
    """Split u' into stabilizer and lifted tangent data at the base point.

    The tangent space is an orthonormalization of dpi(u'); the stabilizer
    is the kernel of dpi restricted to u' (antisymmetric members); each
    tangent vector gets a lift in u' chosen Frobenius-orthogonal to the
    stabilizer, which makes the lift unique and the mean curvature
    well defined on singular orbits.
    """
    b = subspace.basis
    sym = sym_basis()
    # coordinates of dpi(B_i) in the orthonormal sym basis
    p = np.array([[trace_form(dpi(bi), s) for bi in b] for s in sym])
    stab_coords = linalg.nullspace(p)
    stab_vecs = linalg.orthonormalize(
        [sum(x[i] * b[i] for i in range(len(b))).ravel() for x in stab_coords])
    stabilizer = tuple(v.reshape(3, 3) for v in stab_vecs)

    tangent_vecs = linalg.orthonormalize([dpi(bi).ravel() for bi in b])
    tangent = tuple(v.reshape(3, 3) for v in tangent_vecs)

    collected = list(tangent_vecs)
    normals = []
    for s in sym:
        w = s.ravel().copy()
        for _ in range(2):
            for v in collected:
                w -= (w @ v) * v
        nrm = np.linalg.norm(w)
        if nrm > 1e-9:
            w = w / nrm
            collected.append(w)
            normals.append(w.reshape(3, 3))

    lifts = []
    for t in tangent:
        coords = np.array([trace_form(t, s) for s in sym])
        x, *_ = np.linalg.lstsq(p, coords, rcond=None)
        lift = sum(x[i] * b[i] for i in range(len(b)))
        for s in stabilizer:
            lift = lift - np.sum(lift * s) * s
        lifts.append(lift)

    od = OrbitData(subspace=subspace, tangent=tangent, normals=tuple(normals),
                   lifts=tuple(lifts), stabilizer=stabilizer,
                   orbit_dim=len(tangent), stab_dim=len(stabilizer))
    if od.orbit_dim + od.stab_dim != subspace.dim or od.orbit_dim + len(normals) != SYM_DIM:
        raise ArithmeticError("tangent/stabilizer split does not add up; "
                              "the input basis is likely ill conditioned")
    return od


def second_fundamental_form(od: OrbitData) -> np.ndarray:
    """Components h[n,i,j] = -<dpi([A_n, X_i]), T_j> of the shape tensor.

    X_i are the stabilizer-orthogonal lifts of the orthonormal tangent
    basis T_j and A_n runs over the orthonormal normals.  Symmetry in
    (i, j) reflects closure of u' under the matrix commutator.
    """
    n_norm = len(od.normals)
    k = od.orbit_dim
    h = np.zeros((n_norm, k, k))
    for n, a in enumerate(od.normals):
        for i, x in enumerate(od.lifts):
            da = dpi(a @ x - x @ a)
            for j, t in enumerate(od.tangent):
                h[n, i, j] = -trace_form(da, t)
    return h


@dataclass(frozen=True)
class MeanCurvatureResult:
    """Mean curvature vector of an orbit at the base point."""

    h: np.ndarray
    norm: float
    per_normal: tuple
    orbit_dim: int
    stab_dim: int


def mean_curvature(subspace: MatrixSubspace) -> MeanCurvatureResult:
    """Mean curvature vector H = (1/k) trace of the second fundamental form.

    H is a symmetric matrix lying in the span of the normals; its trace
    norm vanishes exactly when the orbit is minimal.  Raises ValueError
    for a zero-dimensional orbit.
    """
    od = orbit_data(subspace)
    if od.orbit_dim == 0:
        raise ValueError("orbit is zero dimensional; mean curvature undefined")
    shape = second_fundamental_form(od)
    per_normal = []
    h = np.zeros((3, 3))
    for n, a in enumerate(od.normals):
        val = float(np.trace(shape[n]) / od.orbit_dim)
        per_normal.append((a, val))
        h = h + val * a
    return MeanCurvatureResult(h=h, norm=float(np.linalg.norm(h)),
                               per_normal=tuple(per_normal),
                               orbit_dim=od.orbit_dim, stab_dim=od.stab_dim)


def orbit_at(family: Family, g: np.ndarray) -> MeanCurvatureResult:
    """Mean curvature of the scaling-automorphism orbit through g's metric.

    The orbit of R* x Aut through the inner product of g is moved to the
    base point by conjugating span{I} + Der by g.
    """
    u = scalar_plus(derivation_algebra(make_family(family)))
    return mean_curvature(conjugate_subspace(u, g))


def congruence_check(family: Family, g1: np.ndarray, g2: np.ndarray,
                     iso: np.ndarray, samples: int = 8, tol: float = 1e-6,
                     seed: int = 0) -> bool:
    """Sampling test that ``iso`` maps the orbit of g1 onto the orbit of g2.

    Random identity-component elements exp(sum t_i B_i) of the
    scaling-automorphism group are applied to g1, pushed through ``iso``,
    and reduced; all samples must land in g2's isometry class (equal
    lambda within ``tol``).
    """
    from scipy.linalg import expm

    u = scalar_plus(derivation_algebra(make_family(family)))
    lam2 = reduce(family, np.asarray(g2, dtype=float))[0].lam
    rng = np.random.default_rng(seed)
    iso = np.asarray(iso, dtype=float)
    g1 = np.asarray(g1, dtype=float)
    for _ in range(samples):
        coeffs = rng.uniform(-0.5, 0.5, size=u.dim)
        alpha = expm(sum(coeffs[i] * u.basis[i] for i in range(u.dim)))
        lam = reduce(family, iso @ alpha @ g1)[0].lam
        if abs(lam - lam2) > tol:
            return False
    return True
