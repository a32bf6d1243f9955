"""Structure constants for the three-dimensional solvable Lie algebras.

The classification used throughout the package, on a fixed basis e1, e2, e3
(all unlisted brackets vanish):

=======  ==========================================  =================
tag      nonzero brackets                            parameter range
=======  ==========================================  =================
h3       [e1,e2] = e3                                none (Heisenberg)
r3       [e1,e2] = e2 + e3,  [e1,e3] = e3            none
r3_a     [e1,e2] = e2,       [e1,e3] = a e3          -1 <= a <= 1
r3_1     r3_a at a = 1 (its own tag)                 none
r3p_a    [e1,e2] = a e2 - e3, [e1,e3] = e2 + a e3    a >= 0
=======  ==========================================  =================

Structure constants are stored as a dense (3,3,3) array ``c`` with
``[e_i, e_j] = sum_k c[i,j,k] e_k``, either as float64 or as exact
``fractions.Fraction`` entries in an object array.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import linalg
from .errors import InvalidFamilyError, SingularMatrixError

FAMILY_TAGS = ("h3", "r3", "r3_a", "r3_1", "r3p_a")

_TAG_TO_TEXT = {"h3": "h3", "r3": "r3", "r3_1": "r3_1", "r3_a": "r3a", "r3p_a": "r3pa"}
_TEXT_TO_TAG = {v: k for k, v in _TAG_TO_TEXT.items()}


@dataclass(frozen=True)
class Family:
    """A family tag plus its parameter, validated on construction."""

    tag: str
    a: float | Fraction | None = None

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise InvalidFamilyError(f"unknown family tag {self.tag!r}")
        if self.tag in ("h3", "r3", "r3_1"):
            if self.a is not None:
                raise InvalidFamilyError(f"{self.tag} takes no parameter")
        elif self.a is None:
            raise InvalidFamilyError(f"{self.tag} requires a parameter a")
        elif self.tag == "r3_a" and not -1 <= self.a <= 1:
            raise InvalidFamilyError(f"r3_a requires -1 <= a <= 1, got {self.a}")
        elif self.tag == "r3p_a" and not self.a >= 0:
            raise InvalidFamilyError(f"r3p_a requires a >= 0, got {self.a}")

    def label(self) -> str:
        """The CLI string form, e.g. ``r3a:a=0.5``."""
        text = _TAG_TO_TEXT[self.tag]
        if self.a is None:
            return text
        return f"{text}:a={float(self.a)!r}"


def parse_family(text: str, a: float | None = None) -> Family:
    """Parse a family string such as ``h3``, ``r3a:a=0.5`` or ``r3pa:a=2``.

    A parameter may ride along in the string after ``:a=`` or be supplied
    separately through ``a``; giving both (or neither, for a parametric
    family) is an error.
    """
    text = text.strip()
    if ":" in text:
        head, _, tail = text.partition(":")
        if not tail.startswith("a="):
            raise InvalidFamilyError(f"malformed family string {text!r}")
        if a is not None:
            raise InvalidFamilyError("parameter given both in string and separately")
        try:
            a = float(tail[2:])
        except ValueError:
            raise InvalidFamilyError(f"malformed parameter in {text!r}") from None
    else:
        head = text
    tag = _TEXT_TO_TAG.get(head)
    if tag is None:
        raise InvalidFamilyError(f"unknown family {head!r}")
    return Family(tag, a)


@dataclass(frozen=True)
class StructureConstants:
    """Dense structure-constant tensor of a 3-dimensional algebra."""

    c: np.ndarray

    @property
    def dim(self) -> int:
        return self.c.shape[0]

    @property
    def exact(self) -> bool:
        return self.c.dtype == object

    def to_float(self) -> "StructureConstants":
        return StructureConstants(linalg.to_float(self.c).reshape(self.c.shape))

    def nonzero(self) -> list[tuple[int, int, int, float | Fraction]]:
        """Entries (i, j, k, c_ij^k) with i < j and nonzero value."""
        n = self.dim
        return [(i, j, k, self.c[i, j, k])
                for i in range(n) for j in range(i + 1, n) for k in range(n)
                if self.c[i, j, k] != 0]


def _zeros(exact: bool) -> np.ndarray:
    if exact:
        c = np.empty((3, 3, 3), dtype=object)
        c[...] = Fraction(0)
        return c
    return np.zeros((3, 3, 3))


def _set(c: np.ndarray, i: int, j: int, k: int, value) -> None:
    c[i, j, k] = value
    c[j, i, k] = -value


def make_family(family: Family, exact: bool = False) -> StructureConstants:
    """Structure constants of a classified family.

    With ``exact=True`` the entries are Fractions (the parameter is
    converted exactly; binary floats are dyadic rationals).
    """
    a = family.a
    if exact and a is not None:
        a = Fraction(a)
    one = Fraction(1) if exact else 1.0
    c = _zeros(exact)
    if family.tag == "h3":
        _set(c, 0, 1, 2, one)
    elif family.tag == "r3":
        _set(c, 0, 1, 1, one)
        _set(c, 0, 1, 2, one)
        _set(c, 0, 2, 2, one)
    elif family.tag in ("r3_a", "r3_1"):
        _set(c, 0, 1, 1, one)
        _set(c, 0, 2, 2, one if family.tag == "r3_1" else a)
    else:  # r3p_a
        _set(c, 0, 1, 1, a)
        _set(c, 0, 1, 2, -one)
        _set(c, 0, 2, 1, one)
        _set(c, 0, 2, 2, a)
    return StructureConstants(c)


def bracket(sc: StructureConstants, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """[x, y] in coordinates, for coordinate vectors x, y."""
    n = sc.dim
    if len(x) != n or len(y) != n:
        raise ValueError("coordinate vectors must match the algebra dimension")
    x = np.asarray(x)
    y = np.asarray(y)
    return np.array([np.dot(np.dot(x, sc.c[:, :, k]), y) for k in range(n)])


def change_basis(sc: StructureConstants, h: np.ndarray) -> StructureConstants:
    """Structure constants on the new basis x_i = h e_i.

    c'_ij^k = sum_r (h^-1)[k,r] * sum_pq h[p,i] h[q,j] c[p,q,r].  The result
    is exact only when both the constants and h are exact.
    """
    h = np.asarray(h)
    n = sc.dim
    if h.shape != (n, n):
        raise ValueError(f"basis matrix must be {n}x{n}")
    exact = sc.exact and h.dtype == object
    c = sc.c
    if not exact:
        h = linalg.to_float(h)
        c = linalg.to_float(c).reshape(n, n, n)
        if abs(np.linalg.det(h)) < 1e-12:
            raise SingularMatrixError("basis change matrix is singular")
    hinv = linalg.inv(h)
    w = [np.dot(np.dot(h.T, c[:, :, r]), h) for r in range(n)]
    cprime = _zeros(exact)
    for k in range(n):
        acc = hinv[k, 0] * w[0]
        for r in range(1, n):
            acc = acc + hinv[k, r] * w[r]
        cprime[:, :, k] = acc
    return StructureConstants(cprime)


def antisymmetry_residual(sc: StructureConstants) -> float:
    """max |c_ij^k + c_ji^k|; zero for a well-formed bracket."""
    c = sc.c
    return float(max(abs(c[i, j, k] + c[j, i, k])
                     for i in range(sc.dim) for j in range(sc.dim) for k in range(sc.dim)))


def jacobi_residual(sc: StructureConstants) -> float:
    """max abs component of the Jacobi cyclic sum over basis triples."""
    n = sc.dim
    c = sc.c
    worst = 0.0
    for i, j, k in combinations(range(n), 3):
        for l in range(n):
            s = sum(c[j, k, m] * c[i, m, l]
                    + c[k, i, m] * c[j, m, l]
                    + c[i, j, m] * c[k, m, l] for m in range(n))
            worst = max(worst, abs(float(s)))
    return worst
