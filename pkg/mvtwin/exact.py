"""
Exact rational scalars, dense matrices over them, and the algebra-span
irreducibility decision.

Matrices are read-only NumPy arrays of dtype ``object`` holding
:class:`fractions.Fraction` entries, so no operation ever rounds.
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import validators as vd


logger = logging.getLogger(__name__)

RATIONAL_PATTERN = re.compile(r"\s*(?P<num>-?\d+)(?:/(?P<den>\d+))?\s*")

Scalar = Fraction
Matrix = np.ndarray


def to_fraction(x: int | str | Fraction) -> Fraction:
    """
    Convert an integer, a Fraction, or a rational literal ``[-]num/den`` or
    ``[-]num`` to a Fraction.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        m = RATIONAL_PATTERN.fullmatch(x)
        if m is None:
            raise vd.MvtwinError(f"Malformed rational literal {x!r}")
        den = int(m["den"]) if m["den"] is not None else 1
        if den == 0:
            raise vd.MvtwinError(f"Zero denominator in {x!r}")
        return Fraction(int(m["num"]), den)
    raise vd.MvtwinError(f"Cannot read {x!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """
    Serialize the given rational as ``num/den``.
    """
    return f"{q.numerator}/{q.denominator}"


def freeze(M: Matrix) -> Matrix:
    M.setflags(write=False)
    return M


def matrix(rows: Iterable[Iterable]) -> Matrix:
    """
    Build a matrix from rows of integers, Fractions or rational literals.
    """
    return freeze(np.array([[to_fraction(x) for x in row] for row in rows], dtype=object))


def vector(entries: Iterable) -> Matrix:
    return freeze(np.array([to_fraction(x) for x in entries], dtype=object))


def identity(n: int) -> Matrix:
    return matrix([[int(i == j) for j in range(n)] for i in range(n)])


def diag(entries: Sequence) -> Matrix:
    n = len(entries)
    return matrix([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])


def embed_block(n: int, i: int, block: Matrix) -> Matrix:
    """
    Return the n x n identity with the given 2 x 2 block placed at rows and
    columns ``i, i + 1`` (1-based).
    """
    M = np.array(identity(n), dtype=object)
    M[i - 1 : i + 1, i - 1 : i + 1] = np.asarray(block, dtype=object)
    return freeze(M)


def check_square(M: Matrix) -> int:
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise vd.DimensionError(f"Expected a nonempty square matrix; got shape {M.shape}")
    return M.shape[0]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A.shape[-1] != B.shape[0]:
        raise vd.DimensionError(f"Cannot multiply shapes {A.shape} and {B.shape}")
    return freeze(np.dot(A, B))


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    if A.shape != B.shape:
        raise vd.DimensionError(f"Cannot add shapes {A.shape} and {B.shape}")
    return freeze(A + B)


def mat_scale(c, A: Matrix) -> Matrix:
    return freeze(to_fraction(c) * A)


def mat_eq(A: Matrix, B: Matrix) -> bool:
    return A.shape == B.shape and bool(np.all(A == B))


def is_identity(M: Matrix) -> bool:
    return mat_eq(M, identity(check_square(M)))


def transpose(M: Matrix) -> Matrix:
    return freeze(np.array(M.T, dtype=object))


def inverse(M: Matrix) -> Matrix:
    """
    Return the inverse of the given square matrix by Gauss-Jordan
    elimination over the rationals.
    Raise a SingularMatrixError if the matrix is singular.
    """
    n = check_square(M)
    X = np.array(M, dtype=object)
    Y = np.array(identity(n), dtype=object)

    for i in range(n):
        pivot = next((j for j in range(i, n) if X[j, i] != 0), None)
        if pivot is None:
            raise vd.SingularMatrixError("Matrix is not invertible")
        if pivot != i:
            X[[i, pivot]] = X[[pivot, i]]
            Y[[i, pivot]] = Y[[pivot, i]]

        p = X[i, i]
        X[i, :] = X[i, :] / p
        Y[i, :] = Y[i, :] / p
        for j in range(n):
            if j != i and X[j, i] != 0:
                c = X[j, i]
                X[j, :] = X[j, :] - c * X[i, :]
                Y[j, :] = Y[j, :] - c * Y[i, :]

    return freeze(Y)


def conjugate(M: Matrix, P: Matrix) -> Matrix:
    """
    Return ``P^{-1} M P``.
    """
    return mat_mul(mat_mul(inverse(P), M), P)


def matrix_key(M: Matrix) -> tuple:
    """
    Return a hashable key of the given matrix.
    """
    return tuple(M.flat)


def format_matrix(M: Matrix) -> list[list[str]]:
    """
    Return the given matrix as rows of rational strings.
    """
    return [[format_rational(x) for x in row] for row in M]


class EchelonBasis:
    """
    A basis of a subspace of Q^d kept in reduced row echelon form, so that
    membership of a vector is decided by one reduction pass.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, list[Fraction]] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence[Fraction]) -> list[Fraction]:
        v = list(v)
        for p, row in self.rows.items():
            c = v[p]
            if c != 0:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def insert(self, v: Sequence[Fraction]) -> bool:
        """
        Add the given vector to the basis if it lies outside the span.
        Return True if the span grew.
        """
        v = self.reduce(v)
        p = next((i for i, x in enumerate(v) if x != 0), None)
        if p is None:
            return False

        c = v[p]
        v = [x / c for x in v]
        for q, row in self.rows.items():
            d = row[p]
            if d != 0:
                self.rows[q] = [a - d * b for a, b in zip(row, v)]
        self.rows[p] = v
        return True


def algebra_span_dimension(gens: Sequence[Matrix]) -> int:
    """
    Return the dimension of the unital algebra generated by the given square
    matrices of equal size n.

    Seed a basis with the identity and the generators, then multiply every
    basis element by every generator on the left and then on the right,
    adding each product that enlarges the span, until no product does.
    The dimension is at most n^2.
    An empty generator list spans the identity alone.
    """
    gens = list(gens)
    if not gens:
        return 1

    n = check_square(gens[0])
    for g in gens:
        if check_square(g) != n:
            raise vd.DimensionError("Generators must all have the same size")

    echelon = EchelonBasis(n * n)
    basis = []
    for M in [identity(n)] + gens:
        if echelon.insert(list(M.flat)):
            basis.append(M)

    index = 0
    while index < len(basis) and len(echelon) < n * n:
        X = basis[index]
        for g in gens:
            for product in (mat_mul(g, X), mat_mul(X, g)):
                if echelon.insert(list(product.flat)):
                    basis.append(product)
        index += 1

    logger.debug("Algebra span of %s generators of size %s: %s", len(gens), n, len(echelon))
    return len(echelon)


def is_irreducible(gens: Sequence[Matrix]) -> bool:
    """
    Decide whether the given matrices act irreducibly on C^n.
    By Burnside's theorem this holds exactly when they generate the full
    matrix algebra, whose dimension over the rationals equals that over C.
    """
    gens = list(gens)
    if not gens:
        return False
    n = check_square(gens[0])
    return algebra_span_dimension(gens) == n * n


def verify_invariant_line(v: Sequence, gens: Sequence[Matrix]) -> bool:
    """
    True if every given matrix maps the vector ``v`` to a scalar multiple
    of itself.
    Raise a DomainError if ``v`` is zero.
    """
    v = vector(v)
    p = next((i for i, x in enumerate(v) if x != 0), None)
    if p is None:
        raise vd.DomainError("Invariant line needs a nonzero vector")

    for M in gens:
        w = mat_mul(M, v)
        c = w[p] / v[p]
        if not mat_eq(w, mat_scale(c, v)):
            return False
    return True


def verify_invariant_hyperplane(w: Sequence, gens: Sequence[Matrix]) -> bool:
    """
    True if the hyperplane orthogonal to the row vector ``w`` is invariant
    under every given matrix, that is, if ``w`` spans an invariant line of
    the transposed matrices.
    """
    return verify_invariant_line(w, [transpose(M) for M in gens])
