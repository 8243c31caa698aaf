"""Exact invariants of the total space X of a surface bundle F -> X -> B.

    H_1(X) = H_1(B) + H_1(F) / <(M_k - I) x>       (Z^{2h} plus coinvariants)

where M_k runs over the action matrices of the 2h monodromy words. The
signature comes from the Meyer cocycle summed along the relator.

Smith normal form works on numpy object arrays (Python ints, no overflow)
with the smallest nonzero entry as pivot. The Meyer form is evaluated with
sympy rationals; its signature is read off the characteristic polynomial
with Descartes' rule, which is exact for symmetric matrices.
"""
from __future__ import annotations

import logging
from math import gcd

import numpy as np
import sympy

from surface_bundles.enums import VerificationLevel
from surface_bundles.errors import PreconditionError, VerificationError
from surface_bundles.models import AbelianGroupInvariants, IntMatrix, MonodromyFactorization, SpMatrix
from surface_bundles.models.matrices import chain_form, identity_array
from surface_bundles.mcg import action_array, relator_sequence

logger = logging.getLogger(__name__)


# ─────────────────────────────── Smith normal form ───────────────────────────────

def _smallest_nonzero(a: np.ndarray, t: int) -> tuple[int, int] | None:
    best = None
    rows, cols = a.shape
    for i in range(t, rows):
        for j in range(t, cols):
            x = a[i, j]
            if x and (best is None or abs(x) < abs(a[best])):
                best = (i, j)
    return best


def _diagonalise(a: np.ndarray) -> list[int]:
    """Diagonal of an equivalent matrix (divisibility not yet enforced)."""
    rows, cols = a.shape
    diag: list[int] = []
    for t in range(min(rows, cols)):
        pivot = _smallest_nonzero(a, t)
        if pivot is None:
            break
        i, j = pivot
        a[[t, i], :] = a[[i, t], :]
        a[:, [t, j]] = a[:, [j, t]]
        while True:
            p = a[t, t]
            for i in range(t + 1, rows):
                if a[i, t]:
                    a[i, :] -= (a[i, t] // p) * a[t, :]
            for j in range(t + 1, cols):
                if a[t, j]:
                    a[:, j] -= (a[t, j] // p) * a[:, t]
            rest = [(i, t) for i in range(t + 1, rows) if a[i, t]] + \
                   [(t, j) for j in range(t + 1, cols) if a[t, j]]
            if not rest:
                break
            i, j = min(rest, key=lambda ij: abs(a[ij]))
            if j == t:
                a[[t, i], :] = a[[i, t], :]
            else:
                a[:, [t, j]] = a[:, [j, t]]
        diag.append(abs(int(a[t, t])))
    return diag


def invariant_factors(diag: list[int]) -> list[int]:
    """Rewrite a diagonal into a divisibility chain (gcd/lcm sweeps)."""
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            a, b = d[i], d[j]
            g = gcd(a, b)
            d[i], d[j] = g, (a * b // g if g else 0)
    return d


def smith_diagonal(m: IntMatrix) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... (units included)."""
    if m.rows == 0 or m.cols == 0:
        return []
    diag = _diagonalise(m.to_array())
    return invariant_factors([x for x in diag if x])


def smith_normal_form(m: IntMatrix) -> tuple[AbelianGroupInvariants, int]:
    """(cokernel of the column space in Z^rows, rank of m)."""
    factors = smith_diagonal(m)
    rank = len(factors)
    torsion = tuple(d for d in factors if d > 1)
    logger.debug("SNF of %dx%d: rank %d, torsion %s", m.rows, m.cols, rank, torsion)
    return AbelianGroupInvariants(free_rank=m.rows - rank, torsion=torsion), rank


# ─────────────────────────────── homology ───────────────────────────────

def relation_matrix(f: MonodromyFactorization) -> IntMatrix:
    """One block (M_k - I)^T per monodromy word; each row is one relation on H_1(F)."""
    size = 2 * f.fiber_genus
    blocks = [(action_array(w) - identity_array(size)).T for w in f.words()]
    return IntMatrix.from_array(np.vstack(blocks) if blocks else np.zeros((0, size), dtype=object))


def coinvariants(f: MonodromyFactorization) -> AbelianGroupInvariants:
    """H_1(F) modulo the monodromy action."""
    rel = relation_matrix(f)
    if rel.rows == 0:
        return AbelianGroupInvariants(free_rank=2 * f.fiber_genus)
    group, _ = smith_normal_form(rel.transpose())
    return group


def h1_total_space(f: MonodromyFactorization) -> AbelianGroupInvariants:
    require_homology(f)
    return coinvariants(f).plus_free(2 * f.base_genus)


def h1_mod_n(f: MonodromyFactorization, n: int) -> int:
    """Rank of H_1(X; Z/n) as a count of Z/n summands: 2h + #{d : n divides d}, d free or torsion."""
    if n < 2:
        raise PreconditionError(f"modulus {n} < 2")
    require_homology(f)
    size = 2 * f.fiber_genus
    rel = relation_matrix(f)
    factors = smith_diagonal(rel.transpose()) if rel.rows else []
    survivors = size - sum(1 for d in factors if d % n)
    return 2 * f.base_genus + survivors


def euler_characteristic(f: MonodromyFactorization) -> int:
    return (2 - 2 * f.fiber_genus) * (2 - 2 * f.base_genus)


# ─────────────────────────────── signature ───────────────────────────────

def _descartes_signature(g: sympy.Matrix) -> int:
    if g.rows == 0:
        return 0
    coeffs = g.charpoly().all_coeffs()

    def changes(cs: list) -> int:
        signs = [1 if c > 0 else -1 for c in cs if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    deg = len(coeffs) - 1
    flipped = [c * (-1) ** (deg - i) for i, c in enumerate(coeffs)]
    return changes(coeffs) - changes(flipped)


def _meyer(a: np.ndarray, b: np.ndarray, genus: int) -> int:
    size = 2 * genus
    one = sympy.eye(size)
    A = sympy.Matrix(a.tolist())
    B = sympy.Matrix(b.tolist())
    J = sympy.Matrix(chain_form(genus).tolist())
    space = sympy.Matrix.hstack(A.inv() - one, B - one).nullspace()
    if not space:
        return 0
    N = sympy.Matrix.hstack(*space)
    K = J * (one - B)
    zero = sympy.zeros(size, size)
    F = sympy.Matrix.vstack(sympy.Matrix.hstack(zero, K), sympy.Matrix.hstack(zero, K))
    S = (F + F.T) / 2
    return _descartes_signature(N.T * S * N)


def meyer_cocycle(a: SpMatrix, b: SpMatrix) -> int:
    """Signature of (x1+y1)^T J (I-B) y2 on {(x, y) : (A^-1 - I)x + (B - I)y = 0}."""
    if a.genus != b.genus:
        raise PreconditionError(f"genus differs: {a.genus} vs {b.genus}")
    return _meyer(a.to_array(), b.to_array(), a.genus)


def signature(f: MonodromyFactorization) -> int:
    """sum_i tau(g_1 ... g_i, g_(i+1)) over the 4h relator matrices."""
    require_homology(f)
    mats = [action_array(w) for w in relator_sequence(f)]
    total = 0
    prefix = identity_array(2 * f.fiber_genus)
    for i in range(len(mats) - 1):
        prefix = prefix @ mats[i]
        total += _meyer(prefix, mats[i + 1], f.fiber_genus)
    logger.debug("signature over %d relator matrices: %d", len(mats), total)
    return total


def is_identity_array(m: np.ndarray) -> bool:
    return bool((m == identity_array(m.shape[0])).all())


# ─────────────────────────────── precondition ───────────────────────────────

def relator_action(f: MonodromyFactorization) -> np.ndarray:
    """Action on H_1(F) of the relator prod [A_j, B_j]."""
    m = identity_array(2 * f.fiber_genus)
    for w in relator_sequence(f):
        m = m @ action_array(w)
    return m


def format_array(m: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(x)) for x in row) for row in m)


def require_homology(f: MonodromyFactorization) -> None:
    """Invariants are only defined for factorizations whose relator acts trivially on H_1."""
    if VerificationLevel.HOMOLOGY in f.verified:
        return
    m = relator_action(f)
    if not is_identity_array(m):
        raise VerificationError(f"{f.provenance}: relator acts nontrivially on H1, invariants are undefined",
                                level=VerificationLevel.HOMOLOGY.value, evidence=format_array(m))
