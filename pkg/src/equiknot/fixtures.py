"""Worked example systems and random generators used by the tests and the CLI."""

from __future__ import annotations

import random
from fractions import Fraction

from .exact import MatQ
from .seifert import EquivariantSeifertForm, EquivariantSeifertSystem
from .serialize import DATA_DIR, load_system

# basis order (alpha, beta, gamma, delta)
K13N1496_METABOLIZER = ((1, 0, 0, 1), (-1, 2, -2, 1))
K13N1496_KERNEL = ((0, 1, 1, 0), (1, 0, 0, 1))


def k13n1496() -> EquivariantSeifertSystem:
    return load_system(DATA_DIR / "k13n1496.json")


def unknot_g() -> EquivariantSeifertSystem:
    return load_system(DATA_DIR / "unknot_g.json")


def swap(n: int) -> MatQ:
    """Involution exchanging the two halves of Q^(2n)."""
    I, Z = MatQ.identity(n), MatQ.zeros(n)
    return MatQ.block([[Z, I], [I, Z]])


def figure_eight_anchor() -> EquivariantSeifertSystem:
    """Rank-2 system whose Alexander polynomial is that of the figure-eight knot.

    Its symmetric structure is ``B = (10)``, ``S = (1/5)``; the single jump away
    from 1 sits at 1/5 and equals -1.
    """
    return EquivariantSeifertSystem.build([[1, 2], [1, 1]], [[0, 1], [1, 0]], name="4_1-anchor")


def double(theta) -> EquivariantSeifertSystem:
    """``(diag(theta, theta^T), swap, 0, 0)`` for a Seifert matrix theta."""
    th = theta if isinstance(theta, MatQ) else MatQ(theta)
    A = MatQ.block_diag(th, th.T)
    return EquivariantSeifertSystem.build(A, swap(th.rows))


# Seifert matrices of classical knots
TREFOIL = ((-1, 1), (0, -1))
FIGURE_EIGHT = ((1, 1), (0, -1))
STEVEDORE = ((-1, 1), (0, 2))  # metabolizer spanned by (2, 1)


def metabolic_double() -> tuple[EquivariantSeifertSystem, tuple]:
    """Double of a slice Seifert matrix, with its block-diagonal metabolizer."""
    s = double(STEVEDORE)
    return s, ((2, 1, 0, 0), (0, 0, 2, 1))


def _unimodular(rng: random.Random, n: int, steps: int = 6) -> MatQ:
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        c = rng.choice([-1, 1])
        for k in range(n):
            M[i][k] += c * M[j][k]
    return MatQ(M)


def _sym(rng: random.Random, n: int, lo: int = -2, hi: int = 2) -> MatQ:
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = rng.randint(lo, hi)
    return MatQ(a)


def random_system(rng: random.Random, size: int, conjugate: bool = True) -> EquivariantSeifertSystem:
    """A random valid integral system of the given even size with invertible symmetrization.

    Built as ``A = [[X, Z + U], [Z, X]]`` over the block swap, with X and Z
    symmetric and U symmetric unimodular, then moved to a random integral basis.
    """
    if size % 2 or size < 2:
        raise ValueError("size must be even and positive")
    k = size // 2
    while True:
        X, Z = _sym(rng, k), _sym(rng, k)
        W = _unimodular(rng, k)
        U = W @ MatQ.diag([rng.choice([-1, 1]) for _ in range(k)]) @ W.T
        A = MatQ.block([[X, Z + U], [Z, X]])
        P = swap(k)
        a = [rng.randint(-2, 2) for _ in range(k)]
        b = [rng.randint(-2, 2) for _ in range(k)]
        h = tuple(a) + tuple(-x for x in a)
        lk = tuple(b) + tuple(b)
        if (A + A.T).det() == 0:
            continue
        if conjugate:
            G = _unimodular(rng, size)
            Gi = G.inverse()
            A, P = G.T @ A @ G, Gi @ P @ G
            h = tuple(sum(h[i] * G[i, j] for i in range(size)) for j in range(size))
            lk = tuple(sum(lk[i] * G[i, j] for i in range(size)) for j in range(size))
        return EquivariantSeifertSystem(A, P, h, lk)


def random_structure(rng: random.Random, k: int):
    """A random symmetric structure ``(B, S)`` on Q^k with S invertible."""
    from .structures import SymmetricStructure

    while True:
        B = _sym(rng, k, -3, 3)
        M = _sym(rng, k, -3, 3)
        if B.det() == 0 or M.det() == 0:
            continue
        return SymmetricStructure(B, B.inverse() @ M)


def rational_eigen_structure(rng: random.Random, blocks) -> object:
    """Structure built from blocks ``(eigenvalue, size, sign)``: Jordan blocks with a hyperbolic-type form.

    A block of size 1 contributes ``B = (sign)``, ``S = (eigenvalue)``; a block
    of size 2 is a Jordan block with the anti-diagonal form, which is
    self-adjoint.  The result is conjugated by a random unimodular matrix.
    """
    from .structures import SymmetricStructure

    Bs, Ss = [], []
    for lam, size, sign in blocks:
        lam = Fraction(lam)
        if size == 1:
            Bs.append(MatQ([[sign]]))
            Ss.append(MatQ([[lam]]))
        elif size == 2:
            Bs.append(MatQ([[0, sign], [sign, 0]]))
            Ss.append(MatQ([[lam, 1], [0, lam]]))
        else:
            raise ValueError("block size must be 1 or 2")
    B = MatQ.block_diag(*Bs)
    S = MatQ.block_diag(*Ss)
    G = _unimodular(rng, B.rows)
    Gi = G.inverse()
    # change of basis x = G y: B -> G^T B G, S -> G^-1 S G
    return SymmetricStructure(G.T @ B @ G, Gi @ S @ G)


def random_form(rng: random.Random, m: int) -> EquivariantSeifertForm:
    """Rational form of rank 2m coming from a random symmetric structure."""
    from .structures import seifert_form_from_structure

    return seifert_form_from_structure(random_structure(rng, m))
