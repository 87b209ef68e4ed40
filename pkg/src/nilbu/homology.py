"""Exact integer linear algebra and first homology of the Nil families.

Matrices are plain lists of lists of Python ints, so arithmetic is exact and
unbounded (no overflow to report, ever).  The Smith normal form here returns
the unimodular transforms, which the abelianization uses to express generator
images in the invariant-factor basis; everything downstream (epimorphism
counts, the torsion-killing test behind the index-1 criterion, the covering
oracle) reads off this data.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .presentation import FinitePresentation, exponent_matrix, fundamental_group
from .seifert import InvariantError, NilManifold


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def matmul(a, b) -> list[list[int]]:
    if any(len(row) != len(b) for row in a):
        raise InvariantError("inner dimensions disagree")
    bc = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(len(b))) for j in range(bc)]
            for row in a]


def transpose(a) -> list[list[int]]:
    nr = len(a)
    nc = len(a[0]) if nr else 0
    return [[a[i][j] for i in range(nr)] for j in range(nc)]


def determinant(m) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise InvariantError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m):
    """Smith normal form with transforms: returns (S, U, V), S = U * m * V.

    U, V are unimodular; S is diagonal with nonnegative entries, each
    dividing the next, zeros last.  Pivot choice is the smallest nonzero
    |entry| of the working submatrix with ties broken row-major, which makes
    S, U, V deterministic for a given input.
    """
    A = [list(row) for row in m]
    nr = len(A)
    nc = len(A[0]) if nr else 0
    if any(len(row) != nc for row in A):
        raise InvariantError("ragged matrix")
    U = identity(nr)
    V = identity(nc)

    def row_combine(i, j, q):
        # row_i -= q * row_j
        for k in range(nc):
            A[i][k] -= q * A[j][k]
        for k in range(nr):
            U[i][k] -= q * U[j][k]

    def col_combine(j, i, q):
        # col_j -= q * col_i
        for row in A:
            row[j] -= q * row[i]
        for row in V:
            row[j] -= q * row[i]

    t = 0
    while t < min(nr, nc):
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = A[i][j]
                if x != 0 and (pivot is None or abs(x) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            A[t], A[pivot[0]] = A[pivot[0]], A[t]
            U[t], U[pivot[0]] = U[pivot[0]], U[t]
        if pivot[1] != t:
            for row in A:
                row[t], row[pivot[1]] = row[pivot[1]], row[t]
            for row in V:
                row[t], row[pivot[1]] = row[pivot[1]], row[t]
        p = A[t][t]
        # knock column/row entries down; any remainder is strictly smaller
        # than the pivot, so looping back makes progress
        dirty = False
        for i in range(t + 1, nr):
            if A[i][t] % p != 0:
                row_combine(i, t, A[i][t] // p)
                dirty = True
        for j in range(t + 1, nc):
            if A[t][j] % p != 0:
                col_combine(j, t, A[t][j] // p)
                dirty = True
        if dirty:
            continue
        for i in range(t + 1, nr):
            if A[i][t]:
                row_combine(i, t, A[i][t] // p)
        for j in range(t + 1, nc):
            if A[t][j]:
                col_combine(j, t, A[t][j] // p)
        stray = None
        for i in range(t + 1, nr):
            if any(A[i][j] % p != 0 for j in range(t + 1, nc)):
                stray = i
                break
        if stray is not None:
            # fold the offending row into row t so the pivot shrinks next pass
            row_combine(t, stray, -1)
            continue
        if p < 0:
            for k in range(nc):
                A[t][k] = -A[t][k]
            for k in range(nr):
                U[t][k] = -U[t][k]
        t += 1
    return A, U, V


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    torsion is the chain d_1 | d_2 | ... with every d_i >= 2 (Z_1 factors are
    dropped).  gen_images maps each presentation generator to its coordinates
    in the decomposition basis, free coordinates first, then torsion
    coordinates reduced mod d_i.
    """

    free_rank: int
    torsion: tuple[int, ...]
    gen_images: dict

    @property
    def decomposition(self) -> tuple[int, tuple[int, ...]]:
        """Isomorphism invariant: (free rank, invariant factors)."""
        return (self.free_rank, self.torsion)

    def evaluate(self, coeffs: dict) -> tuple[int, ...]:
        """Coordinates of sum coeffs[g] * image(g), reduced mod the orders."""
        n = self.free_rank + len(self.torsion)
        total = [0] * n
        for name, coeff in coeffs.items():
            for k, x in enumerate(self.gen_images[name]):
                total[k] += coeff * x
        for k, d in enumerate(self.torsion):
            total[self.free_rank + k] %= d
        return tuple(total)

    def is_zero_combination(self, coeffs: dict) -> bool:
        return all(x == 0 for x in self.evaluate(coeffs))

    def to_json_dict(self) -> dict:
        return {"free_rank": self.free_rank,
                "torsion": list(self.torsion),
                "gen_images": {k: list(v) for k, v in self.gen_images.items()}}


def abelianization(pres: FinitePresentation) -> AbelianGroup:
    """Abelianized group of a presentation, with generator images.

    The relation matrix is the transpose of the exponent-sum matrix (one
    column per relator); if S = U A V is its Smith form then generator j has
    decomposition coordinates given by column j of U.
    """
    R = exponent_matrix(pres)
    g = len(pres.generators)
    r = len(R)
    A = [[R[k][j] for k in range(r)] for j in range(g)]
    S, U, _ = smith_normal_form(A)
    orders = [S[i][i] if i < min(g, r) else 0 for i in range(g)]
    free_pos = [i for i in range(g) if orders[i] == 0]
    tor_pos = [i for i in range(g) if orders[i] >= 2]
    torsion = tuple(orders[i] for i in tor_pos)
    gen_images = {}
    for j, name in enumerate(pres.generators):
        free_part = tuple(U[i][j] for i in free_pos)
        tor_part = tuple(U[i][j] % orders[i] for i in tor_pos)
        gen_images[name] = free_part + tor_part
    return AbelianGroup(len(free_pos), torsion, gen_images)


@lru_cache(maxsize=None)
def h1(m: NilManifold) -> AbelianGroup:
    """First homology of the manifold, via its fundamental group."""
    return abelianization(fundamental_group(m.seifert()))


def mod2_rank(group: AbelianGroup) -> int:
    """dim over Z2 of group (x) Z2: free rank plus number of even factors."""
    return group.free_rank + sum(1 for d in group.torsion if d % 2 == 0)


def _gf2_consistent(rows, ncols) -> bool:
    # rows are augmented [coeffs | rhs]; consistent iff no reduced row is 0...0|1
    rows = [row[:] for row in rows]
    pivot_row = 0
    for col in range(ncols):
        sel = next((i for i in range(pivot_row, len(rows)) if rows[i][col]), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        for i in range(len(rows)):
            if i != pivot_row and rows[i][col]:
                rows[i] = [x ^ y for x, y in zip(rows[i], rows[pivot_row])]
        pivot_row += 1
    return not any(row[-1] and not any(row[:-1]) for row in rows)


def torsion_subgroup_killed_by(phi, group: AbelianGroup) -> bool:
    """True iff the mod-2 functional vanishes on the torsion subgroup.

    phi maps generator names to bits.  Killing torsion is the same as
    factoring through the free quotient, i.e. solvability of psi * F = phi
    over GF(2) where F collects the free coordinates of the generator
    images; that system is what gets checked.
    """
    f = group.free_rank
    rows = []
    for name, coords in group.gen_images.items():
        rows.append([c % 2 for c in coords[:f]] + [phi[name] % 2])
    return _gf2_consistent(rows, f)


def h1_closed_form(m: NilManifold) -> tuple[int, tuple[int, ...]]:
    """(free rank, invariant factors) of H1, from the per-family closed forms."""
    b = m.b
    if m.family == "T":
        return (2, (b,) if b > 1 else ())
    if m.family == "K":
        return (1, (4,) if b % 2 else (2, 2))
    if m.family == "22":
        return (0, (4, 4))
    if m.family == "2222":
        return (0, (2, 2, 2 * (2 * b + 4)))
    if m.family == "236":
        b2, b3 = m.betas
        return (0, (6 * (6 * b + 3 + 2 * b2 + b3),))
    if m.family == "244":
        b2, b3 = m.betas
        return (0, (2, 4 * (4 * b + 2 + b2 + b3)))
    if m.family == "333":
        c = 3 * b + sum(m.betas)
        return (0, (3, 3 * c))
    raise InvariantError("unknown family %r" % (m.family,))


def h1_stated_relations(m: NilManifold) -> list[dict]:
    """Generator relations that must vanish in H1, one coefficient dict each.

    These are the closed-form generator descriptions turned into relations
    (for instance h = -2 s1 becomes {h: 1, s1: 2}), plus the order
    annihilations the decompositions assert.
    """
    b = m.b
    fam = m.family
    if fam == "T":
        return [{"h": b}]
    if fam == "K":
        if b % 2:
            # h = 2(v1 + v2), with v1 + v2 of order 4
            return [{"h": 1, "v1": -2, "v2": -2}, {"v1": 4, "v2": 4}]
        return [{"h": 2}, {"v1": 2, "v2": 2}]
    if fam == "22":
        return [{"h": 1, "s1": 2},
                {"s2": 1, "s1": 2 * b + 1, "v1": 2},
                {"s1": 4}, {"v1": 4}]
    if fam == "2222":
        c = 2 * b + 4
        return [{"h": 1, "s1": 2},
                {"s4": 1, "s1": 2 * b + 1, "s2": 1, "s3": 1},
                {"s2": 2, "s1": -2}, {"s3": 2, "s1": -2},
                {"s1": 2 * c}]
    if fam == "236":
        b2, b3 = m.betas
        c = 6 * b + 3 + 2 * b2 + b3
        k = 3 * (2 * b2 - 3)
        return [{"h": 1, "s1": 2},
                {"s3": 1, "s1": 2 * b + 1, "s2": 1},
                {"s1": 1 + k, "s2": -k},           # s1 = k (s2 - s1)
                {"s2": 6 * c, "s1": -6 * c}]
    if fam == "244":
        b2, b3 = m.betas
        c = 4 * b + 2 + b2 + b3
        return [{"h": 1, "s1": 2},
                {"s3": 1, "s1": 2 * b + 1, "s2": 1},
                {"s1": 2 * c},
                {"s2": 4 * c, "s1": -4 * c}]
    if fam == "333":
        c = 3 * b + sum(m.betas)
        return [{"s3": 1, "s1": 1, "s2": 1, "h": -b},
                {"h": c}, {"s1": 3 * c}, {"s2": 3 * c}]
    raise InvariantError("unknown family %r" % (fam,))
