"""Double covers of Nil manifolds and the classification of free involutions.

double_cover computes the Seifert data of the cover cut out by an
epimorphism phi: pi_1 -> Z2, family by family, in closed form.  verify_cover
is the independent oracle: it rewrites the fundamental group to the index-2
subgroup presentation (Reidemeister-Schreier), abelianizes with the Smith
machinery and compares against H1 of the claimed cover, together with the
Euler number relation e(cover) = 2^(1 - 2 phi(h)) * e(base).  quotients_of
searches the finite set of candidate bases and inverts double_cover, which
reproduces the known involution diagrams; those diagrams are also
transcribed here (expected_quotient_diagram) so the two routes can be
compared mechanically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bu_index
from .epimorphisms import Z2Char, equivalence_classes, validate_char
from .homology import abelianization, h1
from .presentation import fundamental_group, reidemeister_schreier
from .seifert import (NilManifold, _expand_pairs, b_min, euler_number,
                      family_rows)


@dataclass(frozen=True)
class CoveringDescriptor:
    """One free involution: base manifold, class representative, cover, index."""

    base: NilManifold
    phi: Z2Char
    cover: NilManifold
    index: int

    def to_json_dict(self) -> dict:
        return {"base": self.base.encode(),
                "phi": self.phi.to_json_dict(),
                "cover": self.cover.encode(),
                "index": self.index}


def double_cover(m: NilManifold, phi: Z2Char) -> NilManifold:
    """Seifert data of the double cover of m classified by phi.

    phi must be an epimorphism of pi_1(m) (InvalidCharacter otherwise).  The
    result is always a valid Nil manifold, and its Euler number doubles or
    halves according to phi(h).
    """
    validate_char(m, phi)
    b = m.b
    fam = m.family
    if fam == "T":
        cover = NilManifold("T", b // 2) if phi["h"] else NilManifold("T", 2 * b)
    elif fam == "K":
        if phi["h"]:
            cover = NilManifold("K", b // 2)
        elif (phi["v1"] + phi["v2"]) % 2 == 1:
            cover = NilManifold("K", 2 * b)
        else:
            cover = NilManifold("T", 2 * b)
    elif fam == "22":
        if phi["s2"]:
            cover = NilManifold("K", 2 * b + 2)
        else:
            cover = NilManifold("2222", 2 * b)
    elif fam == "2222":
        if all(phi["s%d" % i] for i in (1, 2, 3, 4)):
            cover = NilManifold("T", 2 * b + 4)
        else:
            cover = NilManifold("2222", 2 * b + 2)
    elif fam == "236":
        b2, b3 = m.betas
        k = (b3 + 3) // 4
        cover = NilManifold("333", 2 * b + k, (b2, b2, k))
    elif fam == "244":
        b2, b3 = m.betas
        if phi["s1"] == 0:
            cover = NilManifold("2222", 2 * b - 1 + (b2 + b3) // 2)
        elif phi["s3"] == 0:
            cover = NilManifold("244", 2 * b + (b2 + 1) // 2, (b3, b3))
        else:
            cover = NilManifold("244", 2 * b + (b3 + 1) // 2, (b2, b2))
    elif fam == "333":
        b1, b2, b3 = m.betas
        cover = NilManifold(
            "333", (b + b1 + b2 + b3 - 6) // 2, (3 - b3, 3 - b2, 3 - b1))
    else:
        raise AssertionError("unknown family %r" % (fam,))
    scale = Fraction(1, 2) if phi["h"] else Fraction(2)
    assert euler_number(cover.seifert()) == scale * euler_number(m.seifert())
    return cover


def verify_cover(m: NilManifold, phi: Z2Char, claimed: NilManifold) -> bool:
    """Oracle check of a claimed double cover, independent of double_cover.

    Rewrites pi_1(m) to the kernel presentation, abelianizes, and compares
    invariant factors with h1(claimed); also checks the Euler number
    relation.  True iff both hold.
    """
    validate_char(m, phi)
    sub = reidemeister_schreier(fundamental_group(m.seifert()), phi)
    computed = abelianization(sub)
    if computed.decomposition != h1(claimed).decomposition:
        return False
    scale = Fraction(1, 2) if phi["h"] else Fraction(2)
    return euler_number(claimed.seifert()) == scale * euler_number(m.seifert())


def quotients_of(m: NilManifold) -> tuple[CoveringDescriptor, ...]:
    """All free involutions on m: (base, class, index) with cover m.

    A base n must satisfy e(n) = e(m)/2 or e(n) = 2 e(m), which pins b for
    every family row; the finitely many candidates are enumerated and their
    classes filtered through double_cover.  Sorted by base encoding.
    """
    e_m = euler_number(m.seifert())
    found = []
    for family, betas in family_rows():
        pairs = _expand_pairs(family, betas)
        gamma = sum((Fraction(beta, a) for a, beta in pairs), Fraction(0))
        for e_target in (e_m / 2, 2 * e_m):
            b_cand = e_target - gamma
            if b_cand.denominator != 1 or b_cand < b_min(pairs):
                continue
            base = NilManifold(family, int(b_cand), betas)
            for cls in equivalence_classes(base).classes:
                rep = cls.representative
                if double_cover(base, rep) == m:
                    found.append(CoveringDescriptor(
                        base, rep, m, bu_index.z2_index(base, rep)))
    found.sort(key=lambda d: (d.base.encode(), d.phi.bits))
    return tuple(found)


def expected_quotient_diagram(m: NilManifold) -> tuple[tuple[NilManifold, int], ...]:
    """Transcribed involution diagrams: (base, index) pairs, sorted.

    The families 22, 236 and 244 with b2 != b3 are never double covers
    within the geometry, so their diagrams are empty.
    """
    fam, b = m.family, m.b
    out: list[tuple[NilManifold, int]] = []
    if fam == "T":
        if b % 2:
            out = [(NilManifold("T", 2 * b), 3)]
        else:
            out = [(NilManifold("T", 2 * b), 2),
                   (NilManifold("T", b // 2), 1),
                   (NilManifold("2222", b // 2 - 2), 2),
                   (NilManifold("K", b // 2), 1)]
    elif fam == "K":
        if b % 2:
            out = [(NilManifold("K", 2 * b), 3)]
        else:
            out = [(NilManifold("K", 2 * b), 2),
                   (NilManifold("K", b // 2), 2),
                   (NilManifold("22", b // 2 - 1), 2)]
    elif fam == "2222":
        if b % 2:
            out = [(NilManifold("244", (b - 1) // 2, (1, 3)), 2)]
        else:
            out = [(NilManifold("2222", b // 2 - 1), 2),
                   (NilManifold("22", b // 2), 2),
                   (NilManifold("244", b // 2 - 1, (3, 3)), 2),
                   (NilManifold("244", b // 2, (1, 1)), 2)]
    elif fam == "244":
        b2, b3 = m.betas
        if b2 == b3:
            x = b2
            if b % 2:
                out = [(NilManifold("244", (b - 1) // 2, (1, x)), 3)]
            else:
                out = [(NilManifold("244", b // 2 - 1, (x, 3)), 3)]
    elif fam == "333":
        # x = repeated beta, y = the remaining one (x = y when all equal)
        reps = {(1, 1, 1): (1, 1), (1, 1, 2): (1, 2),
                (1, 2, 2): (2, 1), (2, 2, 2): (2, 2)}
        x, y = reps[m.betas]
        out = [(NilManifold("333", 2 * b + 2 * x + y - 3, (3 - y, 3 - x, 3 - x)),
                3 if (b - y) % 2 else 2)]
        if (b - y) % 2 == 0:
            out.append((NilManifold("236", (b - y) // 2, (x, 4 * y - 3)), 2))
    out.sort(key=lambda pair: pair[0].encode())
    return tuple(out)
