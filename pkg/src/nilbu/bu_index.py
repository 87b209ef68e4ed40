"""Z2-index of a free involution pair via cohomological criteria.

The pair is (m, phi): a Nil manifold together with the epimorphism cutting
out the double cover.  The index is 1, 2 or 3:

  * index 1 iff phi factors through the free quotient of H1 (equivalently,
    phi kills the torsion subgroup), which is when the classifying map
    compresses to a circle;
  * index 3 iff the cup cube of the class phi in H^1(m; Z2) is nonzero,
    which in terms of the invariants (c, d) reads: d = 0 requires phi(h) = 1
    and c = 2 mod 4 (orientable base) or c + 2g' = 2 mod 4 (non-orientable);
    d > 0 requires sum of phi(s_j) * (a_j / 2) over the even cone orders to
    be odd;
  * index 2 otherwise.

The two conditions exclude each other; z2_index asserts that.  Each generic
criterion has a transcribed per-family catalog next to it, and the test
suite requires the two routes to agree everywhere.
"""

from __future__ import annotations

from .epimorphisms import Z2Char, validate_char
from .homology import h1, torsion_subgroup_killed_by
from .seifert import NilManifold, cd_invariants


def index_is_one(m: NilManifold, phi: Z2Char) -> bool:
    """True iff the pair has Z2-index 1: phi kills the torsion of H1."""
    validate_char(m, phi)
    return torsion_subgroup_killed_by(phi, h1(m))


def cup_cube_nonzero(m: NilManifold, phi: Z2Char) -> bool:
    """True iff phi^3 != 0 in H^3(m; Z2), the index-3 criterion."""
    validate_char(m, phi)
    inv = m.seifert()
    c, d, _ = cd_invariants(inv)
    if d == 0:
        if phi["h"] != 1:
            return False
        if inv.epsilon == +1:
            return c % 4 == 2
        return (c + 2 * inv.g_prime) % 4 == 2
    total = sum(phi["s%d" % (i + 1)] * (a // 2)
                for i, (a, _) in enumerate(inv.pairs) if a % 2 == 0)
    return total % 2 == 1


def z2_index(m: NilManifold, phi: Z2Char) -> int:
    """The Z2-index of (m, phi): 1, 2 or 3."""
    one = index_is_one(m, phi)
    three = cup_cube_nonzero(m, phi)
    assert not (one and three), "index criteria must exclude each other"
    if one:
        return 1
    if three:
        return 3
    return 2


def index_one_case(m: NilManifold, phi: Z2Char) -> str | None:
    """Catalog form of the index-1 criterion: matched case or None.

    Index 1 happens exactly for the torus family with phi(h) = 0, and the
    Klein family with phi(h) = 0 and both v-bits set.
    """
    validate_char(m, phi)
    if m.family == "T" and phi["h"] == 0:
        return "class T with phi(h) = 0"
    if m.family == "K" and phi["h"] == 0 and phi["v1"] == phi["v2"] == 1:
        return "class K with phi(h) = 0 and phi(v1) = phi(v2) = 1"
    return None


def index_three_case(m: NilManifold, phi: Z2Char) -> str | None:
    """Catalog form of the index-3 criterion: matched case or None.

    Index 3 happens exactly for: T or K with b = 2 mod 4 and phi(h) = 1;
    333 with b = 2 + b1 + b2 + b3 mod 4; and 244 with phi(s1) = 1.
    """
    validate_char(m, phi)
    fam, b = m.family, m.b
    if fam in ("T", "K") and b % 4 == 2 and phi["h"] == 1:
        return "class %s with b = 2 mod 4 and phi(h) = 1" % fam
    if fam == "333" and (b - 2 - sum(m.betas)) % 4 == 0:
        return "class 333 with b = 2 + b1 + b2 + b3 mod 4"
    if fam == "244" and phi["s1"] == 1:
        return "class 244 with phi(s1) = 1"
    return None


def index_report(m: NilManifold, phi: Z2Char) -> dict:
    """Index with its criterion trace, for the command line."""
    one = index_is_one(m, phi)
    three = cup_cube_nonzero(m, phi)
    assert not (one and three)
    index = 1 if one else 3 if three else 2
    catalog = index_one_case(m, phi) if one else \
        index_three_case(m, phi) if three else None
    return {
        "manifold": m.encode(),
        "phi": phi.to_json_dict(),
        "index": index,
        "kills_torsion": one,
        "cup_cube_nonzero": three,
        "catalog": catalog,
    }
