"""Seifert invariants of closed orientable 3-manifolds with Nil geometry.

A closed orientable Seifert fibred space over a closed base surface is
described by an invariant

    (b; eps; g'; (a_1, b_1), ..., (a_n, b_n))

where b is the Euler-like twisting integer of the section, eps = +1 for an
orientable base and -1 for a non-orientable one, g' counts handles
(eps = +1, genus g = g'/2) or crosscaps (eps = -1, g = g') of the base, and
each pair (a_i, b_i) with 0 < b_i < a_i, gcd(a_i, b_i) = 1 is an exceptional
fibre.  Two such tuples give the same oriented manifold iff they agree after
normalization; reversing orientation negates all of b, b_i.

Nil geometry is detected by two numbers: the Euler characteristic of the base
orbifold

    chi = (2 - g') - sum_i (1 - 1/a_i)

and the Euler number of the fibration

    e = b + sum_i b_i/a_i.

The manifold carries Nil geometry iff chi = 0 and e != 0, and we fix the
orientation with e > 0.  chi = 0 forces one of seven shapes, tagged here by
what the base orbifold looks like:

    tag     eps  g'  cone orders     free parameters
    T       +1   2   -               torus base, no cones
    K       -1   2   -               Klein bottle base
    22      -1   1   2, 2            two order-2 cones (betas forced to 1)
    2222    +1   0   2, 2, 2, 2      four order-2 cones
    236     +1   0   2, 3, 6         b2 in {1,2}, b3 in {1,5}
    244     +1   0   2, 4, 4         b2 <= b3 in {1,3}
    333     +1   0   3, 3, 3         b1 <= b2 <= b3 in {1,2}

Within each family b ranges over the integers with e > 0, i.e. b >= b_min.
Everything here is exact: rationals are fractions.Fraction, never floats.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


class NilError(Exception):
    """Base class for the domain errors raised by this package."""


class InvariantError(NilError):
    """Raw Seifert data violates a structural constraint (a_i <= 0, gcd != 1, ...)."""


class NotNil(NilError):
    """The invariant does not satisfy chi = 0, e != 0."""


class OrientationError(NilError):
    """Nil invariant with e < 0; classify the mirror via reverse_orientation."""


class ParseError(NilError):
    """Text does not parse as a Seifert invariant or family encoding."""


@dataclass(frozen=True)
class SeifertInvariant:
    """Normalized Seifert invariant of a closed orientable Seifert fibration.

    Pairs are kept canonically sorted; construction enforces the normal form
    (0 < b_i < a_i, gcd = 1, eps in {+1,-1}, g' >= 1 when eps = -1).  Use
    normalize() to build one from loose data.
    """

    b: int
    epsilon: int
    g_prime: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.epsilon not in (+1, -1):
            raise InvariantError("epsilon must be +1 or -1, got %r" % (self.epsilon,))
        if self.g_prime < 0:
            raise InvariantError("g' must be >= 0, got %r" % (self.g_prime,))
        if self.epsilon == -1 and self.g_prime < 1:
            raise InvariantError("non-orientable base needs g' >= 1")
        pairs = tuple(sorted((int(a), int(beta)) for a, beta in self.pairs))
        for a, beta in pairs:
            if a < 2:
                raise InvariantError("normalized pair needs a >= 2, got (%d,%d)" % (a, beta))
            if not 0 < beta < a:
                raise InvariantError("normalized pair needs 0 < beta < a, got (%d,%d)" % (a, beta))
            if math.gcd(a, beta) != 1:
                raise InvariantError("pair (%d,%d) is not coprime" % (a, beta))
        object.__setattr__(self, "pairs", pairs)

    def encode(self) -> str:
        body = "".join("(%d,%d)" % p for p in self.pairs)
        return "SF(%d; %+d; %d; %s)" % (self.b, self.epsilon, self.g_prime, body)

    def __str__(self):
        return self.encode()


def normalize(b, epsilon, g_prime, pairs) -> SeifertInvariant:
    """Bring loose Seifert data to normal form.

    Accepts arbitrary integer betas and pairs with a_i = 1; applies
    (a, beta) -> (a, beta mod a) with the quotient absorbed into b, drops
    a = 1 pairs, sorts.  Rejects a_i <= 0 and gcd(a_i, beta_i) != 1.
    """
    b = int(b)
    clean = []
    for a, beta in pairs:
        a, beta = int(a), int(beta)
        if a <= 0:
            raise InvariantError("fibre order a must be positive, got %d" % a)
        if math.gcd(a, beta) != 1:
            raise InvariantError("pair (%d,%d) is not coprime" % (a, beta))
        q, r = divmod(beta, a)  # 0 <= r < a
        b += q
        if a == 1:
            continue  # (1, 0) is a regular fibre
        clean.append((a, r))
    return SeifertInvariant(b, epsilon, g_prime, tuple(clean))


def orbifold_euler_char(inv: SeifertInvariant) -> Fraction:
    """chi of the base orbifold: (2 - g') - sum (1 - 1/a_i)."""
    return Fraction(2 - inv.g_prime) - sum(1 - Fraction(1, a) for a, _ in inv.pairs)


def euler_number(inv: SeifertInvariant) -> Fraction:
    """Euler number of the fibration: e = b + sum b_i/a_i."""
    return sum((Fraction(beta, a) for a, beta in inv.pairs), Fraction(inv.b))


def cd_invariants(inv: SeifertInvariant) -> tuple[int, int, int]:
    """(c, d, a): c = e * lcm(a_i), d = number of even a_i, a = lcm(a_i).

    Defined for chi = 0 invariants, where c is an integer.
    """
    a = math.lcm(*(ai for ai, _ in inv.pairs)) if inv.pairs else 1
    c = euler_number(inv) * a
    if c.denominator != 1:
        raise InvariantError("c = e*lcm is not integral; invariant is not flat-based")
    d = sum(1 for ai, _ in inv.pairs if ai % 2 == 0)
    return int(c), d, a


def b_min(pairs) -> int:
    """Least b with e > 0 for the given exceptional pairs: -ceil(sum b_i/a_i) + 1."""
    s = sum(Fraction(beta, a) for a, beta in pairs)
    return -math.ceil(s) + 1


def is_nil(inv: SeifertInvariant) -> bool:
    """True iff the Seifert fibration carries Nil geometry (chi = 0, e != 0)."""
    return orbifold_euler_char(inv) == 0 and euler_number(inv) != 0


def reverse_orientation(inv: SeifertInvariant) -> SeifertInvariant:
    """The oppositely oriented manifold: b -> -b - n, beta_i -> a_i - beta_i."""
    n = len(inv.pairs)
    return SeifertInvariant(
        -inv.b - n, inv.epsilon, inv.g_prime,
        tuple((a, a - beta) for a, beta in inv.pairs))


# family tag -> (epsilon, g', cone orders, orders carrying a free beta)
FAMILIES = {
    "T":    (+1, 2, (), ()),
    "K":    (-1, 2, (), ()),
    "22":   (-1, 1, (2, 2), ()),
    "2222": (+1, 0, (2, 2, 2, 2), ()),
    "236":  (+1, 0, (2, 3, 6), (3, 6)),
    "244":  (+1, 0, (2, 4, 4), (4, 4)),
    "333":  (+1, 0, (3, 3, 3), (3, 3, 3)),
}

# families whose free betas are stored sorted (their cone orders coincide)
_SORTED_BETAS = {"244", "333"}


def _allowed_betas(a: int) -> tuple[int, ...]:
    return tuple(beta for beta in range(1, a) if math.gcd(a, beta) == 1)


def _expand_pairs(family: str, betas) -> tuple[tuple[int, int], ...]:
    # free orders consume betas left to right; remaining cones are order 2,
    # forced to beta = 1
    _, _, orders, free = FAMILIES[family]
    pairs = []
    it = iter(betas)
    free_left = list(free)
    for a in orders:
        if free_left and a == free_left[0]:
            free_left.pop(0)
            pairs.append((a, next(it)))
        else:
            pairs.append((a, 1))
    return tuple(pairs)


@dataclass(frozen=True)
class NilManifold:
    """A Nil Seifert manifold named by family tag and parameters.

    betas holds the free exceptional-fibre parameters of the family (order-2
    cones are forced to beta = 1 and carry none).  244 and 333 betas are kept
    sorted; b must satisfy e > 0, i.e. b >= b_min of the family row.
    """

    family: str
    b: int
    betas: tuple[int, ...] = ()

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvariantError("unknown family tag %r" % (self.family,))
        _, _, _, free = FAMILIES[self.family]
        betas = tuple(int(x) for x in self.betas)
        if self.family in _SORTED_BETAS:
            betas = tuple(sorted(betas))
        object.__setattr__(self, "betas", betas)
        object.__setattr__(self, "b", int(self.b))
        if len(betas) != len(free):
            raise InvariantError(
                "family %s takes %d cone parameters, got %d"
                % (self.family, len(free), len(betas)))
        for a, beta in zip(free, betas):
            if beta not in _allowed_betas(a):
                raise InvariantError(
                    "cone parameter %d invalid for order %d in family %s"
                    % (beta, a, self.family))
        if self.b < b_min(self._pairs()):
            raise InvariantError(
                "b = %d below b_min = %d for family %s%r"
                % (self.b, b_min(self._pairs()), self.family, betas))

    def _pairs(self) -> tuple[tuple[int, int], ...]:
        return _expand_pairs(self.family, self.betas)

    def seifert(self) -> SeifertInvariant:
        """Expand the family encoding to its normalized Seifert invariant."""
        eps, g, _, _ = FAMILIES[self.family]
        return SeifertInvariant(self.b, eps, g, self._pairs())

    def encode(self) -> str:
        if not self.betas:
            return "%s(%d)" % (self.family, self.b)
        return "%s(%d;%s)" % (self.family, self.b, ",".join(map(str, self.betas)))

    def __str__(self):
        return self.encode()


def classify(inv: SeifertInvariant) -> NilManifold:
    """Place a Nil invariant into its family.

    Raises NotNil when chi != 0 or e = 0, and OrientationError when e < 0
    (the mirror, reverse_orientation(inv), is the one with e > 0).
    """
    if not is_nil(inv):
        raise NotNil("not Nil geometry: chi = %s, e = %s"
                     % (orbifold_euler_char(inv), euler_number(inv)))
    if euler_number(inv) < 0:
        raise OrientationError(
            "e = %s < 0; classify(reverse_orientation(inv)) names the mirror"
            % (euler_number(inv),))
    orders = tuple(a for a, _ in inv.pairs)
    for tag, (eps, g, fam_orders, free) in FAMILIES.items():
        if (eps, g, fam_orders) == (inv.epsilon, inv.g_prime, orders):
            free_left = list(free)
            betas = []
            for a, beta in inv.pairs:
                if free_left and a == free_left[0]:
                    free_left.pop(0)
                    betas.append(beta)
            return NilManifold(tag, inv.b, tuple(betas))
    raise NotNil("chi = 0, e > 0 but shape %r matches no family" % ((inv.epsilon, inv.g_prime, orders),))


def family_rows() -> list[tuple[str, tuple[int, ...]]]:
    """All (family, betas) rows: one per allowed cone-parameter combination."""
    rows = [("T", ()), ("K", ()), ("22", ()), ("2222", ())]
    for b2 in (1, 2):
        for b3 in (1, 5):
            rows.append(("236", (b2, b3)))
    rows += [("244", (1, 1)), ("244", (1, 3)), ("244", (3, 3))]
    rows += [("333", (x, y, z))
             for x in (1, 2) for y in (1, 2) for z in (1, 2)
             if x <= y <= z]
    return rows


def sweep(depth: int = 16):
    """Iterate every family row with b from b_min to b_min + depth."""
    for family, betas in family_rows():
        lo = b_min(_expand_pairs(family, betas))
        for b in range(lo, lo + depth + 1):
            yield NilManifold(family, b, betas)


_SF_RE = re.compile(r"^SF\((-?\d+);([+-]?1);(\d+);((?:\(-?\d+,-?\d+\))*)\)$")
_PAIR_RE = re.compile(r"\((-?\d+),(-?\d+)\)")
_FAMILY_RE = re.compile(r"^([A-Za-z0-9]+)\((-?\d+)(?:;(-?\d+(?:,-?\d+)*))?\)$")


def parse_seifert(text: str) -> SeifertInvariant:
    """Parse 'SF(b; eps; g'; (a1,b1)(a2,b2)...)', whitespace-insensitive; normalizes."""
    compact = re.sub(r"\s+", "", text)
    m = _SF_RE.match(compact)
    if not m:
        raise ParseError("not a Seifert invariant encoding: %r" % text)
    b, eps, g = int(m.group(1)), int(m.group(2)), int(m.group(3))
    pairs = [(int(a), int(beta)) for a, beta in _PAIR_RE.findall(m.group(4))]
    try:
        return normalize(b, eps, g, pairs)
    except InvariantError as err:
        raise ParseError(str(err)) from err


def parse_family(text: str) -> NilManifold:
    """Parse a family encoding like 'T(3)', '236(0;1,5)', '333(-1;1,2,2)'."""
    compact = re.sub(r"\s+", "", text)
    m = _FAMILY_RE.match(compact)
    if not m or m.group(1) not in FAMILIES:
        raise ParseError("not a family encoding: %r" % text)
    family, b = m.group(1), int(m.group(2))
    betas = tuple(int(x) for x in m.group(3).split(",")) if m.group(3) else ()
    try:
        return NilManifold(family, b, betas)
    except InvariantError as err:
        raise ParseError(str(err)) from err


def parse_manifold(text: str) -> NilManifold:
    """Parse either encoding; SF(...) input is classified (so must be Nil, e > 0)."""
    compact = re.sub(r"\s+", "", text)
    if compact.startswith("SF("):
        return classify(parse_seifert(text))
    return parse_family(text)
