"""Finite group presentations, fundamental groups, index-2 subgroup presentations.

Words are tuples of nonzero signed integers: letter +k is the k-th generator
(1-based), -k its inverse, following the usual computational group theory
convention.  Presentations keep their relators freely reduced but otherwise
untouched; no Tietze simplification happens anywhere, so rewritten subgroup
presentations stay in the raw Reidemeister-Schreier shape that the homology
routines consume.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .seifert import InvariantError, NilError, SeifertInvariant

Word = tuple[int, ...]


class NotAHomomorphism(NilError):
    """The mod-2 assignment does not kill every relator (or misses a generator)."""


class NotSurjective(NilError):
    """The mod-2 assignment sends every generator to 0."""


def free_reduce(word) -> Word:
    """Cancel adjacent x x^-1 pairs until none remain."""
    out = []
    for letter in word:
        if letter == 0:
            raise InvariantError("0 is not a letter")
        if out and out[-1] == -letter:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def inverse_word(word) -> Word:
    return tuple(-letter for letter in reversed(word))


@dataclass(frozen=True)
class FinitePresentation:
    """Generators by name, relators as words; relators freely reduced on entry."""

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        names = tuple(self.generators)
        if len(set(names)) != len(names):
            raise InvariantError("duplicate generator names")
        object.__setattr__(self, "generators", names)
        g = len(names)
        reduced = []
        for word in self.relators:
            word = free_reduce(word)
            for letter in word:
                if not 1 <= abs(letter) <= g:
                    raise InvariantError("letter %d references no generator" % letter)
            reduced.append(word)
        object.__setattr__(self, "relators", tuple(reduced))

    def index(self, name: str) -> int:
        """1-based letter value of a generator name."""
        return self.generators.index(name) + 1

    def format(self) -> str:
        """Debug rendering '<g1,g2 | w1, w2>'; for logging and test goldens only."""
        body = ", ".join(format_word(self, w) for w in self.relators)
        return "<%s | %s>" % (",".join(self.generators), body)

    def __str__(self):
        return self.format()


def format_word(pres: FinitePresentation, word) -> str:
    """Render a word like 's1 s2 v1^2 h^-3'; the empty word is '1'."""
    if not word:
        return "1"
    runs = []
    for letter in word:
        if runs and runs[-1][0] == letter:
            runs[-1][1] += 1
        else:
            runs.append([letter, 1])
    parts = []
    for letter, count in runs:
        name = pres.generators[abs(letter) - 1]
        exp = count if letter > 0 else -count
        parts.append(name if exp == 1 else "%s^%d" % (name, exp))
    return " ".join(parts)


def _power(letter: int, exp: int) -> Word:
    if exp >= 0:
        return (letter,) * exp
    return (-letter,) * (-exp)


def _commutator(x: int, y: int) -> Word:
    return (x, y, -x, -y)


@lru_cache(maxsize=None)
def fundamental_group(inv: SeifertInvariant) -> FinitePresentation:
    """Standard presentation of pi_1 of the Seifert fibration.

    Generators s_1..s_n (exceptional sections), v_1..v_g' (base classes),
    h (regular fibre).  Relators, in order: the fibre-commutation relators
    [s_i, h]; the cone relators s_i^{a_i} h^{b_i}; the base relators
    v_j h v_j^-1 h^{-eps}; and the section relator s_1...s_n V h^{-b} where
    V is the product of handle commutators (eps = +1) or crosscap squares
    (eps = -1).  Commutators are spelled out as 4-letter words.
    """
    n = len(inv.pairs)
    g = inv.g_prime
    if inv.epsilon == +1 and g % 2 != 0:
        raise InvariantError("orientable base needs even g', got %d" % g)
    names = tuple("s%d" % (i + 1) for i in range(n)) \
        + tuple("v%d" % (j + 1) for j in range(g)) + ("h",)
    s = tuple(range(1, n + 1))
    v = tuple(range(n + 1, n + g + 1))
    h = n + g + 1

    relators: list[Word] = []
    for i in range(n):
        relators.append(_commutator(s[i], h))
    for i, (a, beta) in enumerate(inv.pairs):
        relators.append(_power(s[i], a) + _power(h, beta))
    for j in range(g):
        # v h v^-1 h^-eps
        relators.append((v[j], h, -v[j]) + _power(h, -inv.epsilon))
    long_word: Word = s
    if inv.epsilon == +1:
        for k in range(g // 2):
            long_word += _commutator(v[2 * k], v[2 * k + 1])
    else:
        for j in range(g):
            long_word += (v[j], v[j])
    long_word += _power(h, -inv.b)
    relators.append(long_word)
    return FinitePresentation(names, tuple(relators))


def exponent_matrix(pres: FinitePresentation) -> list[list[int]]:
    """Abelianized relator matrix: one row per relator, one column per generator."""
    rows = []
    for word in pres.relators:
        row = [0] * len(pres.generators)
        for letter in word:
            row[abs(letter) - 1] += 1 if letter > 0 else -1
        rows.append(row)
    return rows


def _mod2_bits(pres: FinitePresentation, phi) -> list[int]:
    bits = []
    for name in pres.generators:
        try:
            bits.append(phi[name] & 1)
        except (KeyError, TypeError) as err:
            raise NotAHomomorphism("phi is undefined on generator %r" % name) from err
    return bits


def word_parity(pres: FinitePresentation, phi, word) -> int:
    """Image of a word under a mod-2 assignment on the generators."""
    bits = _mod2_bits(pres, phi)
    return sum(bits[abs(letter) - 1] for letter in word) % 2


def check_epimorphism(pres: FinitePresentation, phi) -> list[int]:
    """Validate phi: pi -> Z2 is a surjective homomorphism; return its bits.

    Raises NotAHomomorphism if some relator has odd phi-weight (or phi misses
    a generator), NotSurjective if every generator maps to 0.
    """
    bits = _mod2_bits(pres, phi)
    for word in pres.relators:
        if sum(bits[abs(letter) - 1] for letter in word) % 2 != 0:
            raise NotAHomomorphism(
                "relator %s has odd image" % format_word(pres, word))
    if not any(bits):
        raise NotSurjective("phi kills every generator")
    return bits


def reidemeister_schreier(pres: FinitePresentation, phi,
                          transversal: str | None = None) -> FinitePresentation:
    """Presentation of the index-2 subgroup ker(phi) by Reidemeister-Schreier.

    The transversal is {1, t} with t the first generator (in presentation
    order) mapping to 1, unless another phi = 1 generator is named.  Schreier
    generators are gamma(r, x) = r x (rx-bar)^-1 for coset r in {0, 1} and
    generator x, named 'x.r'; the trivial gamma(0, t) is dropped, leaving
    2n - 1 generators.  Each relator is rewritten starting at both cosets,
    giving 2r relators, freely reduced but not otherwise simplified (empty
    rewrites are kept).
    """
    bits = check_epimorphism(pres, phi)
    if transversal is None:
        t = bits.index(1)
    else:
        t = pres.generators.index(transversal)
        if bits[t] != 1:
            raise InvariantError(
                "transversal generator %r must have phi = 1" % transversal)

    names = []
    index = {}  # (generator, coset) -> letter value
    for x, base_name in enumerate(pres.generators):
        for r in (0, 1):
            if x == t and r == 0:
                continue
            index[(x, r)] = len(names) + 1
            names.append("%s.%d" % (base_name, r))

    relators = []
    for word in pres.relators:
        for start in (0, 1):
            out = []
            coset = start
            for letter in word:
                x = abs(letter) - 1
                if letter > 0:
                    if not (x == t and coset == 0):
                        out.append(index[(x, coset)])
                    coset ^= bits[x]
                else:
                    coset ^= bits[x]
                    if not (x == t and coset == 0):
                        out.append(-index[(x, coset)])
            assert coset == start, "relator escaped its coset"
            relators.append(free_reduce(out))
    return FinitePresentation(tuple(names), tuple(relators))
