"""Words in the fundamental group of a closed orientable genus-g surface.

The group is presented as

    < a_1, b_1, ..., a_g, b_g | [a_1,b_1][a_2,b_2]...[a_g,b_g] >

A word is a tuple of nonzero signed integers: letter +k is the k-th
generator in the fixed order a_1, b_1, a_2, b_2, ..., letter -k its
inverse.  The literal syntax is whitespace separated tokens such as
"a1 b2 A1 B2" where an uppercase family letter means the inverse.

The word problem is decided by Dehn's algorithm: the relator has
length 4g and satisfies the small cancellation condition, so any
freely and cyclically reduced word representing the identity contains
more than half of some cyclic rotation of the relator or its inverse,
and replacing that subword by the inverse of the complement strictly
shortens the word.
"""

from __future__ import annotations

import functools
import random

__all__ = [
    "Word",
    "gen_name",
    "gen_index",
    "word_from_str",
    "word_to_str",
    "free_reduce",
    "inverse",
    "concat",
    "cyclic_reduce",
    "commutator",
    "surface_relator",
    "separating_word",
    "substitute",
    "abelianization_mod2",
    "dehn_normal_form",
    "is_trivial",
    "letter_order_key",
    "canonical_class",
    "is_proper_power",
    "random_reduced_word",
]

Word = tuple  # tuple of nonzero signed ints


def gen_name(k: int) -> str:
    """Name of generator index k >= 1 in the order a1, b1, a2, b2, ..."""
    fam = "a" if k % 2 == 1 else "b"
    return f"{fam}{(k + 1) // 2}"


def gen_index(name: str) -> int:
    fam = name[0]
    idx = int(name[1:])
    if fam not in "ab" or idx < 1:
        raise ValueError(f"bad generator name: {name!r}")
    return 2 * idx - 1 if fam == "a" else 2 * idx


def word_from_str(text: str, genus: int) -> Word:
    """Parse literal syntax; uppercase family letter means inverse."""
    out = []
    for tok in text.split():
        fam = tok[0]
        sign = -1 if fam.isupper() else 1
        k = gen_index(fam.lower() + tok[1:])
        if k > 2 * genus:
            raise ValueError(f"letter {tok!r} outside genus {genus}")
        out.append(sign * k)
    return tuple(out)


def word_to_str(w: Word) -> str:
    toks = []
    for x in w:
        name = gen_name(abs(x))
        toks.append(name if x > 0 else name[0].upper() + name[1:])
    return " ".join(toks)


def free_reduce(w) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in w:
        if x == 0:
            raise ValueError("zero is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def concat(*ws: Word) -> Word:
    out: list[int] = []
    for w in ws:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def cyclic_reduce(w: Word) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def commutator(u: Word, v: Word) -> Word:
    return concat(u, v, inverse(u), inverse(v))


def surface_relator(genus: int) -> Word:
    """The defining relator [a1,b1]...[ag,bg]; genus must be >= 2."""
    if genus < 2:
        raise ValueError("genus must be at least 2")
    out = []
    for i in range(1, genus + 1):
        a, b = 2 * i - 1, 2 * i
        out.extend([a, b, -a, -b])
    return tuple(out)


def separating_word(genus: int, k: int) -> Word:
    """Standard separating curve word [a1,b1]...[ak,bk], 1 <= k <= g-1."""
    if not 1 <= k <= genus - 1:
        raise ValueError("separating index out of range")
    out = []
    for i in range(1, k + 1):
        a, b = 2 * i - 1, 2 * i
        out.extend([a, b, -a, -b])
    return tuple(out)


def substitute(w: Word, images: dict[int, Word]) -> Word:
    """Apply the endomorphism sending generator k to images[k], then reduce.

    Generators missing from the map are kept fixed.
    """
    out: list[int] = []
    for x in w:
        img = images.get(abs(x), (abs(x),))
        if x < 0:
            img = inverse(img)
        for y in img:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def abelianization_mod2(w: Word, genus: int) -> int:
    """Class in H_1(S; Z/2) = (Z/2)^{2g} as a bitmask, bit k-1 for generator k."""
    v = 0
    for x in w:
        k = abs(x)
        if k > 2 * genus:
            raise ValueError(f"letter {x} outside genus {genus}")
        v ^= 1 << (k - 1)
    return v


@functools.lru_cache(maxsize=None)
def _dehn_table(genus: int) -> dict[Word, Word]:
    """Subwords of rotations of r and r^-1 longer than half, with replacements."""
    r = surface_relator(genus)
    n = len(r)
    table: dict[Word, Word] = {}
    for base in (r, inverse(r)):
        for rot in range(n):
            rr = base[rot:] + base[:rot]
            for length in range(2 * genus + 1, n + 1):
                head, tail = rr[:length], rr[length:]
                table[head] = inverse(tail)
    return table


def dehn_normal_form(w, genus: int) -> Word:
    """Fully Dehn-reduced cyclic word; empty iff w is trivial in the group."""
    table = _dehn_table(genus)
    shortest = 2 * genus + 1
    longest = 4 * genus
    w = cyclic_reduce(free_reduce(w))
    changed = True
    while changed and w:
        changed = False
        n = len(w)
        doubled = w + w
        top = min(longest, n)
        for i in range(n):
            if changed:
                break
            for length in range(top, shortest - 1, -1):
                rep = table.get(doubled[i:i + length])
                if rep is not None:
                    rest = doubled[i + length:i + n]
                    w = cyclic_reduce(concat(rep, rest))
                    changed = True
                    break
    return w


def is_trivial(w, genus: int) -> bool:
    """Word problem via Dehn's algorithm; complete for surface groups."""
    return len(dehn_normal_form(w, genus)) == 0


def letter_order_key(x: int) -> int:
    """Total order a1 < a1^-1 < b1 < b1^-1 < a2 < ... as an integer key."""
    return 2 * (abs(x) - 1) + (1 if x < 0 else 0)


def _least_rotation(keys: list[int]) -> int:
    """Index of the lexicographically least rotation (Booth's algorithm)."""
    s = keys + keys
    n = len(keys)
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def canonical_class(w) -> Word:
    """Canonical representative of the free conjugacy class of w or w^-1.

    Cyclically reduces, then takes the least rotation of the word and of
    its inverse under the fixed letter order.  Rejects the empty word.
    """
    w = cyclic_reduce(free_reduce(w))
    if not w:
        raise ValueError("the trivial word has no essential class")
    best = None
    for cand in (w, inverse(w)):
        keys = [letter_order_key(x) for x in cand]
        i = _least_rotation(keys)
        rot = cand[i:] + cand[:i]
        if best is None or [letter_order_key(x) for x in rot] < best_keys:
            best = rot
            best_keys = [letter_order_key(x) for x in rot]
    return best


def is_proper_power(w) -> bool:
    """True iff the cyclic reduction is a literal repetition u^k, k >= 2."""
    v = cyclic_reduce(free_reduce(w))
    n = len(v)
    if n == 0:
        return False
    for d in range(1, n // 2 + 1):
        if n % d:
            continue
        if all(v[i] == v[i % d] for i in range(d, n)):
            return True
    return False


def random_reduced_word(rng: random.Random, genus: int, length: int) -> Word:
    """Uniform-ish freely reduced word of exactly the given length."""
    letters = [k for k in range(1, 2 * genus + 1)] + [-k for k in range(1, 2 * genus + 1)]
    out: list[int] = []
    while len(out) < length:
        x = rng.choice(letters)
        if out and out[-1] == -x:
            continue
        out.append(x)
    return tuple(out)
