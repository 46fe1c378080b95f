"""Finite 2-group quotient of a surface group via its mod-2 homology cover.

A word w maps to rho(w) = (v, h): v is its mod-2 abelianization (the vertex
its lift from vertex 0 reaches) and h is the GF(2) homology class of that
lift closed up through the spanning tree. Words act trivially exactly when
their lifts close up and bound mod 2, so the kernel of rho consists of loops
that stay invisible in the cover's first homology. Multiplication twists the
h parts by the deck action plus a spanning-tree cocycle, which makes rho a
homomorphism onto a group of order 2^(2g + 2g') without materializing it.
"""

from dataclasses import dataclass

from .cover import CoverCW, deck_apply
from .words import (
    Word,
    abelianization_mod2,
    canonical_class,
    is_proper_power,
    is_trivial,
    letter_order_key,
)


@dataclass(frozen=True)
class GElement:
    """Group element as a (deck vector, H1 class) pair of GF(2) bitmasks."""

    v: int
    h: int


class GroupContext:
    """Arithmetic context for the quotient group of a surface group.

    Immutable after construction except the cocycle memo table, which is an
    idempotent cache (same key always maps to the same value), so concurrent
    reads and fills from worker threads are safe.
    """

    def __init__(self, cover: CoverCW):
        self.cover = cover
        self.genus = cover.genus
        self.identity = GElement(0, 0)
        self._cocycle_cache = {}

    def cocycle(self, v1: int, v2: int) -> int:
        """H1 class of the tree loop 0 -> v1 -> v1+v2 -> 0 (memoized)."""
        key = (v1, v2)
        val = self._cocycle_cache.get(key)
        if val is None:
            chains = self.cover.tree_chains
            loop = (
                chains[v1]
                ^ self.cover.translate_chain(chains[v2], v1)
                ^ chains[v1 ^ v2]
            )
            val = self.cover.loop_class(loop)
            self._cocycle_cache[key] = val
        return val

    def deck_matrix(self, u: int) -> tuple[int, ...]:
        """H1 action of the deck translation by u, as coordinate columns."""
        return self.cover.deck_action(u)

    def group_order_log2(self) -> int:
        """Log base 2 of the order of the full extension group."""
        return 2 * self.genus + self.cover.h1_dim


def rho(ctx: GroupContext, w: Word) -> GElement:
    """Image of a word: deck vector plus closed-up lift class from vertex 0."""
    v = abelianization_mod2(w, ctx.genus)
    return GElement(v, ctx.cover.closed_up_class(0, w))


def mul(ctx: GroupContext, x: GElement, y: GElement) -> GElement:
    """Product in the extension group: twisted by deck action and cocycle."""
    h = x.h ^ deck_apply(ctx.deck_matrix(x.v), y.h) ^ ctx.cocycle(x.v, y.v)
    return GElement(x.v ^ y.v, h)


def inv(ctx: GroupContext, x: GElement) -> GElement:
    """Inverse in the extension group."""
    h = deck_apply(ctx.deck_matrix(x.v), x.h ^ ctx.cocycle(x.v, x.v))
    return GElement(x.v, h)


def in_kernel(ctx: GroupContext, w: Word) -> bool:
    """Whether a word maps to the identity (lift closed and bounding mod 2)."""
    if abelianization_mod2(w, ctx.genus) != 0:
        return False
    return ctx.cover.closed_up_class(0, w) == 0


def search_kernel_elements(
    ctx: GroupContext, max_len: int
) -> list[tuple[Word, bool]]:
    """Find nontrivial kernel words up to a length bound.

    Enumerates freely and cyclically reduced words by increasing length, one
    canonical representative per free conjugacy class (kernel membership is
    a class property), and keeps the Dehn-nontrivial ones that map to the
    identity. Each hit is paired with its proper-power flag.

    Returns:
        List of (word, is_proper_power) pairs in discovery order.
    """
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    genus = ctx.genus
    alphabet = sorted(
        [k for k in range(1, 2 * genus + 1)]
        + [-k for k in range(1, 2 * genus + 1)],
        key=letter_order_key,
    )
    hits: list[tuple[Word, bool]] = []
    word: list[int] = []

    def extend(phi: int, length: int) -> None:
        if len(word) == length:
            if phi != 0 or word[-1] == -word[0]:
                return
            w = tuple(word)
            if canonical_class(w) != w:
                return
            if ctx.cover.closed_up_class(0, w) != 0:
                return
            if is_trivial(w, genus):
                return
            hits.append((w, is_proper_power(w)))
            return
        remaining = length - len(word)
        if phi.bit_count() > remaining:
            return
        first_key = letter_order_key(word[0]) if word else None
        for x in alphabet:
            if word and x == -word[-1]:
                continue
            if first_key is not None and letter_order_key(x) < first_key:
                continue
            word.append(x)
            extend(phi ^ (1 << (abs(x) - 1)), length)
            word.pop()

    for length in range(1, max_len + 1):
        extend(0, length)
    return hits


def empirical_image_rank(
    ctx: GroupContext, n_samples: int = 500, seed: int = 0
) -> dict:
    """Sample the image of rho and report attained GF(2) ranks.

    Reports the rank of the deck parts of sampled images and the rank of the
    h parts attained with deck part zero (via squares and commutators). These
    are lower bounds on the image's size, reported as observations only.

    Returns:
        Dict with v_rank, h_rank, v_dim, h_dim.
    """
    import random

    from .words import random_reduced_word

    rng = random.Random(seed)
    v_basis: list[int] = []
    h_basis: list[int] = []

    def insert(basis: list[int], vec: int) -> None:
        for b in basis:
            vec = min(vec, vec ^ b)
        if vec:
            basis.append(vec)
            basis.sort(reverse=True)

    elements = []
    for _ in range(n_samples):
        w = random_reduced_word(rng, ctx.genus, rng.randrange(1, 16))
        el = rho(ctx, w)
        elements.append(el)
        insert(v_basis, el.v)
    for _ in range(n_samples):
        x = elements[rng.randrange(len(elements))]
        y = elements[rng.randrange(len(elements))]
        square = mul(ctx, x, x)
        comm = mul(ctx, mul(ctx, x, y), inv(ctx, mul(ctx, y, x)))
        for el in (square, comm):
            if el.v == 0:
                insert(h_basis, el.h)
    return {
        "v_rank": len(v_basis),
        "h_rank": len(h_basis),
        "v_dim": 2 * ctx.genus,
        "h_dim": ctx.cover.h1_dim,
    }
