"""Mod-2 homology cover of a closed surface, built as an explicit CW complex.

The base surface of genus g has one vertex, 2g loop edges and one face. Its
mod-2 homology cover has deck group Z2^(2g): vertices are bitmasks v in
[0, 2^(2g)), the lift of loop k starting at v is an edge from v to
v ^ (1 << (k - 1)), and one face per vertex carries the lifted relator.
Everything downstream (H1 classes of lifted loops, deck action, the finite
quotient group) reads off this complex.
"""

from dataclasses import dataclass

from .gf2 import GF2Matrix, QuotientMap, matmul
from .words import abelianization_mod2, surface_relator

MAX_GENUS = 4


class ResourceLimitError(RuntimeError):
    """Raised when a requested cover exceeds the supported size budget."""


@dataclass(frozen=True)
class CoverStats:
    """Cell counts and derived invariants of a covering surface."""

    base_genus: int
    n_vertices: int
    n_edges: int
    n_faces: int
    euler_characteristic: int
    cover_genus: int
    h1_dim: int


class CoverCW:
    """CW complex of the mod-2 homology cover of a genus-g surface.

    Attributes:
        genus: genus of the base surface.
        n_vertices, n_edges, n_faces: cell counts (2^2g, 2g*2^2g, 2^2g).
        d1: vertex-by-edge boundary matrix over GF(2).
        d2: edge-by-face boundary matrix over GF(2).
        tree_chains: per vertex, the edge chain of the BFS tree path from 0.
        tree_words: per vertex, the word spelling that tree path.
        nontree_edges: edges outside the spanning tree, ascending.
        cycle_basis: one fundamental cycle per non-tree edge.
        quotient: map from 1-cycles to H1 coordinates.
        h1_dim: dimension of H1 of the cover over GF(2).
    """

    def __init__(self, genus: int):
        if genus < 2:
            raise ValueError("genus must be at least 2")
        if genus > MAX_GENUS:
            raise ResourceLimitError(
                "genus %d cover exceeds the supported size budget (max genus %d)"
                % (genus, MAX_GENUS)
            )
        self.genus = genus
        self.n_vertices = 1 << (2 * genus)
        self.n_edges = self.n_vertices * 2 * genus
        self.n_faces = self.n_vertices
        self._build_boundaries()
        self._build_tree()
        self._build_h1()
        self._deck_cache = {}

    def edge_index(self, v: int, k: int) -> int:
        """Index of the lift of loop k (1-based) starting at vertex v."""
        return v * (2 * self.genus) + (k - 1)

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        """Start and end vertex of edge e."""
        v, j = divmod(e, 2 * self.genus)
        return v, v ^ (1 << j)

    def lift(self, word, start: int) -> tuple[int, int]:
        """Lift a word to an edge chain from a start vertex.

        Returns:
            (chain, end): GF(2) edge chain as an int bitmask, and the vertex
            where the lifted path ends (start ^ mod-2 abelianization).
        """
        chain = 0
        v = start
        for x in word:
            k = abs(x)
            bit = 1 << (k - 1)
            if x > 0:
                chain ^= 1 << self.edge_index(v, k)
                v ^= bit
            else:
                v ^= bit
                chain ^= 1 << self.edge_index(v, k)
        return chain, v

    def loop_class(self, chain: int) -> int:
        """H1 coordinates of a closed edge chain (raises if not a cycle)."""
        return self.quotient.coords(chain)

    def closed_up_class(self, start: int, word) -> int:
        """H1 class of a word's lift from a vertex, closed up through the tree.

        The lift runs from start to start ^ phi(word); tree paths 0 -> start
        and endpoint -> 0 make it a loop at vertex 0.
        """
        chain, end = self.lift(word, start)
        chain ^= self.tree_chains[start] ^ self.tree_chains[end]
        return self.quotient.coords(chain)

    def translate_chain(self, chain: int, u: int) -> int:
        """Image of an edge chain under the deck translation by u."""
        if u == 0:
            return chain
        width = 2 * self.genus
        out = 0
        while chain:
            low = chain & -chain
            e = low.bit_length() - 1
            v, j = divmod(e, width)
            out |= 1 << ((v ^ u) * width + j)
            chain ^= low
        return out

    def deck_action(self, u: int) -> tuple[int, ...]:
        """Matrix of the deck translation by u on H1, as H1-coordinate columns.

        Column j is the class of the translated j-th basis cycle; apply with
        deck_apply. Results are cached per u.
        """
        cached = self._deck_cache.get(u)
        if cached is None:
            cached = tuple(
                self.quotient.coords(self.translate_chain(c, u))
                for c in self.quotient.basis_cycles()
            )
            self._deck_cache[u] = cached
        return cached

    def stats(self) -> CoverStats:
        """Cell counts, Euler characteristic, cover genus and H1 dimension."""
        chi = self.n_vertices - self.n_edges + self.n_faces
        return CoverStats(
            base_genus=self.genus,
            n_vertices=self.n_vertices,
            n_edges=self.n_edges,
            n_faces=self.n_faces,
            euler_characteristic=chi,
            cover_genus=(2 - chi) // 2,
            h1_dim=self.h1_dim,
        )

    def _build_boundaries(self) -> None:
        d1_rows = [0] * self.n_vertices
        for e in range(self.n_edges):
            v, w = self.edge_endpoints(e)
            d1_rows[v] |= 1 << e
            d1_rows[w] |= 1 << e
        self.d1 = GF2Matrix(self.n_vertices, self.n_edges, tuple(d1_rows))

        relator = surface_relator(self.genus)
        face_chains = []
        for v in range(self.n_faces):
            chain, end = self.lift(relator, v)
            if end != v:
                raise AssertionError("relator lift must close up")
            face_chains.append(chain)
        self._face_chains = tuple(face_chains)
        faces_by_edges = GF2Matrix(self.n_faces, self.n_edges, self._face_chains)
        self.d2 = faces_by_edges.transpose()

    def _build_tree(self) -> None:
        chains = [0] * self.n_vertices
        words = [()] * self.n_vertices
        seen = [False] * self.n_vertices
        seen[0] = True
        queue = [0]
        tree_edges = set()
        while queue:
            next_queue = []
            for v in queue:
                for k in range(1, 2 * self.genus + 1):
                    w = v ^ (1 << (k - 1))
                    if seen[w]:
                        continue
                    seen[w] = True
                    e = self.edge_index(v, k)
                    tree_edges.add(e)
                    chains[w] = chains[v] ^ (1 << e)
                    words[w] = words[v] + (k,)
                    next_queue.append(w)
            queue = next_queue
        self.tree_chains = tuple(chains)
        self.tree_words = tuple(words)
        self.nontree_edges = tuple(
            e for e in range(self.n_edges) if e not in tree_edges
        )

    def _build_h1(self) -> None:
        cycles = []
        for e in self.nontree_edges:
            v, w = self.edge_endpoints(e)
            cycles.append(self.tree_chains[v] ^ (1 << e) ^ self.tree_chains[w])
        self.cycle_basis = tuple(cycles)
        self.quotient = QuotientMap(self.cycle_basis, self._face_chains, self.n_edges)
        self.h1_dim = self.quotient.dim


def deck_apply(columns: tuple[int, ...], h: int) -> int:
    """Apply a deck-action matrix (tuple of columns) to an H1 vector."""
    out = 0
    while h:
        low = h & -h
        out ^= columns[low.bit_length() - 1]
        h ^= low
    return out


def build_mod2_cover(genus: int) -> CoverCW:
    """Build the mod-2 homology cover complex for a genus-g surface."""
    return CoverCW(genus)


def check_chain_complex(cover: CoverCW) -> bool:
    """Verify d1 . d2 = 0; returns True or raises AssertionError."""
    product = matmul(cover.d1, cover.d2)
    if any(row != 0 for row in product.data):
        raise AssertionError("boundary maps do not compose to zero")
    return True
