"""H-shaped trees, the symmetric square of Lambda^2 H, and the tree space.

An H-tree T(x1, x2; x3, x4) expands to the element (x1 ^ x2)(x3 ^ x4) of
S^2(Lambda^2 H).  The degree-two tree space is the quotient of S^2(Lambda^2 H)
by the image of Lambda^4 H under

    w ^ x ^ y ^ z  |->  (w^x)(y^z) - (w^y)(x^z) + (w^z)(x^y),

and is represented here by canonical normal forms: residuals of span
reduction against the embedded basis 4-tuples, with pivot order the global
key order a1 < b1 < a2 < b2 < ...

Wedge keys store their two labels sorted (sign absorbed into the
coefficient) and symmetric-product keys store their two wedges sorted, so
the AS and leg-swap symmetries are structural.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import NamedTuple

from .exact import FreeVec, SpanBasis
from .symplectic import DEFAULT_GENUS, basis_labels, gl_hvec_action, hvec


class HTree(NamedTuple):
    """H-shaped tree with left leg (x1, x2) and right leg (x3, x4)."""

    x1: FreeVec
    x2: FreeVec
    x3: FreeVec
    x4: FreeVec


def tree(x1, x2, x3, x4) -> HTree:
    """Build an H-tree; bare basis labels are promoted to vectors of H."""
    return HTree(hvec(x1), hvec(x2), hvec(x3), hvec(x4))


def wedge_expand(u: FreeVec, v: FreeVec) -> FreeVec:
    """Bilinear expansion of u ^ v over sorted wedge keys."""
    terms = []
    for ku, cu in u.items():
        for kv, cv in v.items():
            if ku == kv:
                continue
            if ku < kv:
                terms.append(((ku, kv), cu * cv))
            else:
                terms.append(((kv, ku), -cu * cv))
    return FreeVec(terms)


def sym_product(left: FreeVec, right: FreeVec) -> FreeVec:
    """Commutative product of two Lambda^2 vectors over sorted wedge pairs."""
    terms = []
    for kl, cl in left.items():
        for kr, cr in right.items():
            key = (kl, kr) if kl <= kr else (kr, kl)
            terms.append((key, cl * cr))
    return FreeVec(terms)


def tree_expand(t: HTree) -> FreeVec:
    """Expansion of the tree into S^2(Lambda^2 H)."""
    return sym_product(wedge_expand(t.x1, t.x2), wedge_expand(t.x3, t.x4))


def lambda4_embed(w, x, y, z) -> FreeVec:
    """Alternating image of w ^ x ^ y ^ z inside S^2(Lambda^2 H)."""
    w, x, y, z = hvec(w), hvec(x), hvec(y), hvec(z)
    return (tree_expand(HTree(w, x, y, z))
            - tree_expand(HTree(w, y, x, z))
            + tree_expand(HTree(w, z, x, y)))


def key_labels(key) -> tuple:
    """The four slot labels of a wedge-pair key, in stored order."""
    return key[0] + key[1]


def s2l2_max_index(v: FreeVec) -> int:
    return max((lbl.index for key, _ in v.items() for lbl in key_labels(key)),
               default=0)


@lru_cache(maxsize=None)
def lambda4_basis(genus: int) -> tuple:
    """Embeddings of all strictly increasing basis 4-tuples at this genus."""
    labels = basis_labels(genus)
    return tuple(lambda4_embed(*quad) for quad in combinations(labels, 4))


@lru_cache(maxsize=None)
def lambda4_span(genus: int) -> SpanBasis:
    return SpanBasis(lambda4_basis(genus))


def a2_normalize(v: FreeVec, genus: int = DEFAULT_GENUS) -> FreeVec:
    """Canonical representative of ``v`` modulo the embedded Lambda^4 H."""
    top = s2l2_max_index(v)
    if top > genus:
        raise ValueError("vector uses index %d beyond genus %d" % (top, genus))
    _, residual = lambda4_span(genus).reduce(v)
    return residual


def a2_equal(x: FreeVec, y: FreeVec, genus: int = DEFAULT_GENUS) -> bool:
    """Equality in the tree space, i.e. modulo Lambda^4 H."""
    return a2_normalize(x - y, genus).is_zero()


def tau2_bscc_twist(x, y, genus: int = DEFAULT_GENUS) -> FreeVec:
    """Image of the Dehn twist on a genus-1 bounding curve with subsurface basis (x, y).

    The twist maps to twice the tree with both legs (x, y); the result is
    returned in A2 normal form.
    """
    x, y = hvec(x), hvec(y)
    return a2_normalize(2 * tree_expand(HTree(x, y, x, y)), genus)


def gl_tree_action(gen, t: HTree) -> HTree:
    """A GL generator applied to all four labels of a tree."""
    return HTree(gl_hvec_action(gen, t.x1), gl_hvec_action(gen, t.x2),
                 gl_hvec_action(gen, t.x3), gl_hvec_action(gen, t.x4))


def gl_s2l2_action(gen, v: FreeVec) -> FreeVec:
    """Diagonal GL generator action on an expanded S^2(Lambda^2 H) vector."""
    out = FreeVec()
    for key, coeff in v.items():
        l1, l2, l3, l4 = key_labels(key)
        image = tree_expand(tree(gl_hvec_action(gen, hvec(l1)),
                                 gl_hvec_action(gen, hvec(l2)),
                                 gl_hvec_action(gen, hvec(l3)),
                                 gl_hvec_action(gen, hvec(l4))))
        out = out + coeff * image
    return out
