"""The symplectic module H = A + B and its GL-coinvariant reduction.

``H`` carries the standard symplectic basis a_1, b_1, ..., a_g, b_g: the
a_i span the Lagrangian A, the b_i span B.  Two pairings live on H: the
antisymmetric intersection form ``omega`` with omega(a_i, b_j) = delta_ij,
and the symmetric pairing ``omega_bar`` with omega_bar(a_i, b_j) = delta_ij
and both Lagrangians isotropic.

GL_g(Z) acts on A by a matrix G and on B by its inverse transpose; the
action on tensor powers is factor-wise.  ``coinvariant_reduce`` rewrites a
tensor as a combination of balanced "chord" tensors, the generators of the
coinvariant quotient of an even tensor power.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Union

from .exact import FreeVec

DEFAULT_GENUS = 5

FAMILY_A = "a"
FAMILY_B = "b"


class BasisLabel(NamedTuple):
    """One symplectic basis vector: a_index or b_index."""

    index: int
    family: str

    def __str__(self):
        return "%s%d" % (self.family, self.index)


def a(i: int) -> BasisLabel:
    return BasisLabel(i, FAMILY_A)


def b(i: int) -> BasisLabel:
    return BasisLabel(i, FAMILY_B)


def basis_labels(genus: int) -> list:
    """All labels a_1 < b_1 < a_2 < ... < b_genus in the global key order."""
    out = []
    for i in range(1, genus + 1):
        out.append(a(i))
        out.append(b(i))
    return out


def hvec(label_or_vec) -> FreeVec:
    """Coerce a bare label to the corresponding basis vector of H."""
    if isinstance(label_or_vec, FreeVec):
        return label_or_vec
    if not isinstance(label_or_vec, BasisLabel):
        raise TypeError("expected a BasisLabel or a FreeVec over labels")
    return FreeVec.single(label_or_vec)


def label_omega(u: BasisLabel, v: BasisLabel) -> int:
    """Intersection pairing on basis labels: omega(a_i, b_i) = 1, antisymmetric."""
    if u.index != v.index or u.family == v.family:
        return 0
    return 1 if u.family == FAMILY_A else -1


def label_omega_bar(u: BasisLabel, v: BasisLabel) -> int:
    """Symmetric pairing on basis labels: a_i and b_i pair to 1, A and B isotropic."""
    if u.index != v.index or u.family == v.family:
        return 0
    return 1


def omega(u: FreeVec, v: FreeVec) -> Fraction:
    """Bilinear extension of the intersection form to H."""
    total = Fraction(0)
    for ku, cu in u.items():
        for kv, cv in v.items():
            w = label_omega(ku, kv)
            if w:
                total += cu * cv * w
    return total


def omega_bar(u: FreeVec, v: FreeVec) -> Fraction:
    """Bilinear extension of the symmetric A-B pairing to H."""
    total = Fraction(0)
    for ku, cu in u.items():
        for kv, cv in v.items():
            w = label_omega_bar(ku, kv)
            if w:
                total += cu * cv * w
    return total


def project_lagrangian(u: FreeVec, family: str) -> FreeVec:
    """Keep only the components of ``u`` lying in the requested Lagrangian."""
    if family not in (FAMILY_A, FAMILY_B):
        raise ValueError("family must be %r or %r" % (FAMILY_A, FAMILY_B))
    return FreeVec((k, c) for k, c in u.items() if k.family == family)


def max_index(u: FreeVec) -> int:
    """Largest basis index appearing in an H vector (0 for the zero vector)."""
    return max((k.index for k, _ in u.items()), default=0)


# ---------------------------------------------------------------------------
# GL_g(Z) generators and their diagonal action
# ---------------------------------------------------------------------------


class Transposition(NamedTuple):
    """Index swap i <-> j on both families."""

    i: int
    j: int


class SignFlip(NamedTuple):
    """Negation of a_j and b_j."""

    j: int


class Elementary(NamedTuple):
    """Elementary matrix sending a_j to a_j + sign*a_i, hence b_i to b_i - sign*b_j."""

    i: int
    j: int
    sign: int


GLGenerator = Union[Transposition, SignFlip, Elementary]


def generator_label_image(gen: GLGenerator, label: BasisLabel):
    """Image of one basis label under a generator, as (label, int coeff) pairs."""
    if isinstance(gen, Transposition):
        if label.index == gen.i:
            return [(BasisLabel(gen.j, label.family), 1)]
        if label.index == gen.j:
            return [(BasisLabel(gen.i, label.family), 1)]
        return [(label, 1)]
    if isinstance(gen, SignFlip):
        if label.index == gen.j:
            return [(label, -1)]
        return [(label, 1)]
    if isinstance(gen, Elementary):
        if gen.sign not in (1, -1):
            raise ValueError("elementary generator sign must be +1 or -1")
        if gen.i == gen.j:
            raise ValueError("elementary generator needs distinct indices")
        if label.family == FAMILY_A and label.index == gen.j:
            return [(label, 1), (a(gen.i), gen.sign)]
        if label.family == FAMILY_B and label.index == gen.i:
            return [(label, 1), (b(gen.j), -gen.sign)]
        return [(label, 1)]
    raise TypeError("not a GL generator: %r" % (gen,))


def gl_hvec_action(gen: GLGenerator, u: FreeVec) -> FreeVec:
    """Linear action of a generator on a vector of H."""
    terms = []
    for label, coeff in u.items():
        for image, ic in generator_label_image(gen, label):
            terms.append((image, coeff * ic))
    return FreeVec(terms)


def _tensor_images(gen: GLGenerator, tensor: tuple):
    # Factor-wise expansion of gen . (basic tensor); integer coefficients.
    expanded = [((), 1)]
    for label in tensor:
        images = generator_label_image(gen, label)
        expanded = [(prefix + (lbl,), c * ic)
                    for prefix, c in expanded
                    for lbl, ic in images]
    return expanded


def gl_generator_action(gen: GLGenerator, t) -> FreeVec:
    """Diagonal action of a generator on a tensor-power vector.

    ``t`` is a FreeVec over basic tensors (tuples of labels) or a bare tuple.
    """
    if isinstance(t, tuple):
        t = FreeVec.single(t)
    terms = []
    for tensor, coeff in t.items():
        for image, ic in _tensor_images(gen, tensor):
            terms.append((image, coeff * ic))
    return FreeVec(terms)


def all_generators(genus: int) -> list:
    """Every generator with indices in 1..genus."""
    gens = []
    for i in range(1, genus + 1):
        gens.append(SignFlip(i))
        for j in range(1, genus + 1):
            if i < j:
                gens.append(Transposition(i, j))
            if i != j:
                gens.append(Elementary(i, j, 1))
                gens.append(Elementary(i, j, -1))
    return gens


# ---------------------------------------------------------------------------
# Coinvariant reduction to chord generators
# ---------------------------------------------------------------------------


def _index_counts(tensor: tuple) -> dict:
    counts = {}
    for label in tensor:
        p, q = counts.get(label.index, (0, 0))
        if label.family == FAMILY_A:
            counts[label.index] = (p + 1, q)
        else:
            counts[label.index] = (p, q + 1)
    return counts


def _rename_chord(tensor: tuple) -> tuple:
    # Indices renamed 1, 2, ... ascending by first slot occurrence.
    renaming = {}
    out = []
    for label in tensor:
        new = renaming.get(label.index)
        if new is None:
            new = len(renaming) + 1
            renaming[label.index] = new
        out.append(BasisLabel(new, label.family))
    return tuple(out)


@lru_cache(maxsize=None)
def _reduce_basic(tensor: tuple) -> tuple:
    """Reduce one basic tensor; returns ((chord, int coeff), ...).

    A tensor with any unbalanced index (different numbers of a_i and b_i,
    which covers the odd-total case) dies in the coinvariant quotient.  An
    index carrying both labels more than once is split: the leftmost a_i
    and each b_i slot in turn are renamed to a fresh index, giving one
    summand per b_i slot.  Lowest repeated index first; the fresh index is
    the smallest one absent from the tensor.
    """
    counts = _index_counts(tensor)
    if any(p != q for p, q in counts.values()):
        return ()
    repeated = sorted(i for i, (p, _) in counts.items() if p > 1)
    if not repeated:
        return ((_rename_chord(tensor), 1),)
    target = repeated[0]
    fresh = 1
    while fresh in counts:
        fresh += 1
    a_slot = next(k for k, lbl in enumerate(tensor)
                  if lbl.index == target and lbl.family == FAMILY_A)
    totals = {}
    for b_slot, lbl in enumerate(tensor):
        if lbl.index != target or lbl.family != FAMILY_B:
            continue
        split = list(tensor)
        split[a_slot] = a(fresh)
        split[b_slot] = b(fresh)
        for chord, coeff in _reduce_basic(tuple(split)):
            totals[chord] = totals.get(chord, 0) + coeff
    return tuple(sorted((k, c) for k, c in totals.items() if c))


def coinvariant_reduce(t, genus: int) -> FreeVec:
    """Class of a degree-2n tensor in the GL-coinvariants, over chord tensors.

    Requires 1 <= n < genus and all indices within the genus.  The output
    is supported on balanced chord tensors in which every index pair
    appears at most once, renamed ascending by first occurrence.
    """
    if isinstance(t, tuple):
        t = FreeVec.single(t)
    degrees = {len(tensor) for tensor, _ in t.items()}
    if len(degrees) > 1:
        raise ValueError("tensor combination mixes degrees %s" % sorted(degrees))
    terms = []
    for tensor, coeff in t.items():
        degree = len(tensor)
        if degree % 2 != 0:
            raise ValueError("tensor degree must be even, got %d" % degree)
        n = degree // 2
        if not 1 <= n < genus:
            raise ValueError(
                "degree %d needs 1 <= degree/2 < genus, got genus %d"
                % (degree, genus))
        if any(lbl.index > genus or lbl.index < 1 for lbl in tensor):
            raise ValueError("tensor uses indices outside genus %d" % genus)
        for chord, ic in _reduce_basic(tensor):
            terms.append((chord, coeff * ic))
    return FreeVec(terms)
