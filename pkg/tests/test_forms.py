import random
from fractions import Fraction
from itertools import combinations

import pytest

from helpers import expand, rand_label, rand_tree
from treetrace.exact import FreeVec, SpanBasis
from treetrace.forms import (
    b_form,
    cocycle,
    contract_cs,
    eta_s,
    j_form,
    key_bidegree,
    nabla,
    nabla_pair,
    project_bidegree,
    q_form,
    trace_a,
    trace_b,
    upsilon,
    w0_member,
)
from treetrace.surgery import FIGURE_EIGHT, TREFOIL
from treetrace.symplectic import a, all_generators, b, basis_labels
from treetrace.trees import (
    gl_tree_action,
    lambda4_embed,
    tau2_bscc_twist,
    tree_expand,
)

RNG_TREE_GENUS = 4


def s2h(u, v):
    return FreeVec.single((u, v) if u <= v else (v, u))


def tau_trefoil(genus=5):
    return tau2_bscc_twist(*TREFOIL.bscc_basis, genus=genus)


def tau_eight(genus=5):
    return tau2_bscc_twist(*FIGURE_EIGHT.bscc_basis, genus=genus)


# ---------------------------------------------------------------------------
# bidegree projections
# ---------------------------------------------------------------------------


def test_projection_rejects_bad_bidegree():
    with pytest.raises(ValueError):
        project_bidegree(FreeVec(), 2, 3)
    with pytest.raises(ValueError):
        project_bidegree(FreeVec(), 5, -1)


def test_projections_of_trefoil_twist_match_displayed_trees():
    tau = tau_trefoil()
    y = FreeVec({b(1): -1, b(2): 1})
    assert project_bidegree(tau, 1, 3) == \
        4 * (expand(a(1), y, b(1), b(2)) + expand(b(1), a(2), b(1), b(2)))
    assert project_bidegree(tau, 4, 0) == 2 * expand(a(1), a(2), a(1), a(2))
    assert project_bidegree(tau, 0, 4) == 2 * expand(b(1), b(2), b(1), b(2))
    assert project_bidegree(tau, 3, 1) == \
        4 * (expand(b(1), a(2), a(1), a(2)) + expand(a(1), y, a(1), a(2)))


def test_projections_of_figure_eight_twist_match_displayed_trees():
    tau = tau_eight()
    y = FreeVec({b(1): 1, b(2): -1})
    assert project_bidegree(tau, 1, 3) == \
        -4 * (expand(a(1), y, b(1), b(2)) + expand(b(1), a(2), b(1), b(2)))
    assert project_bidegree(tau, 3, 1) == \
        4 * (expand(b(1), a(2), a(1), a(2)) + expand(a(1), y, a(1), a(2)))
    assert project_bidegree(tau, 0, 4) == 2 * expand(b(1), b(2), b(1), b(2))
    assert project_bidegree(tau, 4, 0) == 2 * expand(a(1), a(2), a(1), a(2))


def test_projection_of_pure_a_part_to_b_bidegree_is_zero():
    v = expand(a(1), a(2), a(3), a(4))
    assert project_bidegree(v, 0, 4).is_zero()


def test_projections_decompose_identity():
    rng = random.Random(4001)
    for _ in range(60):
        v = tree_expand(rand_tree(rng, RNG_TREE_GENUS))
        total = FreeVec()
        for s in range(5):
            total = total + project_bidegree(v, s, 4 - s)
        assert total == v


# ---------------------------------------------------------------------------
# traces and W0
# ---------------------------------------------------------------------------


def test_trace_a_values():
    assert trace_a(expand(a(2), b(2), b(3), b(4))).is_zero()
    assert trace_a(expand(b(2), b(3), b(4), a(2))) == s2h(b(3), b(4))
    assert trace_a(expand(a(1), b(1), b(1), b(2))) == -s2h(b(1), b(2))


def test_trace_b_values():
    assert trace_b(expand(a(1), a(3), a(4), b(1))) == -s2h(a(3), a(4))
    # Direct evaluation of the mirrored formula: omega(b1, a1) = -1 makes
    # this come out positive; the contraction cross-check below agrees.
    assert trace_b(expand(b(1), a(1), a(1), a(2))) == s2h(a(1), a(2))
    assert trace_b(expand(b(2), a(2), a(3), a(4))).is_zero()


def test_trace_b_agrees_with_negated_contraction():
    assert trace_b(expand(b(1), a(1), a(1), a(2))) \
        == -contract_cs(expand(b(1), a(1), a(1), a(2)))


def test_trace_requires_a_label():
    with pytest.raises(ValueError):
        trace_a(expand(b(1), b(2), b(3), b(4)))
    with pytest.raises(ValueError):
        trace_b(expand(a(1), a(2), a(3), a(4)))


def test_trace_independent_of_which_slot_is_normalized():
    # Oracle: re-derive the trace putting each admissible slot first.
    front = {0: ((0, 1, 2, 3), 1), 1: ((1, 0, 2, 3), -1),
             2: ((2, 3, 0, 1), 1), 3: ((3, 2, 0, 1), -1)}

    def oracle(labels, slot):
        from treetrace.symplectic import label_omega
        perm, sign = front[slot]
        head, c_, d_, e_ = (labels[p] for p in perm)
        out = FreeVec()
        if c_.family == "b":
            w = label_omega(head, e_)
            if w and d_.family == "b":
                out = out + sign * w * s2h(d_, c_)
            w = label_omega(head, d_)
            if w and e_.family == "b":
                out = out - sign * w * s2h(e_, c_)
        return out

    rng = random.Random(4002)
    checked = 0
    while checked < 120:
        labels = tuple(rand_label(rng, 3) for _ in range(4))
        slots = [k for k, lbl in enumerate(labels) if lbl.family == "a"]
        if len(slots) < 2:
            continue
        reference = oracle(labels, slots[0])
        for slot in slots[1:]:
            assert oracle(labels, slot) == reference
        vec = expand(*labels)
        if vec:
            assert trace_a(vec) == reference
        checked += 1


def test_w0_membership():
    assert w0_member(expand(a(2), b(2), b(3), b(4)), "A")
    assert not w0_member(expand(b(2), b(3), b(4), a(2)), "A")
    assert w0_member(FreeVec(), "A")
    assert not w0_member(expand(a(1), a(3), a(4), b(1)), "B")


def test_w0_rejects_wrong_bidegree():
    with pytest.raises(ValueError):
        w0_member(expand(a(1), b(1), a(2), b(2)), "A")
    with pytest.raises(ValueError):
        w0_member(expand(a(1), b(1), b(2), b(3)), "B")


# ---------------------------------------------------------------------------
# contraction and pairings
# ---------------------------------------------------------------------------


def test_contraction_kills_embedded_four_forms():
    for genus in (2, 3, 4):
        for quad in combinations(basis_labels(genus), 4):
            assert contract_cs(lambda4_embed(*quad)).is_zero()


def test_contraction_of_twist_projections():
    tau = tau_trefoil()
    got13 = contract_cs(project_bidegree(tau, 1, 3))
    want13 = 4 * (s2h(b(1), b(2)) - s2h(b(2), b(2)) - s2h(b(1), b(1)))
    assert got13 == want13
    got31 = contract_cs(project_bidegree(tau, 3, 1))
    want31 = 4 * (-s2h(a(2), a(2)) - s2h(a(1), a(2)) - s2h(a(1), a(1)))
    assert got31 == want31


def test_eta_values():
    assert eta_s(s2h(b(3), b(4)), s2h(a(3), a(4))) == 1
    assert eta_s(s2h(b(2), b(2)), s2h(a(2), a(2))) == 2
    assert eta_s(s2h(b(1), b(2)), s2h(a(3), a(4))) == 0


def test_eta_symmetric_randomized():
    rng = random.Random(4003)
    labels = basis_labels(3)
    for _ in range(120):
        x = FreeVec([(tuple(sorted((rng.choice(labels), rng.choice(labels)))),
                      rng.randint(-3, 3)) for _ in range(3)])
        y = FreeVec([(tuple(sorted((rng.choice(labels), rng.choice(labels)))),
                      rng.randint(-3, 3)) for _ in range(3)])
        assert eta_s(x, y) == eta_s(y, x)


def test_eta_gram_matrix_nonsingular_at_genus_two():
    labels = basis_labels(2)
    pairs = [tuple(sorted((u, v)))
             for i, u in enumerate(labels) for v in labels[i:]]
    pairs = sorted(set(pairs))
    assert len(pairs) == 10
    rows = []
    for p in pairs:
        row = FreeVec((j, eta_s(FreeVec.single(p), FreeVec.single(q)))
                      for j, q in enumerate(pairs))
        rows.append(row)
    assert SpanBasis(rows).rank == 10


def test_upsilon_on_generator_pair():
    left = expand(b(2), b(3), b(4), a(2))
    right = expand(a(1), a(3), a(4), b(1))
    assert upsilon(left, right) == 1


def test_upsilon_on_trefoil_projections():
    tau = tau_trefoil()
    assert upsilon(project_bidegree(tau, 1, 3), project_bidegree(tau, 3, 1)) == 48


def test_upsilon_disjoint_index_sets():
    assert upsilon(expand(a(1), b(1), a(2), b(2)),
                   expand(a(3), b(3), a(4), b(4))) == 0


# ---------------------------------------------------------------------------
# the tree inner product
# ---------------------------------------------------------------------------


def test_nabla_on_generator_pair():
    assert nabla(expand(b(1), b(2), b(3), b(4)),
                 expand(a(1), a(2), a(3), a(4))) == 1


def test_nabla_on_repeated_pair():
    assert nabla(expand(b(2), b(1), b(2), b(1)),
                 expand(a(2), a(1), a(2), a(1))) == 3


def test_nabla_annihilates_four_form_against_tree():
    assert nabla(lambda4_embed(a(1), b(1), a(2), b(2)),
                 expand(a(1), b(1), a(2), b(2))) == 0
    # The three embedded terms contribute 1, 1/2, 1/2 with signs.
    k1 = expand(a(1), b(1), a(2), b(2))
    k2 = expand(a(1), a(2), b(1), b(2))
    k3 = expand(a(1), b(2), b(1), a(2))
    y = expand(a(1), b(1), a(2), b(2))
    assert nabla(k1, y) == 1
    assert nabla(k2, y) == Fraction(1, 2)
    assert nabla(k3, y) == -Fraction(1, 2)


def test_nabla_annihilates_four_forms_both_sides():
    rng = random.Random(4004)
    quads = list(combinations(basis_labels(4), 4))
    for _ in range(100):
        quad = rng.choice(quads)
        t = tree_expand(rand_tree(rng, 4))
        assert nabla(lambda4_embed(*quad), t) == 0
        assert nabla(t, lambda4_embed(*quad)) == 0


def test_nabla_pair_respects_tree_symmetries():
    rng = random.Random(4005)
    perms = [((0, 1, 2, 3), 1), ((1, 0, 2, 3), -1), ((0, 1, 3, 2), -1),
             ((1, 0, 3, 2), 1), ((2, 3, 0, 1), 1), ((3, 2, 0, 1), -1),
             ((2, 3, 1, 0), -1), ((3, 2, 1, 0), 1)]
    labels = basis_labels(4)
    for _ in range(120):
        xs = tuple(rng.choice(labels) for _ in range(4))
        ys = tuple(rng.choice(labels) for _ in range(4))
        base = nabla_pair(xs, ys)
        for perm, sign in perms:
            assert nabla_pair(tuple(xs[p] for p in perm), ys) == sign * base
            assert nabla_pair(xs, tuple(ys[p] for p in perm)) == sign * base


# ---------------------------------------------------------------------------
# the desymmetrized forms and the cocycle
# ---------------------------------------------------------------------------


def test_q_form_values_on_twists():
    assert q_form(tau_trefoil(), tau_trefoil()) == 48
    assert q_form(tau_eight(), tau_eight()) == 80


def test_q_form_kills_pure_b_left_argument():
    v = expand(b(1), b(2), b(3), b(4))
    assert q_form(v, tau_trefoil()) == 0


def test_j_form_values():
    assert j_form(tau_trefoil(), tau_trefoil()) == 12
    assert j_form(tau_eight(), tau_eight()) == 12
    assert j_form(expand(b(1), b(2), b(3), b(4)),
                  expand(a(1), a(2), a(3), a(4))) == 1


def test_generator_pairs_split_the_two_forms():
    b4 = expand(b(1), b(2), b(3), b(4))
    a4 = expand(a(1), a(2), a(3), a(4))
    ab3 = expand(b(2), b(3), b(4), a(2))
    a3b = expand(a(1), a(3), a(4), b(1))
    assert (q_form(b4, a4), j_form(b4, a4)) == (0, 1)
    assert (q_form(ab3, a3b), j_form(ab3, a3b)) == (1, 0)


def test_b_form_values():
    assert b_form(tau_trefoil(), tau_trefoil()) == 72
    assert b_form(tau_eight(), tau_eight()) == 96


def test_b_form_vanishes_on_disjoint_supports():
    x = tau2_bscc_twist(a(1), b(1), 5)
    y = tau2_bscc_twist(a(3), b(3), 5)
    assert q_form(x, y) == 0
    assert j_form(x, y) == 0
    assert b_form(x, y) == 0


def test_cocycle_values():
    lam_k = Fraction(1)
    lam_l = Fraction(-1)
    assert cocycle(lam_k, tau_trefoil(), lam_k, tau_trefoil()) == 108
    assert cocycle(lam_l, tau_eight(), lam_l, tau_eight()) == 132


def test_cocycle_reduces_to_casson_part_on_disjoint_supports():
    x = tau2_bscc_twist(a(1), b(1), 5)
    y = tau2_bscc_twist(a(3), b(3), 5)
    assert cocycle(Fraction(2), x, Fraction(-5), y) == 36 * 2 * -5


def test_cocycle_zero_when_both_parts_vanish():
    assert cocycle(Fraction(3), FreeVec(), Fraction(0), FreeVec()) == 0


def test_forms_invariant_under_gl_generators():
    rng = random.Random(4006)
    for genus in (4, 5):
        for gen in all_generators(genus):
            x = rand_tree(rng, genus)
            y = rand_tree(rng, genus)
            ex, ey = tree_expand(x), tree_expand(y)
            gx = tree_expand(gl_tree_action(gen, x))
            gy = tree_expand(gl_tree_action(gen, y))
            assert q_form(gx, gy) == q_form(ex, ey)
            assert j_form(gx, gy) == j_form(ex, ey)


def test_form_values_stable_in_genus():
    for knot_tau in (tau2_bscc_twist(*TREFOIL.bscc_basis, genus=5),
                     tau2_bscc_twist(*TREFOIL.bscc_basis, genus=6)):
        assert q_form(knot_tau, knot_tau) == 48
        assert j_form(knot_tau, knot_tau) == 12


def test_q_form_vanishes_on_trace_kernel_left_arguments():
    # Build the kernel of the trace on the (1,3) piece at genus 4, then pair
    # random kernel elements against random right arguments.
    labels = basis_labels(4)
    wedges = [(u, v) for i, u in enumerate(labels) for v in labels[i + 1:]]
    keys = []
    for i, w1 in enumerate(wedges):
        for w2 in wedges[i:]:
            bid = key_bidegree((w1, w2))
            if bid == (1, 3):
                keys.append((w1, w2))
    vectors = [FreeVec.single(key) for key in keys]
    span = SpanBasis()
    kernel = []
    for vec in vectors:
        image = trace_a(vec)
        coeffs, residual = span.reduce(image)
        if residual.is_zero():
            combo = vec
            for c, prev in zip(coeffs, vectors):
                combo = combo - c * prev
            if combo:
                kernel.append(combo)
        span.add(image)
    assert kernel
    rng = random.Random(4007)
    for _ in range(100):
        x = FreeVec()
        for _ in range(3):
            x = x + rng.randint(-4, 4) * rng.choice(kernel)
        assert w0_member(x, "A")
        y = tree_expand(rand_tree(rng, 4))
        assert q_form(x, y) == 0


def test_j_form_vanishes_without_pure_b_part():
    rng = random.Random(4008)
    for _ in range(100):
        v = tree_expand(rand_tree(rng, 4))
        x = v - project_bidegree(v, 0, 4)
        assert project_bidegree(x, 0, 4).is_zero()
        y = tree_expand(rand_tree(rng, 4))
        assert j_form(x, y) == 0
