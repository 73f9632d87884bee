"""Discriminant groups, isotropy checks, and lattice gluing."""

from fractions import Fraction
from random import Random

import pytest

from gmlattice import (
    DegenerateLatticeError,
    GlueData,
    GlueObstructionError,
    GramLattice,
    InvalidElementError,
    Sublattice,
    check_isotropic,
    determinant,
    direct_sum,
    discriminant_group,
    glue,
    glue_extension_check,
    is_isometric_small,
    mukai_sign_reversed,
    orthogonal_complement,
    smith_normal_form,
    standard_lattice,
    twist,
)
from gmlattice.discriminant import glue_with_basis
from gmlattice import intmat

H = Fraction(1, 2)


def random_even(rng, n, lo=-4, hi=4):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = rng.randint(lo, hi)
            if i == j:
                v = 2 * v
            g[i][j] = g[j][i] = v
    return GramLattice(tuple(tuple(r) for r in g))


def test_smith_normal_form_reexport():
    D, U, V = smith_normal_form(((-2, 0, 1), (0, -2, 0), (1, 0, 2)))
    assert [D[i][i] for i in range(3)] == [1, 1, 10]


def test_disc_group_of_lambda_classes():
    dg = discriminant_group(GramLattice(((-2, 0), (0, -2))))
    assert dg.invariant_factors == (2, 2)
    assert dg.qvalues == (Fraction(3, 2), Fraction(3, 2))
    assert dg.order == 4


def test_disc_group_unimodular_trivial():
    dg = discriminant_group(standard_lattice("U"))
    assert dg.is_trivial()
    assert dg.group_name() == "trivial"


def test_disc_group_rank_one():
    dg = discriminant_group(GramLattice(((2,),)))
    assert dg.invariant_factors == (2,)
    assert dg.qvalues == (H,)


def test_disc_group_requires_even_nondegenerate():
    with pytest.raises(DegenerateLatticeError):
        discriminant_group(GramLattice(((0, 0), (0, 0))))
    with pytest.raises(Exception):
        discriminant_group(standard_lattice("I(2,0)"))


def test_disc_group_of_vanishing_lattice():
    # the rank-22 lattice E8^2 + U^2 + I(2,0)(2): d = (Z/2)^2 with q = (1/2, 1/2)
    dg = discriminant_group(standard_lattice("Lambda"))
    assert dg.invariant_factors == (2, 2)
    assert dg.qvalues == (Fraction(1, 2), Fraction(1, 2))


def test_rank24_mukai_is_unimodular_by_snf():
    from gmlattice.intmat import invariant_factors

    assert invariant_factors(mukai_sign_reversed().gram) == [1] * 24


def test_disc_group_order_equals_det_random():
    rng = Random(21)
    done = 0
    while done < 60:
        L = random_even(rng, rng.randint(1, 4))
        d = determinant(L)
        if d == 0:
            continue
        dg = discriminant_group(L)
        assert dg.order == abs(d)
        # generators really lie in the dual and have the stated orders
        for g, order in zip(dg.generators, dg.invariant_factors):
            for row in L.gram:
                val = sum(Fraction(a) * x for a, x in zip(row, g))
                assert val.denominator == 1
            scaled = tuple(order * x for x in g)
            assert all(x.denominator == 1 for x in scaled)
        done += 1


def test_q_values_negate_under_twist():
    rng = Random(22)
    done = 0
    while done < 40:
        L = random_even(rng, rng.randint(1, 3))
        if determinant(L) == 0:
            continue
        dg = discriminant_group(L)
        Lneg = twist(L, -1)
        for g, q in zip(dg.generators, dg.qvalues):
            # evaluate q on the same lift in the twisted lattice
            val = sum(
                Fraction(Lneg.gram[i][j]) * g[i] * g[j]
                for i in range(L.rank)
                for j in range(L.rank)
            )
            val = val - 2 * (val / 2).__floor__()
            assert (val + q) % 2 == 0
        done += 1


# ---------------------------------------------------------------------------
# isotropy and glue


def test_isotropy_rejects_the_sum_class():
    # S = diag(-2,-2), K = <2>, H = <(1,1,1)>: q = 1/2 + 1/2 - 1/2 != 0
    g = GlueData(
        GramLattice(((-2, 0), (0, -2))),
        GramLattice(((2,),)),
        (((H, H), (H,)),),
    )
    assert check_isotropic(g) is False


def test_isotropy_of_opposite_forms():
    g = GlueData(GramLattice(((2,),)), GramLattice(((-2,),)), (((H,), (H,)),))
    assert check_isotropic(g) is True


def test_isotropy_trivial_group():
    g = GlueData(GramLattice(((2,),)), GramLattice(((-2,),)), ())
    assert check_isotropic(g) is True


def test_malformed_lift_raises():
    g = GlueData(
        GramLattice(((2,),)), GramLattice(((-2,),)), (((Fraction(1, 3),), (H,)),)
    )
    with pytest.raises(InvalidElementError):
        check_isotropic(g)
    dg = discriminant_group(GramLattice(((2,),)))
    with pytest.raises(InvalidElementError):
        dg.exponents_of_lift((Fraction(1, 3),))
    assert dg.exponents_of_lift((Fraction(1, 2),)) == (1,)
    assert dg.exponents_of_lift((Fraction(0),)) == (0,)


def test_glue_diagonal_gives_u():
    g = GlueData(GramLattice(((2,),)), GramLattice(((-2,),)), (((H,), (H,)),))
    out = glue(g)
    assert determinant(out) == (2 * -2) // (2 * 2)
    assert bool(is_isometric_small(out, standard_lattice("U")))


def test_glue_trivial_is_direct_sum():
    left = GramLattice(((2,),))
    right = GramLattice(((-4,),))
    g = GlueData(left, right, ())
    assert glue(g) == direct_sum(left, right)


def test_glue_obstruction():
    g = GlueData(
        GramLattice(((-2, 0), (0, -2))),
        GramLattice(((2,),)),
        (((H, H), (H,)),),
    )
    with pytest.raises(GlueObstructionError):
        glue(g)


def test_glue_order_four_diagonal_gives_u():
    # <4> + <-4> glued along the diagonal Z/4 (q = 1/4 - 1/4 = 0) is an
    # even unimodular rank-2 indefinite lattice, i.e. U again
    q = Fraction(1, 4)
    g = GlueData(GramLattice(((4,),)), GramLattice(((-4,),)), (((q,), (q,)),))
    assert check_isotropic(g)
    out, _, index = glue_with_basis(g)
    assert index == 4
    assert determinant(out) == -1
    assert bool(is_isometric_small(out, standard_lattice("U")))


def test_glue_two_generators_gives_u_plus_u():
    # two diagonal order-2 glues at once: <2>^2 + <-2>^2 becomes the even
    # unimodular lattice of signature (2,2), which is U + U
    left = GramLattice(((2, 0), (0, 2)))
    right = GramLattice(((-2, 0), (0, -2)))
    H = Fraction(1, 2)
    g = GlueData(left, right, (((H, 0), (H, 0)), ((0, H), (0, H))))
    assert check_isotropic(g)
    out, _, index = glue_with_basis(g)
    assert index == 4
    assert determinant(out) == 1
    assert out.is_even()
    U = standard_lattice("U")
    uu = direct_sum(U, U)
    from gmlattice import signature

    assert signature(out) == signature(uu) == (2, 2, 0)
    res = is_isometric_small(out, uu, coord_bound=4)
    assert res.status == "isometric"


def test_glue_determinant_law_random():
    rng = Random(23)
    done = 0
    while done < 25:
        left = random_even(rng, rng.randint(1, 2))
        right = random_even(rng, rng.randint(1, 2))
        if determinant(left) == 0 or determinant(right) == 0:
            continue
        dl = discriminant_group(left)
        dr = discriminant_group(right)
        # try gluing along a pair of order-2 classes when both sides have one
        gl = [g for g, f in zip(dl.generators, dl.invariant_factors) if f % 2 == 0]
        gr = [g for g, f in zip(dr.generators, dr.invariant_factors) if f % 2 == 0]
        if not gl or not gr:
            continue
        half_l = tuple(x * (dl.invariant_factors[0] // 2) for x in gl[0])
        half_r = tuple(x * (dr.invariant_factors[0] // 2) for x in gr[0])
        g = GlueData(left, right, ((half_l, half_r),))
        if not check_isotropic(g):
            continue
        out, _, index = glue_with_basis(g)
        assert determinant(out) * index**2 == determinant(left) * determinant(right)
        done += 1


# ---------------------------------------------------------------------------
# extension checks


def test_extension_check_in_u():
    U = standard_lattice("U")
    S = Sublattice(U, ((1, 1),))
    K = Sublattice(U, ((1, -1),))
    rep = glue_extension_check(S, K)
    assert rep.glue_order == 2
    assert rep.isotropic
    assert rep.quotient_identity_holds
    assert rep.det_law_holds
    assert rep.gen_qvalues == (Fraction(0),)


def test_extension_check_trivial_split():
    L = direct_sum(GramLattice(((2,),)), GramLattice(((-2,),)))
    rep = glue_extension_check(Sublattice(L, ((1, 0),)), Sublattice(L, ((0, 1),)))
    assert rep.glue_order == 1
    assert rep.quotient_identity_holds


def test_extension_check_mukai():
    M = mukai_sign_reversed()
    f1 = tuple(1 if i == 0 else (-1 if i == 1 else 0) for i in range(24))
    f2 = tuple(1 if i == 2 else (-1 if i == 3 else 0) for i in range(24))
    K = Sublattice(M, (f1, f2))
    S = orthogonal_complement(M, K)
    rep = glue_extension_check(S, K)
    assert rep.glue_order == 4
    assert rep.disc_order_ambient == 1
    assert rep.isotropic
    assert rep.quotient_identity_holds
    assert rep.det_law_holds


def test_glue_then_recover_round_trip():
    # glue <2> + <-2> along the diagonal, then locate the two rank-one
    # sublattices inside the overlattice and recover the same glue group
    left = GramLattice(((2,),))
    right = GramLattice(((-2,),))
    g = GlueData(left, right, (((H,), (H,)),))
    out, basis, index = glue_with_basis(g)
    assert index == 2
    # old basis vectors in new coordinates: solve x = y * basis
    bt = intmat.to_matrix(
        tuple(tuple(int(x * 2) for x in row) for row in basis)
    )  # scaled by 2 to clear halves
    # e1 = (1, 0), e2 = (0, 1) in old coords; coordinates w.r.t. new basis
    coords = []
    for old in ((2, 0), (0, 2)):  # scaled old vectors
        sol = intmat.rational_solve_square(intmat.transpose(bt), old)
        coords.append(tuple(int(c) for c in sol))
    Ssub = Sublattice(out, (coords[0],))
    Ksub = Sublattice(out, (coords[1],))
    rep = glue_extension_check(Ssub, Ksub)
    assert rep.glue_invariant_factors == (2,)
    assert rep.isotropic
    assert all(q == 0 for q in rep.gen_qvalues)
    assert rep.det_law_holds


def test_extension_check_rejects_non_orthogonal():
    U = standard_lattice("U")
    with pytest.raises(Exception):
        glue_extension_check(Sublattice(U, ((1, 0),)), Sublattice(U, ((0, 1),)))
