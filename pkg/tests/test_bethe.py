"""Tests for tuple reproduction, populations, and weight bookkeeping."""

from fractions import Fraction as F

import pytest

from g2spaces.bethe import (
    BetheTuple,
    Weight,
    a_tuple,
    apply_D,
    degree_increasing_descendant,
    descendants,
    dominant_representative,
    fertility_solve,
    is_generic,
    population_bfs,
    reproduction_rhs,
    shifted_orbit,
    shifted_reflect,
    space_from_population,
    weight_at_infinity,
    weyl_dim_g2,
)
from g2spaces.g2 import check_ssd
from g2spaces.polynomials import Poly, wronskian
from g2spaces.spaces import SpaceError, degree_window_space, monomial_space, witt_basis

ONE = Poly.one()
X = Poly.x()


def g2_seed(T1=ONE, T2=ONE):
    return BetheTuple("G2", [ONE, ONE], [T1, T2])


@pytest.fixture(scope="module")
def pop():
    return population_bfs(g2_seed(), depth=6)


@pytest.fixture(scope="module")
def pop_space(pop):
    return space_from_population(pop)


class TestBetheTuple:
    def test_coordinates_are_normalized_monic(self):
        t = BetheTuple("G2", [X * 2 + Poly.constant(2), Poly.constant(3)], [ONE, ONE])
        assert t.polys == (X + ONE, ONE)

    def test_equal_up_to_scalars(self):
        a = BetheTuple("G2", [X * 5, Poly.constant(-2)], [ONE, ONE])
        b = BetheTuple("G2", [X, ONE], [ONE, ONE])
        assert a == b
        assert hash(a) == hash(b)

    def test_immutable(self):
        t = g2_seed()
        with pytest.raises(AttributeError):
            t.polys = ()

    def test_validation(self):
        with pytest.raises(ValueError):
            BetheTuple("B4", [ONE, ONE], [ONE, ONE])
        with pytest.raises(ValueError):
            BetheTuple("G2", [ONE], [ONE, ONE])
        with pytest.raises(ValueError):
            BetheTuple("G2", [ONE, Poly.zero()], [ONE, ONE])
        with pytest.raises(ValueError):
            BetheTuple("G2", [ONE, ONE], [ONE, Poly.zero()])

    def test_replace_is_one_based_and_fresh(self):
        t = g2_seed()
        s = t.replace(2, X)
        assert s.polys == (ONE, X)
        assert t.polys == (ONE, ONE)

    def test_json_round_trip(self):
        t = BetheTuple("C3", [X, ONE, X + ONE], [X, ONE, ONE])
        assert BetheTuple.from_json(t.to_json()) == t


class TestGenericity:
    def test_trivial_tuple_is_generic(self):
        assert is_generic(g2_seed())

    def test_multiple_root_fails(self):
        assert not is_generic(BetheTuple("G2", [X * X, ONE], [ONE, ONE]))

    def test_shared_adjacent_root_fails(self):
        assert not is_generic(BetheTuple("G2", [X, X], [ONE, ONE]))

    def test_only_adjacent_pairs_matter(self):
        assert is_generic(BetheTuple("C3", [X, ONE, X], [ONE, ONE, ONE]))


class TestFertility:
    def test_constant_against_constant(self):
        fam = fertility_solve(ONE, ONE)
        assert fam.particular == X
        assert fam.kernel == ONE

    def test_cubic_right_hand_side(self):
        fam = fertility_solve(ONE, Poly.monomial(3))
        assert fam.particular == Poly.monomial(4, F(1, 4))

    def test_family_members_all_solve(self):
        y, rhs = X + ONE, Poly.monomial(2) + X * 2
        fam = fertility_solve(y, rhs)
        for c in (0, 1, -3, F(1, 2)):
            assert wronskian([y, fam.member(c)]) == rhs

    def test_infertile_by_obstruction(self):
        # W(x, q) never has a linear term, so rhs = x is unreachable
        assert fertility_solve(X, X) is None

    def test_infertile_by_degree(self):
        assert fertility_solve(Poly.monomial(2), ONE) is None

    def test_zero_inputs_rejected(self):
        with pytest.raises(ValueError):
            fertility_solve(Poly.zero(), ONE)
        with pytest.raises(ValueError):
            fertility_solve(ONE, Poly.zero())


class TestReproductionRhs:
    def test_pair_directions(self):
        t = BetheTuple("G2", [X, X + ONE], [Poly.monomial(2), Poly.constant(1)])
        assert reproduction_rhs(t, 1) == Poly.monomial(2) * (X + ONE)
        assert reproduction_rhs(t, 2) == X**3

    def test_triple_middle_direction(self):
        t = BetheTuple("C3", [X, ONE, X + ONE], [ONE, ONE, ONE])
        assert reproduction_rhs(t, 2) == X * (X + ONE) ** 2

    def test_six_tuple_boundary_and_middle(self):
        polys = [X + Poly.constant(k) for k in range(6)]
        t = BetheTuple("A6", polys, [ONE] * 6)
        assert reproduction_rhs(t, 1) == polys[1]
        assert reproduction_rhs(t, 6) == polys[4]
        assert reproduction_rhs(t, 3) == polys[1] * polys[3]

    def test_invalid_direction(self):
        with pytest.raises(ValueError):
            reproduction_rhs(g2_seed(), 3)


class TestDescendants:
    def test_seed_first_direction(self):
        kids = descendants(g2_seed(), 1)
        assert {k.polys[0] for k in kids} == {X, X + ONE, X - ONE, X + Poly.constant(2)}
        assert all(is_generic(k) for k in kids)

    def test_genericity_filters_square_partner(self):
        # rhs x^3 gives the family x^4/4 + c; the c = 0 member has a
        # quadruple root and must be dropped
        t = BetheTuple("G2", [X, ONE], [ONE, ONE])
        kids = descendants(t, 2)
        assert len(kids) == 3
        assert all(k.polys[1].coeff(0) != 0 for k in kids)

    def test_reproducing_back_recovers_seed(self):
        seed = g2_seed()
        child = degree_increasing_descendant(seed, 1)
        assert child.polys[0] == X
        assert seed in descendants(child, 1)

    def test_degree_increasing_choice(self):
        t = BetheTuple("G2", [X, ONE], [ONE, ONE])
        best = degree_increasing_descendant(t, 1)
        assert best.polys[0].degree == 1


class TestPopulation:
    DEGREE_PAIRS = {
        (0, 0), (0, 1), (1, 0), (1, 4), (2, 1), (2, 6),
        (4, 4), (4, 9), (5, 6), (5, 10), (6, 9), (6, 10),
    }

    def test_seed_is_first_member(self, pop):
        assert pop.members[0] == g2_seed()
        assert pop.kind == "G2"

    def test_size_is_stable(self, pop):
        assert len(pop.members) == 405

    def test_edges_are_well_formed(self, pop):
        for child, direction, parent in pop.edges:
            assert parent < child
            assert direction in (1, 2)
            restored = pop.members[child].replace(
                direction, pop.members[parent].polys[direction - 1]
            )
            assert restored == pop.members[parent]

    def test_degree_pairs(self, pop):
        assert {m.degrees() for m in pop.members} == self.DEGREE_PAIRS

    def test_span_is_the_degree_window(self, pop_space):
        assert pop_space == degree_window_space()
        assert pop_space.degrees == (0, 1, 2, 3, 4, 5, 6)

    def test_non_generic_seed_rejected(self):
        bad = BetheTuple("G2", [X * X, ONE], [ONE, ONE])
        with pytest.raises(ValueError):
            population_bfs(bad, depth=2)

    def test_shallow_exploration_reports_deficit(self):
        shallow = population_bfs(g2_seed(), depth=1)
        with pytest.raises(SpaceError, match="explore deeper"):
            space_from_population(shallow)


class TestKernelOperator:
    def test_trivial_data_gives_seventh_derivative(self):
        ones = [ONE] * 6
        assert apply_D(ones, ones, Poly.monomial(6)).is_zero()
        out = apply_D(ones, ones, Poly.monomial(7))
        assert out.is_poly() and out.as_poly() == Poly.constant(5040)

    def test_every_member_gives_the_same_kernel(self, pop, pop_space):
        for member in (pop.members[5], pop.members[-1]):
            yA, T = a_tuple(member)
            assert all(apply_D(yA, T, b).is_zero() for b in pop_space.basis)

    def test_widening_patterns(self):
        t = BetheTuple("G2", [X, X + ONE], [Poly.monomial(2), X])
        yA, T = a_tuple(t)
        assert yA == (X, X + ONE, X * X, X * X, X + ONE, X)
        assert T == (Poly.monomial(2), X, Poly.monomial(2), Poly.monomial(2), X, Poly.monomial(2))
        t3 = BetheTuple("C3", [X, ONE, X + ONE], [X, ONE, X])
        yA3, T3 = a_tuple(t3)
        assert yA3[2] == (X + ONE) ** 2 and yA3[5] == X
        assert T3 == (X, ONE, X, X, ONE, X)

    def test_bad_lengths_rejected(self):
        with pytest.raises(ValueError):
            apply_D([ONE] * 5, [ONE] * 6, X)


class TestMonomialSeeds:
    @pytest.mark.parametrize("m,n", [(2, 3), (1, 3)])
    def test_monomial_data_spans_monomial_space(self, m, n):
        seed = g2_seed(Poly.monomial(m - 1), Poly.monomial(n - m - 1))
        space = space_from_population(population_bfs(seed, depth=6))
        assert space == monomial_space(m, n)

    def test_shifted_data_spans_certifiable_space(self):
        seed = g2_seed(X - ONE, ONE)
        space = space_from_population(population_bfs(seed, depth=6))
        assert space.degrees == (0, 2, 3, 5, 7, 8, 10)
        assert check_ssd(space).verdict == "ssd"

    def test_ramification_contributes_to_weights(self):
        seed = g2_seed(Poly.monomial(1), ONE)
        assert weight_at_infinity(seed) == Weight((1, 0))
        pop = population_bfs(seed, depth=6)
        orbit = shifted_orbit(Weight((1, 0)))
        assert len(orbit) == 12
        assert {weight_at_infinity(m) for m in pop.members} == orbit


class TestReplayChain:
    def test_alternating_chain_lands_on_a_square_root(self, pop_space):
        seed = g2_seed()
        y1, y2 = seed.polys
        T1, T2 = seed.T
        q1 = fertility_solve(y1, T1 * y2).member(0)
        q2 = fertility_solve(y2, T2 * q1 * y1 * y1).member(0)
        q3 = fertility_solve(y1, -(T1 * q2)).member(0)
        assert (q1, q2, q3) == (X, Poly.monomial(2, F(1, 2)), Poly.monomial(3, F(-1, 6)))
        yA, T = a_tuple(seed)
        assert apply_D(yA, T, q3).is_zero()
        wb = witt_basis(pop_space)
        v1, v5, v6 = wb.vectors[0], wb.vectors[4], wb.vectors[5]
        assert pop_space.divided_wronskian([v1, v5, v6]) == q3 * q3 * F(1, 4)
        B = pop_space.bilinear_form()
        assert all(B(q3, v) == 0 for v in (v1, v5, v6))


class TestWeights:
    def test_seed_weight_and_offsets(self):
        assert weight_at_infinity(g2_seed()) == Weight((0, 0))
        shifted = weight_at_infinity(g2_seed(), lambdas=[Weight((1, 2))])
        assert shifted == Weight((1, 2))
        t = BetheTuple("G2", [X, ONE], [ONE, ONE])
        assert weight_at_infinity(t) == Weight((-2, 3))

    def test_only_pair_tuples_have_weights(self):
        t = BetheTuple("C3", [ONE, ONE, ONE], [ONE, ONE, ONE])
        with pytest.raises(ValueError):
            weight_at_infinity(t)

    def test_shifted_reflections(self):
        zero = Weight((0, 0))
        assert shifted_reflect(zero, 1) == Weight((-2, 3))
        assert shifted_reflect(zero, 2) == Weight((1, -2))
        for w in (zero, Weight((3, -4)), Weight((-2, 5))):
            for i in (1, 2):
                assert shifted_reflect(shifted_reflect(w, i), i) == w
        with pytest.raises(ValueError):
            shifted_reflect(zero, 3)

    def test_dominant_representative(self):
        assert dominant_representative(Weight((-2, 3))) == Weight((0, 0))
        assert dominant_representative(Weight((2, 1))) == Weight((2, 1))
        assert dominant_representative(Weight((-1, 0))) is None

    def test_orbit_size_and_membership(self, pop):
        orbit = shifted_orbit(Weight((0, 0)))
        assert len(orbit) == 12
        assert {weight_at_infinity(m) for m in pop.members} == orbit

    def test_dimension_formula(self):
        assert weyl_dim_g2(0, 0) == 1
        assert weyl_dim_g2(1, 0) == 7
        assert weyl_dim_g2(0, 1) == 14
        assert weyl_dim_g2(2, 0) == 27
