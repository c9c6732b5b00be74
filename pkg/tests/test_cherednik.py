from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from hilbfock import fock
from hilbfock.cherednik import (Arena, AsymmetricInput, InternalError, cascomp_i_check,
                                cascomp_ii_check, delta_power, delta_power_by_partitions,
                                delta_power_in_arena, dunkl_commutator_check, embed_fock,
                                hecke_check, project_fock, spherical_columns, symmetrize)


def state(*terms):
    return {slots: mpq(c) for slots, c in terms}


def fr(v):
    return {k: Fraction(c) for k, c in v.items()}


# reflections ----------------------------------------------------------------

def test_reflect_even_is_plain_swap(p2):
    A = Arena(p2, 2)
    assert A.reflect(0, 1, state((((1, 2), (2, 0)), 3))) == state((((2, 0), (1, 2)), 3))


def test_reflect_two_odd_classes_flips_sign(torus):
    A = Arena(torus, 2)
    assert A.reflect(0, 1, state((((1, 0), (2, 1)), 1))) == state((((2, 1), (1, 0)), -1))


def test_reflect_past_odd_middle_slot(torus):
    A = Arena(torus, 3)
    # odd a moves past odd b in the middle: one sign
    v = state((((1, 0), (2, 0), (0, 0)), 1))
    assert A.reflect(0, 2, v) == state((((0, 0), (2, 0), (1, 0)), -1))


def tensor_states(H, N):
    slot = st.one_of(st.none(), st.tuples(st.integers(0, H.dim - 1), st.integers(0, 3)))
    term = st.tuples(st.tuples(*[slot] * N), st.integers(-3, 3).filter(bool))
    return st.lists(term, min_size=1, max_size=4).map(lambda ts: {s: mpq(c) for s, c in ts})


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_reflect_is_an_involution(algebra, data):
    A = Arena(algebra, 3)
    v = data.draw(tensor_states(algebra, 3))
    for i, j in ((0, 1), (0, 2), (1, 2)):
        assert A.reflect(i, j, A.reflect(i, j, v)) == v


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_reflections_satisfy_braid_relation(algebra, data):
    A = Arena(algebra, 3)
    v = data.draw(tensor_states(algebra, 3))
    lhs = A.reflect(0, 1, A.reflect(1, 2, A.reflect(0, 1, v)))
    rhs = A.reflect(1, 2, A.reflect(0, 1, A.reflect(1, 2, v)))
    assert lhs == rhs


# divided differences ------------------------------------------------------------

def test_nabla_geometric_sum(point):
    A = Arena(point, 2)
    # (x1^2 x2 - x1 x2^2) / (1 - x1/x2) = -x1 x2^2
    assert A.nabla(0, 1, state((((0, 2), (0, 1)), 1))) == state((((0, 1), (0, 2)), -1))


def test_nabla_particle_splitting(point):
    A = Arena(point, 2)
    assert A.nabla(0, 1, state((((0, 1), (0, 0)), 1))) == state((((0, 0), (0, 1)), -1))


def test_nabla_kills_symmetric_pure_tensor(p2):
    A = Arena(p2, 2)
    assert A.nabla(0, 1, state((((1, 2), (1, 2)), 1))) == {}


# Dunkl operators ----------------------------------------------------------------

def test_one_particle_dunkl_is_euler_derivative(p2):
    A = Arena(p2, 1)
    assert A.y(0, p2.one(), state((((1, 3),), 1))) == state((((1, 3),), 3))


def test_sum_of_dunkl_operators(point):
    A = Arena(point, 2)
    v = state((((0, 1), (0, 1)), 1))
    assert A.dunkl((1, 1), point.one(), v) == state((((0, 1), (0, 1)), 2))


def test_dunkl_on_x1(point):
    # y_1 = d_1 + nabla_{21} - 1/2: the divided difference has denominator
    # 1 - x_2/x_1, so (x_1 - x_2) / (1 - x_2/x_1) = x_1
    A = Arena(point, 2)
    v = state((((0, 1), (0, 0)), 1))
    assert A.y(0, point.one(), v) == state((((0, 1), (0, 0)), Fraction(3, 2)))
    # with the other orientation of the denominator the same pieces give
    # x_1 - x_2 - x_1/2
    other = A.d((1, 0), v)
    for k, c in A.nabla(0, 1, v).items():
        other[k] = other.get(k, 0) + c
    other[((0, 1), (0, 0))] -= mpq(1, 2)
    assert other == state((((0, 1), (0, 0)), Fraction(1, 2)), (((0, 0), (0, 1)), -1))


def test_commutativity_point_and_p2(point, p2):
    assert dunkl_commutator_check(point, 2, 4) == []
    assert dunkl_commutator_check(p2, 3, 2) == []


def test_commutativity_with_generic_u(p2):
    u = p2.one() * 2 + p2.basis(1) + p2.basis(2) * 5
    assert dunkl_commutator_check(p2, 3, 2, u=u) == []


def test_commutativity_torus(torus):
    assert dunkl_commutator_check(torus, 2, 3) == []


def test_dropping_koszul_signs_is_detected(torus):
    assert dunkl_commutator_check(torus, 2, 2, koszul=False)


def test_hecke_relation(algebra):
    assert hecke_check(algebra, 2, 2) == []


def test_hecke_relation_three_particles(p2):
    assert hecke_check(p2, 3, 1) == []


def test_sum_of_dunkl_is_sum_of_derivatives(algebra):
    assert cascomp_i_check(algebra, 3, 2) == []


def test_second_casimir_on_symmetric_states(algebra):
    assert cascomp_ii_check(algebra, 2, 3) == []


def test_second_casimir_generic_u(p2):
    assert cascomp_ii_check(p2, 3, 2, u=p2.elem([2, 1, 5])) == []


# spherical operators ----------------------------------------------------------

def test_spherical_rejects_asymmetric(point):
    A = Arena(point, 2)
    with pytest.raises(AsymmetricInput):
        A.spherical([(point.one(), 1)], point.one(), state((((0, 2), (0, 0)), 1)))


def test_spherical_energy(p2):
    A = Arena(p2, 3)
    v = symmetrize(A, state((((1, 2), (0, 1), (0, 0)), 1)))
    out = A.spherical([(p2.one(), 1)], p2.one(), v)
    assert out == {k: 3 * c for k, c in v.items()}


def test_spherical_degree_zero_is_multiplication(p2):
    A = Arena(p2, 2)
    h = p2.basis(1)
    v = symmetrize(A, state((((0, 1), (0, 0)), 1)))
    out = A.spherical([(h, 0)], p2.one(), v)
    want = {}
    for i in range(2):
        for k, c in A.mul(A.slot_elem(i, h), v).items():
            want[k] = want.get(k, 0) + c
    assert out == {k: c for k, c in want.items() if c}


def test_spherical_output_is_symmetric(torus):
    A = Arena(torus, 3)
    v = A.embed(((2, 1), (1, 0)))
    out = A.spherical([(torus.basis(3), 2), (torus.basis(2), 1)], torus.one() * 3, v)
    assert A.is_symmetric(out)


# Fock transport -------------------------------------------------------------------

@pytest.mark.parametrize("n_max", [3])
def test_round_trip(algebra, n_max):
    top = 4 if algebra.dim == 1 else n_max
    for n in range(top + 1):
        for N in (max(n, 1), n + 2):
            if algebra.dim > 1 and N > 4:
                continue
            for mono in fock.enumerate_basis(algebra, n):
                assert project_fock(algebra, embed_fock(algebra, mono, N), N) == {mono: 1}


def test_non_unit_constant_slot_projects_to_zero(p2):
    A = Arena(p2, 2)
    assert A.project(state((((1, 0), (1, 0)), 1))) == {}
    # h x^0 (x) x + x (x) h x^0 = P(h x^0) P(x) - P(h x)
    v = symmetrize(A, state((((1, 0), (0, 1)), 1)))
    assert A.project(v) == {((1, 1),): -1}


def test_embed_needs_enough_particles(p2):
    with pytest.raises(ValueError):
        embed_fock(p2, ((1, 0), (1, 0), (1, 0)), 2)


def test_energy_operator_transports(p2):
    for n in (1, 2):
        cols = spherical_columns(p2, p2.one(), [(p2.one(), 1)], n, n)
        assert all(v == {m: n} for m, v in cols.items())


def test_linear_generators_are_stable(p2):
    u = p2.one() * 2 + p2.basis(1)
    for n in (1, 2):
        polys = [(p2.basis(c), 1) for c in range(3)]
        a = spherical_columns(p2, u * u, polys, n, n)
        b = spherical_columns(p2, u * u, polys, n, n + 2)
        assert a == b


def test_quadratic_generator_stable_from_n_plus_3(p2):
    u = p2.one() * 2 + p2.basis(1)
    a = spherical_columns(p2, u * u, [(u, 2)], 1, 4)
    b = spherical_columns(p2, u * u, [(u, 2)], 1, 5)
    assert a == b


# the delta-basis calculus -----------------------------------------------------------

def test_fourth_power_oracle():
    t = Fraction(7, 3)
    assert delta_power(t, 4) == {4: 1, 3: 6 * t, 2: 7 * t ** 2, 1: t ** 3}


@given(st.integers(1, 7), st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_delta_power_counts_set_partitions(n, t):
    assert delta_power(t, n) == {a: c for a, c in delta_power_by_partitions(t, n).items() if c}


@pytest.mark.parametrize("s", [1, 2, Fraction(1, 3)])
def test_delta_power_in_the_arena(point, s):
    got = delta_power_in_arena(point, point.one() * s, 4)
    assert fr(got) == {4: 1, 3: 6 * s, 2: 7 * s ** 2, 1: s ** 3}
