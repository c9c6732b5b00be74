import dataclasses
import functools
from fractions import Fraction

import pytest

from hilbfock import cherednik, fock
from hilbfock.frobenius import default_degeneration
from hilbfock.heisenberg import energy_op, lehn_op
from hilbfock.integrals import (ChernOperator, algebra_span, chern_op, chern_route_ops,
                                cts_cross_check, dunkl_route_ops, im_spherical,
                                im_spherical_many, order_bound_check, phi_matrix,
                                rho_vanishes, symbol_check, twist)
from hilbfock.scalar import RationalFunction


def identity(n, d):
    return [[Fraction(int(i == j)) for j in range(d)] for i in range(d)]


def commute(A, B):
    return A @ B == B @ A


# twisting ---------------------------------------------------------------------

def test_twist_by_one_is_identity(p2):
    for n in (1, 2):
        M = phi_matrix(p2.one(), n)
        assert M.matrix == identity(n, M.shape[0])


def test_phi_on_one_part(p2):
    u = p2.one() * 2 + p2.basis(1)
    M = phi_matrix(u, 1)
    # P(1 x) -> P(u x) = 2 P(1 x) + P(h x)
    assert [row[0] for row in M.matrix] == [2, 1, 0]


def test_phi_inverse_over_rational_functions(p2):
    lam = RationalFunction.lam()
    u = p2.one().map(lambda c: RationalFunction.const(c)) * lam
    u = u + p2.basis(2).map(RationalFunction.const)
    from hilbfock.frobenius import invert_even
    for n in (1, 2):
        P = phi_matrix(u, n) @ phi_matrix(invert_even(u), n)
        one = RationalFunction.const(1)
        assert all(x == (one if i == j else 0)
                   for i, row in enumerate(P.matrix) for j, x in enumerate(row))


def test_twist_preserves_energy(torus):
    u = torus.one() * 3 + torus.basis(3)
    E = energy_op(torus).matrix(2)
    assert twist(u, E) == E


# the Calogero-Sutherland cross-check ---------------------------------------------------

@pytest.mark.parametrize("n", [1, 2])
def test_cts_point(point, n):
    r = cts_cross_check(point, point.one() * 2, n)
    assert r.ok and r.stable and r.rho_vanishes


@pytest.mark.parametrize("n", [1, 2])
def test_cts_p2(p2, n):
    r = cts_cross_check(p2, p2.one() * Fraction(1, 3) + p2.basis(1), n)
    assert r.ok and r.stable and r.rho_vanishes


def test_cts_torus(torus):
    r = cts_cross_check(torus, torus.one() * 3 + torus.basis(3), 1)
    assert r.ok and r.stable


def test_rho_correction_vanishes(p2):
    assert rho_vanishes(p2, p2.one() * 4 + p2.basis(1) * 4)


def test_keeping_the_top_coproduct_term_is_detected(point, p2):
    assert not cts_cross_check(point, point.one() * 2, 1, keep_top=True).ok
    assert not cts_cross_check(p2, p2.one() * 2 + p2.basis(1), 1, keep_top=True).ok


def test_flipped_divided_difference_is_detected(monkeypatch, point, p2):
    monkeypatch.setattr(cherednik, "Arena", functools.partial(cherednik.Arena, nabla_sign=-1))
    assert not cts_cross_check(point, point.one() * 2, 1).ok
    assert not cts_cross_check(p2, p2.one() * 2 + p2.basis(1), 1).ok


def test_too_few_particles_is_detected(p2):
    # P(u y^2) needs n + 3 particles; fewer lose terms
    u = p2.one() * 2 + p2.basis(1)
    assert not cts_cross_check(p2, u, 2, particles=[2]).ok


# the lam -> 0 limit ------------------------------------------------------------------

def test_energy_limit(p2):
    d = default_degeneration(p2)
    for n in (1, 2):
        M = im_spherical(p2, d, [(p2.one(), 1)], n)
        assert M.matrix == [[n * x for x in row] for row in identity(n, M.shape[0])]


def test_point_quadratic_limit_is_lehn(point):
    d = default_degeneration(point)
    assert d.power == 0
    for n in (1, 2, 3):
        assert im_spherical(point, d, [(point.one(), 2, 1)], n) == lehn_op(point).matrix(n)


def test_p2_quadratic_limit_is_lehn(p2):
    d = default_degeneration(p2)
    for n in (1, 2):
        assert im_spherical(p2, d, [(p2.one(), 2, 1)], n) == lehn_op(p2).matrix(n)


def test_sampled_limit_matches_rational_function_limit(p2):
    d = default_degeneration(p2)
    exact = dataclasses.replace(d, power=None)
    polys = [[(p2.basis(c), 1)] for c in range(3)] + [[(p2.basis(1), 2, 1)]]
    assert (im_spherical_many(p2, d, polys, 1)
            == im_spherical_many(p2, exact, polys, 1))


def test_dunkl_limits_commute(p2):
    ops = dunkl_route_ops(p2, 2)
    L = lehn_op(p2).matrix(2)
    for M in ops.values():
        assert commute(M, L)
    span = algebra_span(list(ops.values()), p2, 2)
    assert span.commutative
    assert span.dim == fock.dimension(p2, 2)


# Chern-character operators ---------------------------------------------------------------

def test_ch0_of_unit_is_energy(p2):
    assert chern_op(p2, p2.K, 0, p2.one(), 2) == energy_op(p2).matrix(2)


def test_ch1_example(p2):
    M = chern_op(p2, p2.K, 1, p2.one(), 1)
    idx = fock.basis_index(p2, 1)
    col = [row[idx[((1, 0),)]] for row in M.matrix]
    assert col[idx[((1, 1),)]] == -3
    assert sum(1 for x in col if x) == 1


def test_ch1_of_unit_is_lehn(algebra):
    for n in (1, 2):
        assert chern_op(algebra, algebra.K, 1, algebra.one(), n) == lehn_op(algebra).matrix(n)


def test_chern_operators_commute_with_lehn(algebra):
    L = lehn_op(algebra).matrix(2)
    for M in chern_route_ops(algebra, 2, max_i=2).values():
        assert commute(M, L)


def test_peeling_independence(torus):
    D = ChernOperator(torus, torus.K, 1, torus.basis(1))
    for mono in fock.enumerate_basis(torus, 3):
        assert D.check_peelings(mono)


@pytest.mark.parametrize("i", [0, 1, 2])
def test_order_bound(p2, i):
    assert order_bound_check(p2, p2.K, i, p2.one(), 4) == []


@pytest.mark.parametrize("i", [0, 1, 2])
def test_symbol(p2, i):
    assert symbol_check(p2, p2.K, i, p2.basis(1), 4) == []


def test_order_and_symbol_odd(torus):
    assert order_bound_check(torus, torus.K, 1, torus.basis(1), 3) == []
    assert symbol_check(torus, torus.K, 1, torus.basis(2), 3) == []


# generated algebras ----------------------------------------------------------------------

def test_span_of_nothing_is_the_identity(p2):
    ops = chern_route_ops(p2, 1, max_i=0)
    s = algebra_span([ops["ch_0(1)"]], p2, 1)
    assert s.dim == 1 and s.commutative


def test_chern_span_on_one_particle(p2):
    s = algebra_span(list(chern_route_ops(p2, 1, max_i=1).values()), p2, 1)
    assert s.dim == 3


def test_noncommuting_pair_is_flagged():
    from hilbfock.heisenberg import WeightOperator
    A = WeightOperator(2, 2, [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(0)]])
    B = WeightOperator(2, 2, [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]])
    s = algebra_span([A, B])
    assert not s.commutative
    assert s.dim == 3
