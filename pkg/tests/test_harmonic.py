import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hodgetrees.complex import Chain
from hodgetrees.errors import ConditionError, NotACycleError
from hodgetrees.fixtures import annulus, doubled_loop, rp2_plus, triangle_graph
from hodgetrees.harmonic import (build_certificate, cutting_homology_check, cutting_number,
                                 rational_cutting, rational_winding, standard_harmonic_cocycle,
                                 standard_harmonic_cycle, standard_harmonic_cycle_bruteforce,
                                 standard_harmonic_cycle_fast, winding_homology_check,
                                 winding_number)
from hodgetrees.winding import winding_form

FIXTURES = {"triangle": (triangle_graph, 1), "doubled_loop": (doubled_loop, 1),
            "annulus": (annulus, 1), "rp2_plus": (rp2_plus, 2)}


class TestWinding:
    def test_triangle(self, triangle):
        assert abs(winding_number(triangle, 1, (1, 1, 1))) == 1
        assert abs(winding_number(triangle, 1, (2, 2, 2))) == 2

    def test_boundary_is_zero(self):
        X = annulus()
        for k in range(X.size(2)):
            assert winding_number(X, 1, X.boundary(2).column(k)) == 0

    def test_not_a_cycle(self, triangle):
        with pytest.raises(NotACycleError):
            winding_number(triangle, 1, (1, 0, 0))

    def test_condition(self, disc):
        with pytest.raises(ConditionError):
            winding_number(disc, 1, (1, 1, 1))

    def test_linear(self):
        X = annulus()
        w = winding_form(X, 1)
        z1, z2 = w.basis[0], X.boundary(2).column(0)
        assert w([a + 3 * b for a, b in zip(z1, z2)]) == w(z1)

    def test_homology_check(self, triangle):
        for m in (1, 2, 3):
            chk = winding_homology_check(triangle, 1, (m, m, m))
            assert chk.ok and chk.homology.order == m

    def test_homology_check_boundary(self):
        X = annulus()
        chk = winding_homology_check(X, 1, X.boundary(2).column(0))
        assert chk.number == 0 and chk.homology.rank == 1 and chk.ok


class TestCutting:
    def test_doubled_loop(self, loop2):
        assert abs(cutting_number(loop2, 1, (0, 1))) == 1
        assert cutting_number(loop2, 1, (0, -2)) == -2 * cutting_number(loop2, 1, (0, 1))

    def test_coboundary_is_zero(self, triangle):
        for k in range(3):
            assert cutting_number(triangle, 1, triangle.coboundary(0).column(k)) == 0

    def test_not_a_cocycle(self, loop2):
        with pytest.raises(NotACycleError):
            cutting_number(loop2, 1, (1, 0))

    def test_homology_check(self, loop2):
        for z in ((0, 1), (0, -2), (0, 3)):
            assert cutting_homology_check(loop2, 1, z).ok


class TestStandardCycle:
    def test_triangle(self, triangle):
        assert standard_harmonic_cycle(triangle, 1, mode="both").coeffs == (1, 1, 1)

    def test_doubled_loop(self, loop2):
        assert standard_harmonic_cycle(loop2, 1, mode="both").coeffs == (0, 2)

    def test_disc_rejected(self, disc):
        with pytest.raises(ConditionError, match="rk H̃_1 = 0"):
            standard_harmonic_cycle_bruteforce(disc, 1)
        with pytest.raises(ConditionError):
            standard_harmonic_cycle_fast(disc, 1)

    def test_cocycles(self, triangle, loop2):
        assert standard_harmonic_cocycle(triangle, 1, mode="both").coeffs == (1, 1, 1)
        assert standard_harmonic_cocycle(loop2, 1, mode="both").coeffs == (0, 4)

    def test_routes_agree_on_corpus(self, random_corpus):
        for name, X, i in random_corpus:
            assert standard_harmonic_cycle_fast(X, i) == standard_harmonic_cycle_bruteforce(X, i), name

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_harmonic_and_nonzero(self, name):
        build, i = FIXTURES[name]
        X = build()
        lam = standard_harmonic_cycle(X, i)
        assert not lam.is_zero()
        assert not any(X.laplacian(i).apply(lam.coeffs))


class TestRational:
    def test_on_lambda(self, loop2):
        lam = standard_harmonic_cycle(loop2, 1)
        assert rational_winding(loop2, 1, lam) == 4 * 1 ** 2

    def test_unit_chains(self, triangle):
        assert [rational_winding(triangle, 1, triangle.unit_chain(1, k)) for k in range(3)] == [Fraction(1, 3)] * 3

    def test_zero(self, triangle):
        assert rational_winding(triangle, 1, (0, 0, 0)) == 0

    @pytest.mark.parametrize("name", sorted(FIXTURES))
    def test_agrees_on_cycles(self, name):
        build, i = FIXTURES[name]
        X = build()
        w = winding_form(X, i)
        for z in w.basis:
            assert rational_winding(X, i, z) == winding_number(X, i, z)

    def test_cutting_agrees_on_cocycles(self, loop2):
        assert rational_cutting(loop2, 1, (0, 1)) == cutting_number(loop2, 1, (0, 1))


class TestCertificate:
    def test_triangle(self, triangle):
        c = build_certificate(triangle, 1)
        assert c.ok and (c.k, c.k_dual, c.h_below, c.h_above) == (3, 1, 1, 1)
        assert c.lam.dot(c.lam) == 3

    def test_doubled_loop(self, loop2):
        c = build_certificate(loop2, 1)
        assert c.ok and (c.k, c.k_dual, c.h_below, c.h_above) == (1, 4, 1, 2)
        assert c.lam.dot(c.lam) == 4 and c.lam_star.dot(c.lam_star) == 16
        assert c.lam == c.lam_star.scale(Fraction(1, 2))

    def test_torsion_below(self):
        c = build_certificate(rp2_plus(), 2)
        assert c.ok and c.h_below == 2
        assert c.normalized.dot(c.normalized) == c.k * c.k_dual

    @pytest.mark.parametrize("mode", ["fast", "brute", "both"])
    def test_modes(self, mode):
        c = build_certificate(annulus(), 1, mode=mode)
        assert c.ok and c.mode == mode

    def test_json(self, loop2):
        d = json.loads(build_certificate(loop2, 1).to_json())
        assert d["lambda"] == ["0", "2"] and d["lambda_star"] == ["0", "4"]
        assert all(isinstance(v, str) for v in d["residuals"].values())

    def test_deterministic(self):
        a = build_certificate(annulus(), 1).to_json()
        b = build_certificate(annulus(), 1).to_json()
        assert a == b

    def test_condition(self, disc):
        with pytest.raises(ConditionError):
            build_certificate(disc, 1)


@pytest.mark.parametrize("name", sorted(FIXTURES))
@given(data=st.data())
def test_energy_minimal(name, data):
    build, i = FIXTURES[name]
    X = build()
    lam = standard_harmonic_cycle(X, i)
    D = X.boundary(i + 1)
    y = data.draw(st.lists(st.integers(-5, 5), min_size=D.ncols, max_size=D.ncols))
    x = Chain(i, tuple(a + b for a, b in zip(lam, D.apply(y))))
    assert lam.dot(lam) <= x.dot(x)
    assert (lam.dot(lam) == x.dot(x)) == (not any(D.apply(y)))
