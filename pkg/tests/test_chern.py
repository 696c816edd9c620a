"""
Tests des données de Chern de rang 2 : twist, dual, Riemann-Roch,
système d'identités, lieu des zéros et noyaux.
"""

from itertools import product

import pytest

from src.algebra.chern import (
    ChernNumbers,
    Rank2Chern,
    arithmetic_genus,
    chi_f,
    decomposable,
    dual,
    dual_twist_eta,
    dual_twist_h,
    dual_twist_h_closed_form,
    identity_ledger,
    rank2_kernel,
    restrict_chern,
    twist,
    zero_locus_invariants,
)
from src.algebra.chow_ring import DivisorClass, Variety, f_codim2
from src.cohomology.line_bundles import euler_line
from src.errors import (
    CodimensionError,
    IntegralityError,
    UnsupportedOperationError,
    VarietyMismatchError,
)


def _line(a1, a2, variety=Variety.F):
    return DivisorClass(variety, a1, a2)


# ==========================================
# Tests de construction
# ==========================================


def test_on_f_coordinates():
    """Test que (alpha, beta) se relisent."""
    x = Rank2Chern.on_f((1, 2), (2, 2))
    assert x.alpha == (1, 2)
    assert x.beta == (2, 2)


def test_c2_must_have_codimension_two():
    """Test qu'un c2 de codimension 1 est refusé."""
    with pytest.raises(CodimensionError):
        Rank2Chern(Variety.F, _line(0, 0), _line(1, 0).to_chow())


def test_mixed_varieties_rejected():
    """Test que c1 et c2 doivent vivre sur la même variété."""
    with pytest.raises(VarietyMismatchError):
        Rank2Chern(Variety.F, _line(0, 0, Variety.PHI), f_codim2((1, 0)))


# ==========================================
# Tests de twist et dual
# ==========================================


def test_twist_by_hyperplane(h):
    """Test (c1, c2) de E(h) pour la droite : c1 = 2h, c2 = 4h2^2 + 3h1^2."""
    x = twist(Rank2Chern.on_f((0, 0), (1, 0)), h)
    assert x.alpha == (2, 2)
    assert x.beta == (4, 3)


def test_dual_twist_h():
    """Test E -> E^v(h) sur le cas de la droite de c1 = h2."""
    image = dual_twist_h(Rank2Chern.on_f((0, 1), (1, 0)))
    assert (image.alpha, image.beta) == ((2, 1), (2, 2))


def test_dual_twist_closed_form():
    """Test les formules fermées de E^v(h) sur une petite grille."""
    for a in product(range(-3, 4), repeat=2):
        for b in product(range(-2, 3), repeat=2):
            image = dual_twist_h(Rank2Chern.on_f(a, b))
            assert (image.alpha, image.beta) == dual_twist_h_closed_form(a, b)


def test_involutions():
    """Test que dual et E -> E^v(h) sont des involutions."""
    for a in product(range(-2, 3), repeat=2):
        x = Rank2Chern.on_f(a, (a[0] + 1, 2 - a[1]))
        assert dual(dual(x)) == x
        assert dual_twist_h(dual_twist_h(x)) == x


def test_dual_twist_on_wrong_variety():
    """Test que chaque dual-twist est propre à sa variété."""
    with pytest.raises(UnsupportedOperationError):
        dual_twist_h(Rank2Chern.on_phi((0, 0), (1, 0, 0)))
    with pytest.raises(UnsupportedOperationError):
        dual_twist_eta(Rank2Chern.on_f((0, 0), (1, 0)))


def test_restriction_commutes_with_twist(eta):
    """Test restrict(G(L)) = restrict(G)(L|F) et la restriction du dual."""
    x = Rank2Chern.on_phi((1, 2), (1, 1, 1))
    for line in (eta, _line(2, -1, Variety.PHI)):
        assert restrict_chern(twist(x, line)) == twist(restrict_chern(x), line.restrict())
    assert restrict_chern(dual(x)) == dual(restrict_chern(x))


def test_restriction_of_ulrich_data():
    """Test que mu = (3, 1, 2) se restreint en beta = (5, 3)."""
    assert restrict_chern(Rank2Chern.on_phi((2, 2), (3, 1, 2))).beta == (5, 3)


# ==========================================
# Tests de Riemann-Roch
# ==========================================


def test_chi_of_decomposable():
    """Test chi(O(h1) + O) = 4."""
    assert chi_f(decomposable(_line(1, 0), _line(0, 0))) == 4


def test_chi_matches_line_bundles():
    """Test chi(O(a) + O(b)) = chi(O(a)) + chi(O(b)) sur une petite grille."""
    divisors = list(product(range(-3, 4), repeat=2))
    for a in divisors[::3]:
        for b in divisors[::5]:
            x = decomposable(_line(*a), _line(*b))
            assert chi_f(x) == euler_line(Variety.F, *a) + euler_line(Variety.F, *b)


def test_chi_of_ulrich():
    """Test chi(E) = 12 pour c1 = 2h, c2 = 4h1^2 + 4h2^2."""
    assert chi_f(Rank2Chern.on_f((2, 2), (4, 4))) == 12


def test_dual_identities():
    """Test chi(E^v(-h)) = 0 et chi(E^v) = e sur la droite et le cas quartique."""
    minus_h = _line(-1, -1)
    line = Rank2Chern.on_f((0, 0), (1, 0))
    quartic = Rank2Chern.on_f((1, 2), (2, 2))
    assert chi_f(twist(dual(line), minus_h)) == 0
    assert chi_f(dual(line)) == 1
    assert chi_f(twist(dual(quartic), minus_h)) == 0
    assert chi_f(dual(quartic)) == 0


def test_flipped_sign_breaks_decomposable_chi(flipped_rr):
    """Test que le signe opposé donne chi(O(h1) + O) != 4."""
    x = decomposable(_line(1, 0), _line(0, 0))
    try:
        value = chi_f(x)
    except IntegralityError:
        return
    assert value != 4


def test_closed_form_numbers():
    """Test que les nombres de Chern calculés dans l'anneau suivent les formules fermées."""
    for a in product(range(-4, 5), repeat=2):
        b = (a[0] - a[1], 2 * a[1] + 1)
        assert ChernNumbers.of(Rank2Chern.on_f(a, b)) == ChernNumbers.closed_form(a, b)


def test_chi_on_phi_rejected():
    """Test que Riemann-Roch n'est fourni que sur F."""
    with pytest.raises(UnsupportedOperationError):
        chi_f(Rank2Chern.on_phi((0, 0), (1, 0, 0)))


# ==========================================
# Tests du système d'identités et du lieu des zéros
# ==========================================


def test_identity_ledger():
    """Test des résidus nuls pour les cas admissibles."""
    assert tuple(identity_ledger(_line(1, 2), (2, 2), 0)) == (0, 0)
    assert tuple(identity_ledger(_line(0, 0), (1, 0), 1)) == (0, 0)
    assert tuple(identity_ledger(_line(2, 2), (5, 3), 0)) == (0, 0)
    assert identity_ledger(_line(1, 2), (3, 1), 0).hc2 == 0
    assert identity_ledger(_line(1, 2), (3, 1), 0).c1c2 != 0


def test_zero_locus_invariants():
    """Test degré et genre arithmétique du lieu des zéros."""
    elliptic = zero_locus_invariants(Rank2Chern.on_f((2, 2), (4, 4)))
    assert (elliptic.degree, elliptic.arithmetic_genus) == (8, 1)
    quartic = zero_locus_invariants(Rank2Chern.on_f((1, 2), (2, 2)))
    assert (quartic.degree, quartic.arithmetic_genus) == (4, 0)
    plane = zero_locus_invariants(Rank2Chern.on_phi((0, 0), (1, 0, 0)))
    assert plane.degree == 1 and plane.arithmetic_genus is None


def test_genus_on_phi_rejected():
    """Test que le genre arithmétique n'a de sens que sur F."""
    with pytest.raises(UnsupportedOperationError):
        arithmetic_genus(Rank2Chern.on_phi((0, 0), (1, 0, 0)))


# ==========================================
# Tests des noyaux
# ==========================================


def test_rank2_kernel():
    """Test le noyau de O(eta1 + 2eta2)^4 -> O(eta1 + 3eta2)^2."""
    kernel = rank2_kernel([_line(1, 2, Variety.PHI)] * 4, [_line(1, 3, Variety.PHI)] * 2)
    assert kernel.alpha == (2, 2)
    assert kernel.mu == (3, 1, 2)


def test_rank2_kernel_requires_rank_two():
    """Test qu'un noyau de rang différent de 2 est refusé."""
    with pytest.raises(UnsupportedOperationError):
        rank2_kernel([_line(1, 0)] * 3, [_line(1, 1)] * 2)
