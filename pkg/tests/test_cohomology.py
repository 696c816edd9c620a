"""
Tests de la cohomologie des fibrés en droites sur P2, F et Phi, de la carte
des régions et des critères aCM / initialisé / Ulrich.
"""

from itertools import product

import pytest

from src.algebra.chow_ring import Variety
from src.cohomology.line_bundles import (
    acm_by_scan,
    classify_line_bundle,
    cohom_f,
    cohom_p2,
    cohom_phi,
    cohom_with_twists,
    euler_line,
    ext_dimension,
    is_acm,
    line_bundle_census,
    module_nonvanishing,
)
from src.cohomology.regions import RegionLabel, region_label
from src.errors import UnsupportedOperationError


def _window(bound):
    return product(range(-bound, bound + 1), repeat=2)


# ==========================================
# Tests des dimensions
# ==========================================


def test_cohom_p2():
    """Test les dimensions sur P2."""
    assert cohom_p2(0) == (1, 0, 0)
    assert cohom_p2(2) == (6, 0, 0)
    assert cohom_p2(-1) == (0, 0, 0)
    assert cohom_p2(-3) == (0, 0, 1)
    assert cohom_p2(-4) == (0, 0, 3)


def test_cohom_f_named_values():
    """Test quelques valeurs connues sur F."""
    assert cohom_f(0, 0).dims == (1, 0, 0, 0)
    assert cohom_f(-2, 2).dims == (0, 3, 0, 0)
    assert cohom_f(-2, 1).dims == (0, 1, 0, 0)
    assert cohom_f(-1, -1).dims == (0, 0, 0, 0)
    assert cohom_f(-2, -2).dims == (0, 0, 0, 1)
    assert cohom_f(1, 1).dims == (8, 0, 0, 0)


def test_cohom_phi_kunneth():
    """Test le produit de Künneth sur Phi."""
    assert cohom_phi(1, 1).dims == (9, 0, 0, 0, 0)
    assert cohom_phi(0, -3).dims == (0, 0, 1, 0, 0)
    assert cohom_phi(-3, -3).dims == (0, 0, 0, 0, 1)


def test_at_most_one_nonzero_entry():
    """Test qu'au plus un h^i est non nul sur F."""
    for a1, a2 in _window(12):
        assert len(cohom_f(a1, a2).nonzero_indices) <= 1, f"O({a1},{a2})"


def test_euler_line():
    """Test la caractéristique d'Euler et sa cohérence avec les tables."""
    assert euler_line(Variety.F, 0, 0) == 1
    assert euler_line(Variety.F, 1, 0) == 3
    assert euler_line(Variety.PHI, 2, 0) == 6
    for a1, a2 in _window(8):
        assert cohom_f(a1, a2).euler == euler_line(Variety.F, a1, a2)
        assert cohom_phi(a1, a2).euler == euler_line(Variety.PHI, a1, a2)


def test_serre_duality():
    """Test la dualité de Serre avec omega_F = O(-2h) et omega_Phi = O(-3eta)."""
    for a1, a2 in _window(8):
        assert cohom_f(a1, a2).dims == cohom_f(-2 - a1, -2 - a2).dims[::-1]
        assert cohom_phi(a1, a2).dims == cohom_phi(-3 - a1, -3 - a2).dims[::-1]


def test_restriction_relation():
    """Test h1 - h2 sur F = h2(Phi, a - eta) - h2(Phi, a)."""
    for a1, a2 in _window(8):
        f = cohom_f(a1, a2).dims
        assert f[1] - f[2] == cohom_phi(a1 - 1, a2 - 1).dims[2] - cohom_phi(a1, a2).dims[2]


def test_factor_symmetry():
    """Test la symétrie par échange des facteurs."""
    for a1, a2 in _window(8):
        assert cohom_f(a1, a2).dims == cohom_f(a2, a1).dims
        assert cohom_phi(a1, a2).dims == cohom_phi(a2, a1).dims


def test_twist_range():
    """Test une table par twist, et le refus d'une plage vide."""
    tables = cohom_with_twists(Variety.F, 0, 0, -2, 1)
    assert [t.bundle for t in tables] == [(-2, -2), (-1, -1), (0, 0), (1, 1)]
    with pytest.raises(UnsupportedOperationError):
        cohom_with_twists(Variety.F, 0, 0, 1, -1)


def test_ext_dimension():
    """Test dim Ext^1(O(2h1), O(2h2)) = h^1(O(-2h1 + 2h2)) = 3."""
    assert ext_dimension(Variety.F, (2, 0), (0, 2), 1) == 3
    assert ext_dimension(Variety.F, (0, 2), (2, 0), 1) == 3
    with pytest.raises(UnsupportedOperationError):
        ext_dimension(Variety.F, (0, 0), (0, 0), 4)


# ==========================================
# Tests de la carte des régions
# ==========================================


def test_region_labels():
    """Test l'étiquette de quelques points."""
    assert region_label(0, 0) is RegionLabel.H0
    assert region_label(-2, 2) is RegionLabel.H1_UPPER
    assert region_label(2, -2) is RegionLabel.H1_LOWER
    assert region_label(-7, 2) is RegionLabel.H2_UPPER
    assert region_label(2, -7) is RegionLabel.H2_LOWER
    assert region_label(-3, -3) is RegionLabel.H3
    assert region_label(-1, -1) is RegionLabel.ZERO


def test_regions_match_cohomology():
    """Test que la région porte l'indice du h^i non nul."""
    for a1, a2 in _window(10):
        nonzero = cohom_f(a1, a2).nonzero_indices
        label = region_label(a1, a2)
        if nonzero:
            assert label.cohomology_index == nonzero[0], f"({a1},{a2})"
        assert region_label(a2, a1) is label.swapped()


def test_region_captions():
    """Test les légendes h^i≠0."""
    assert RegionLabel.H1_UPPER.caption == "h^1≠0"
    assert RegionLabel.ZERO.caption == "all h^i=0"


# ==========================================
# Tests des critères aCM, initialisé et Ulrich
# ==========================================


def test_classify_line_bundle():
    """Test les bilans de quelques fibrés en droites."""
    report = classify_line_bundle(Variety.F, 0, 2)
    assert report.is_acm and report.is_initialized and report.is_ulrich
    assert report.h0 == 6

    report = classify_line_bundle(Variety.F, 0, 1)
    assert report.is_acm and report.is_initialized and not report.is_ulrich

    assert not classify_line_bundle(Variety.F, 0, 3).is_acm
    assert classify_line_bundle(Variety.PHI, 0, 2).is_ulrich
    assert classify_line_bundle(Variety.F, 1, 1).initial_twist == -1


def test_acm_criterion_matches_scan():
    """Test que |a1 - a2| <= 2 coïncide avec le balayage des twists."""
    for a1, a2 in _window(5):
        for variety in Variety:
            assert is_acm(a1, a2) == acm_by_scan(variety, a1, a2), f"{variety} ({a1},{a2})"


def test_module_nonvanishing():
    """Test H^1_* et H^2_* avec leurs twists témoins."""
    assert module_nonvanishing(Variety.F, 0, 3, 1) == (True, -2)
    assert module_nonvanishing(Variety.F, 0, 3, 2) == (True, -3)
    assert module_nonvanishing(Variety.F, 0, 2, 1) == (False, None)
    assert module_nonvanishing(Variety.PHI, 0, 3, 1) == (False, None)
    assert module_nonvanishing(Variety.PHI, 0, 3, 2)[0] is True


def test_module_nonvanishing_equivalence():
    """Test H^1_* != 0 ssi H^2_* != 0 sur F."""
    for a1, a2 in _window(8):
        first = module_nonvanishing(Variety.F, a1, a2, 1)
        second = module_nonvanishing(Variety.F, a1, a2, 2)
        assert first[0] == second[0]
        assert (first[1] is None) != first[0]


def test_module_nonvanishing_rejects_bad_index():
    """Test qu'un indice non intermédiaire est refusé."""
    with pytest.raises(UnsupportedOperationError):
        module_nonvanishing(Variety.F, 0, 0, 3)
    with pytest.raises(UnsupportedOperationError):
        module_nonvanishing(Variety.PHI, 0, 0, 0)


def test_line_bundle_census():
    """Test les listes de fibrés en droites initialisés aCM et Ulrich."""
    for variety in Variety:
        initialized, ulrich = line_bundle_census(variety, 6)
        assert set(initialized) == {(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)}
        assert set(ulrich) == {(0, 2), (2, 0)}
