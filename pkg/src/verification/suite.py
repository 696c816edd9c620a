"""
Suite de vérification : chaque contrôle nommé recalcule une propriété et
la compare à la valeur attendue. Un contrôle qui lève une exception échoue
sans interrompre les autres.
"""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Callable, List, Tuple

import sympy

from src.algebra.chern import (
    ChernNumbers,
    Rank2Chern,
    RiemannRoch,
    chi_f,
    dual,
    dual_twist_h,
    dual_twist_h_closed_form,
    identity_ledger,
    restrict_chern,
    twist,
    zero_locus_invariants,
)
from src.algebra.chow_ring import (
    ChowClass,
    DivisorClass,
    Variety,
    beta,
    chow_ring,
    degree,
    f_codim2,
    generator,
    hyperplane,
    mu,
    phi_codim2,
)
from src.classification.bounds import (
    A1,
    A2,
    chi_dual_twist_polynomial,
    nonempty_zero_locus_violations,
    surviving_alphas,
    upper_bound_elimination,
)
from src.classification.engine import (
    VanishingSearch,
    divisorial_table,
    intermediate_dual_pairs,
    intermediate_table_f,
    line_table_f,
    ulrich_beta_f,
    ulrich_table_f,
    vanishing_search,
)
from src.classification.final import FINAL_ALPHAS, final_classification
from src.classification.phi import Surface, classify_phi, del_pezzo_embeddings
from src.classification.splittings import (
    decomposable_ulrich_splittings,
    line_indecomposability_check,
)
from src.classification.status import StatusKind, canonical_orbit
from src.cohomology.line_bundles import (
    cohom_f,
    cohom_phi,
    euler_line,
    f_closed_form,
    f_region_index,
    line_bundle_census,
    module_nonvanishing,
)
from src.cohomology.regions import region_label

logger = logging.getLogger(__name__)

SCOPES = ("cohomology", "chern", "classify")

# Lignes attendues de la table des parties divisorielles :
# (alpha, delta, e, hc2, c1c2, beta)
DIVISORIAL_ROWS = (
    ((0, 1), (0, 1), 1, 0, 0, (0, 0)),
    ((0, 2), (0, 1), 0, 1, 0, (1, 0)),
    ((0, 2), (0, 2), 1, 0, 0, (0, 0)),
    ((1, 1), (0, 1), 0, 2, 2, (1, 1)),
    ((1, 1), (0, 1), 0, 2, 2, (2, 0)),
    ((1, 1), (0, 1), 0, 2, 2, (0, 2)),
    ((1, 2), (0, 1), 0, 4, 6, (2, 2)),
    ((1, 2), (0, 2), 0, 4, 6, (2, 2)),
    ((1, 2), (1, 0), 0, 4, 6, (2, 2)),
)

INITIALIZED_ACM = {(0, 0), (0, 1), (1, 0), (0, 2), (2, 0)}
ULRICH_LINES = {(0, 2), (2, 0)}


@dataclass(frozen=True)
class CheckResult:
    name: str
    scope: str
    passed: bool
    detail: str


@dataclass
class VerifyReport:
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [check for check in self.checks if not check.passed]


def _orbit(alpha, coefficients) -> Tuple:
    return canonical_orbit(tuple(alpha), tuple(coefficients))[:2]


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


class VerificationSuite:
    """Contrôles nommés, regroupés par portée."""

    COHOM_WINDOW = 30
    DUALITY_WINDOW = 20
    CLOSED_FORM_WINDOW = 10
    ORACLE_WINDOW = 6
    DUAL_TWIST_WINDOW = 5
    CENSUS_BOUND = 6
    RANDOM_SEED = 20240601
    RANDOM_SAMPLES = 200

    def __init__(self):
        self._checks: List[Tuple[str, str, Callable[[], str]]] = [
            # cohomologie
            ("bott-uniqueness", "cohomology", self.check_bott_uniqueness),
            ("euler-consistency", "cohomology", self.check_euler_consistency),
            ("serre-duality", "cohomology", self.check_serre_duality),
            ("restriction-relation", "cohomology", self.check_restriction_relation),
            ("factor-symmetry", "cohomology", self.check_factor_symmetry),
            ("named-dimensions", "cohomology", self.check_named_dimensions),
            ("module-nonvanishing-equivalence", "cohomology", self.check_module_equivalence),
            ("line-bundle-census", "cohomology", self.check_census),
            # anneaux de Chow et données de Chern
            ("sextic-degrees", "chern", self.check_sextic_degrees),
            ("ring-axioms", "chern", self.check_ring_axioms),
            ("chern-closed-forms", "chern", self.check_closed_forms),
            ("beta-extraction", "chern", self.check_beta_extraction),
            ("rr-decomposable-oracle", "chern", self.check_rr_oracle),
            ("rr-dual-identities", "chern", self.check_rr_dual_identities),
            ("dual-twist-closed-form", "chern", self.check_dual_twist_closed_form),
            ("involutions", "chern", self.check_involutions),
            ("restriction-commutes", "chern", self.check_restriction_commutes),
            # classification
            ("identity-ledger", "classify", self.check_identity_ledger),
            ("divisorial-table", "classify", self.check_divisorial_table),
            ("lemma-lvanishing-unique", "classify", self.check_vanishing_search),
            ("intermediate-table", "classify", self.check_intermediate_table),
            ("dual-twist-exchange", "classify", self.check_dual_twist_exchange),
            ("ulrich-beta", "classify", self.check_ulrich),
            ("positivity", "classify", self.check_positivity),
            ("del-pezzo-embeddings", "classify", self.check_embeddings),
            ("phi-classification", "classify", self.check_phi),
            ("phi-restricts-to-f", "classify", self.check_phi_restriction),
            ("final-lists", "classify", self.check_final_lists),
            ("upper-bound", "classify", self.check_upper_bound),
            ("alpha-box", "classify", self.check_alpha_box),
            ("nonempty-zero-locus", "classify", self.check_nonempty_zero_locus),
            ("line-indecomposable", "classify", self.check_line_indecomposable),
            ("ulrich-splittings", "classify", self.check_ulrich_splittings),
        ]

    @property
    def names(self) -> List[str]:
        return [name for name, _, _ in self._checks]

    def run(self, scope: str = "all") -> VerifyReport:
        if scope != "all" and scope not in SCOPES:
            raise ValueError(f"unknown scope {scope!r}")
        report = VerifyReport()
        for name, check_scope, check in self._checks:
            if scope not in ("all", check_scope):
                continue
            try:
                detail = check()
                passed = True
            except Exception as e:  # un contrôle en échec ne doit pas arrêter la suite
                detail = f"{type(e).__name__}: {e}"
                passed = False
                logger.warning("Contrôle %s en échec : %s", name, detail)
            report.checks.append(CheckResult(name, check_scope, passed, detail))
        return report

    # ==================== COHOMOLOGIE ====================

    def _square(self, bound: int):
        return product(range(-bound, bound + 1), repeat=2)

    def check_bott_uniqueness(self) -> str:
        for a1, a2 in self._square(self.COHOM_WINDOW):
            dims = cohom_f(a1, a2).dims
            nonzero = [i for i, d in enumerate(dims) if d]
            _expect(len(nonzero) <= 1, f"O({a1},{a2}) has {dims}")
            label = region_label(a1, a2)
            if nonzero:
                _expect(label.cohomology_index == nonzero[0], f"region {label.value} at ({a1},{a2})")
            index = f_region_index(a1, a2)
            if index is not None:
                _expect(dims[index] == (-1) ** index * f_closed_form(a1, a2), f"value at ({a1},{a2})")
            else:
                _expect(f_closed_form(a1, a2) == 0, f"({a1},{a2}) outside the regions")
        return f"|a_i| <= {self.COHOM_WINDOW}"

    def check_euler_consistency(self) -> str:
        for a1, a2 in self._square(self.COHOM_WINDOW):
            _expect(cohom_f(a1, a2).euler == euler_line(Variety.F, a1, a2), f"F ({a1},{a2})")
            _expect(cohom_phi(a1, a2).euler == euler_line(Variety.PHI, a1, a2), f"Phi ({a1},{a2})")
        return "F and Phi"

    def check_serre_duality(self) -> str:
        for a1, a2 in self._square(self.DUALITY_WINDOW):
            f, f_dual = cohom_f(a1, a2).dims, cohom_f(-2 - a1, -2 - a2).dims
            _expect(f == f_dual[::-1], f"F ({a1},{a2})")
            p, p_dual = cohom_phi(a1, a2).dims, cohom_phi(-3 - a1, -3 - a2).dims
            _expect(p == p_dual[::-1], f"Phi ({a1},{a2})")
        return f"|a_i| <= {self.DUALITY_WINDOW}"

    def check_restriction_relation(self) -> str:
        for a1, a2 in self._square(self.DUALITY_WINDOW):
            f = cohom_f(a1, a2).dims
            left = f[1] - f[2]
            right = cohom_phi(a1 - 1, a2 - 1).dims[2] - cohom_phi(a1, a2).dims[2]
            _expect(left == right, f"({a1},{a2}): {left} != {right}")
        return "h1 - h2 on F from h2 on Phi"

    def check_factor_symmetry(self) -> str:
        for a1, a2 in self._square(self.DUALITY_WINDOW):
            _expect(cohom_f(a1, a2).dims == cohom_f(a2, a1).dims, f"F ({a1},{a2})")
            _expect(cohom_phi(a1, a2).dims == cohom_phi(a2, a1).dims, f"Phi ({a1},{a2})")
        return "swap of factors"

    def check_named_dimensions(self) -> str:
        _expect(cohom_f(-2, 2).dims[1] == 3, "h1(O(-2h1+2h2)) != 3")
        _expect(cohom_f(-2, 1).dims[1] == 1, "h1(O(-2h1+h2)) != 1")
        return "h1(-2,2) = 3, h1(-2,1) = 1"

    def check_module_equivalence(self) -> str:
        for a1, a2 in self._square(self.DUALITY_WINDOW):
            first, witness1 = module_nonvanishing(Variety.F, a1, a2, 1)
            second, witness2 = module_nonvanishing(Variety.F, a1, a2, 2)
            _expect(first == second, f"({a1},{a2})")
            _expect((witness1 is None) == (not first), f"scan disagrees at ({a1},{a2})")
            _expect((witness2 is None) == (not second), f"scan disagrees at ({a1},{a2})")
        return "H1_* != 0 iff H2_* != 0"

    def check_census(self) -> str:
        for variety in Variety:
            initialized, ulrich = line_bundle_census(variety, self.CENSUS_BOUND)
            _expect(set(initialized) == INITIALIZED_ACM, f"{variety.value}: {initialized}")
            _expect(set(ulrich) == ULRICH_LINES, f"{variety.value}: {ulrich}")
        return "initialized aCM and Ulrich line bundles on F and Phi"

    # ==================== CHOW / CHERN ====================

    def check_sextic_degrees(self) -> str:
        for variety in Variety:
            h = hyperplane(variety)
            _expect(degree(h ** variety.dimension) == 6, f"deg {variety.value}")
        return "deg F = deg Phi = 6"

    def check_ring_axioms(self) -> str:
        rng = random.Random(self.RANDOM_SEED)
        for variety in Variety:
            basis = chow_ring(variety).basis
            classes = [ChowClass(variety, ((m, 1),)) for m in basis]
            for x, y in product(classes, repeat=2):
                _expect(x * y == y * x, f"commutativity on {variety.value}")
            for x, y, z in product(classes, repeat=3):
                _expect((x * y) * z == x * (y * z), f"associativity on {variety.value}")
            for _ in range(self.RANDOM_SAMPLES):
                x, y, z = (
                    ChowClass(variety, tuple((m, rng.randint(-20, 20)) for m in basis))
                    for _ in range(3)
                )
                _expect(x * (y + z) == x * y + x * z, f"distributivity on {variety.value}")
        return f"basis exhaustively, {self.RANDOM_SAMPLES} random triples"

    def check_closed_forms(self) -> str:
        for a1, a2 in self._square(self.CLOSED_FORM_WINDOW):
            b = (a1 + a2, a1 - a2)
            x = Rank2Chern.on_f((a1, a2), b)
            _expect(ChernNumbers.of(x) == ChernNumbers.closed_form((a1, a2), b), f"alpha=({a1},{a2})")
        return f"|alpha_i| <= {self.CLOSED_FORM_WINDOW}"

    def check_beta_extraction(self) -> str:
        for b in self._square(5):
            _expect(beta(f_codim2(b)) == b, f"beta {b}")
        for m in product(range(-3, 4), repeat=3):
            _expect(mu(phi_codim2(m)) == m, f"mu {m}")
        return "beta_i = deg(h_i*c2), mu by intersection"

    def check_rr_oracle(self) -> str:
        """chi(O(a) + O(b)) = chi(O(a)) + chi(O(b)) pour toute paire et tout twist."""
        h1, h2 = generator(Variety.F, 1).to_chow(), generator(Variety.F, 2).to_chow()
        # beta de a*b par bilinéarité, à partir des produits calculés dans l'anneau
        b11, b12, b22 = beta(h1 * h1), beta(h1 * h2), beta(h2 * h2)
        bound = self.ORACLE_WINDOW
        divisors = list(self._square(bound))
        count = 0
        for (a1, a2), (c1, c2) in combinations_with_replacement(divisors, 2):
            for t in range(-bound, bound + 1):
                p, q = (a1 + t, a2 + t), (c1 + t, c2 + t)
                alpha = (p[0] + q[0], p[1] + q[1])
                w11, w12, w22 = p[0] * q[0], p[0] * q[1] + p[1] * q[0], p[1] * q[1]
                beta_pq = tuple(w11 * b11[i] + w12 * b12[i] + w22 * b22[i] for i in range(2))
                twelve = RiemannRoch.twelve_chi(ChernNumbers.closed_form(alpha, beta_pq))
                expected = euler_line(Variety.F, *p) + euler_line(Variety.F, *q)
                _expect(twelve == 12 * expected, f"O{p} + O{q}: 12chi = {twelve}, expected {12 * expected}")
                count += 1
        return f"{count} decomposable bundles"

    def _admissible_f_rows(self):
        rows = line_table_f() + intermediate_table_f() + ulrich_table_f()
        return [row for row in rows if row.status.is_admissible]

    def check_rr_dual_identities(self) -> str:
        minus_h = -hyperplane(Variety.F)
        for row in self._admissible_f_rows():
            x = row.chern
            _expect(chi_f(twist(dual(x), minus_h)) == 0, f"chi(E^v(-h)) for {x}")
            _expect(chi_f(dual(x)) == row.e, f"chi(E^v) for {x}")
        return "chi(E^v(-h)) = 0, chi(E^v) = e"

    def check_dual_twist_closed_form(self) -> str:
        bound = self.DUAL_TWIST_WINDOW
        for a in self._square(bound):
            for b in self._square(bound):
                image = dual_twist_h(Rank2Chern.on_f(a, b))
                _expect((image.alpha, image.beta) == dual_twist_h_closed_form(a, b), f"alpha={a}, beta={b}")
        return f"alpha, beta in [-{bound}, {bound}]^2"

    def check_involutions(self) -> str:
        for a in self._square(3):
            for b in self._square(3):
                x = Rank2Chern.on_f(a, b)
                _expect(dual(dual(x)) == x, f"dual twice on {x}")
                _expect(dual_twist_h(dual_twist_h(x)) == x, f"dual twist twice on {x}")
        return "dual and E -> E^v(h)"

    def check_restriction_commutes(self) -> str:
        for a in self._square(2):
            for m in product(range(0, 3), repeat=3):
                x = Rank2Chern.on_phi(a, m)
                for line in self._square(1):
                    divisor = DivisorClass(Variety.PHI, *line)
                    left = restrict_chern(twist(x, divisor))
                    right = twist(restrict_chern(x), divisor.restrict())
                    _expect(left == right, f"{x} twisted by {divisor}")
                _expect(restrict_chern(dual(x)) == dual(restrict_chern(x)), f"dual of {x}")
        return "twist and dual"

    # ==================== CLASSIFICATION ====================

    def check_identity_ledger(self) -> str:
        rows = divisorial_table() + line_table_f() + intermediate_table_f() + ulrich_table_f()
        for row in rows:
            residuals = identity_ledger(row.chern.c1, row.coefficients, row.e)
            _expect(tuple(residuals) == (0, 0), f"{row.alpha} {row.coefficients}: {residuals}")
        return f"{len(rows)} rows"

    def check_divisorial_table(self) -> str:
        rows = divisorial_table()
        found = sorted((r.alpha, r.delta, r.e, r.hc2, r.c1c2, r.coefficients) for r in rows)
        _expect(found == sorted(DIVISORIAL_ROWS), f"rows {found}")
        for row in rows:
            negative = row.status.kind is StatusKind.NEGATIVE_INTERSECTION
            expected = row.alpha == (1, 1) and row.coefficients in ((2, 0), (0, 2))
            _expect(negative == expected, f"{row.alpha} {row.coefficients}: {row.status}")
            _expect(not row.status.is_admissible, f"{row.alpha} {row.delta} survives")
        return f"{len(rows)} rows, none admissible"

    def check_vanishing_search(self) -> str:
        hits = vanishing_search()
        _expect(hits == {(1, 2, 0, -1)}, f"hits {sorted(hits)}")
        _expect(vanishing_search(VanishingSearch.WIDE_T_WINDOW) == hits, "wide window differs")
        return "(a2, b1, b2, t) = (1, 2, 0, -1)"

    def check_intermediate_table(self) -> str:
        rows = intermediate_table_f()
        summary = [(r.alpha, r.coefficients, r.zero_locus.degree, r.zero_locus.arithmetic_genus, r.status.kind) for r in rows]
        expected = [
            ((0, 1), (1, 0), 1, 0, StatusKind.ADMISSIBLE),
            ((0, 2), (1, 0), 1, 0, StatusKind.DECOMPOSABLE),
            ((1, 1), (1, 1), 2, 0, StatusKind.DECOMPOSABLE),
            ((1, 1), (2, 0), 2, 0, StatusKind.CITED_RULE),
            ((1, 2), (2, 2), 4, 0, StatusKind.ADMISSIBLE),
        ]
        _expect(summary == expected, f"rows {summary}")
        return "5 cases"

    def check_dual_twist_exchange(self) -> str:
        by_key = {(r.alpha, r.coefficients): r for r in intermediate_table_f()}
        for row, alpha, beta_image in intermediate_dual_pairs():
            image = by_key.get((alpha, beta_image))
            _expect(image is not None, f"{row.alpha} {row.coefficients} -> {alpha} {beta_image}")
            _expect(image.status.kind is row.status.kind, f"status of {row.alpha} {row.coefficients}")
        pairs = {(r.alpha, a) for r, a, _ in intermediate_dual_pairs() if r.status.is_admissible}
        _expect(pairs == {((0, 1), (1, 2)), ((1, 2), (0, 1))}, f"admissible pairs {pairs}")
        return "line and quartic cases exchanged"

    def check_ulrich(self) -> str:
        _expect(sorted(ulrich_beta_f()) == [(3, 5), (4, 4), (5, 3)], f"{ulrich_beta_f()}")
        invariants = zero_locus_invariants(Rank2Chern.on_f((2, 2), (4, 4)))
        _expect((invariants.degree, invariants.arithmetic_genus) == (8, 1), f"{invariants}")
        return "beta in {(3,5), (4,4), (5,3)}, zero locus (8, 1)"

    def check_positivity(self) -> str:
        for row in self._admissible_f_rows() + divisorial_table():
            if row.status.is_admissible:
                _expect(min(row.coefficients) >= 0, f"{row.alpha} {row.coefficients}")
                if row.e_class is not None and not row.e_class.is_zero:
                    _expect(min(beta(row.e_class)) >= 0, f"[E] = {row.e_class}")
        for row in classify_phi():
            if row.status.is_admissible:
                _expect(min(row.coefficients) >= 0, f"mu {row.coefficients}")
        return "beta_i >= 0, mu_i >= 0"

    def check_embeddings(self) -> str:
        f1 = {c.mu for c in del_pezzo_embeddings(Surface.F1) if c.status.is_admissible}
        _expect(f1 == {(1, 3, 2), (3, 1, 2)}, f"F1 survivors {f1}")
        quadric = del_pezzo_embeddings(Surface.Q)
        _expect(not any(c.status.is_admissible for c in quadric), "a quadric embedding survives")
        kinds = {(c.mu, c.status.kind) for c in quadric}
        _expect(((0, 0, 4), StatusKind.DECOMPOSABLE) in kinds, "complete intersection")
        _expect(((2, 2, 2), StatusKind.CITED_RULE) in kinds, "hyperplane case")
        return "F1: mu = (1,3,2) up to swap; Q: none"

    def check_phi(self) -> str:
        rows = classify_phi()
        survivors = {_orbit(r.alpha, r.coefficients) for r in rows if r.status.is_admissible}
        expected = {_orbit(a, m) for a, m in (((0, 0), (1, 0, 0)), ((0, 1), (1, 0, 0)), ((1, 2), (1, 1, 1)), ((2, 2), (1, 3, 2)))}
        _expect(survivors == expected, f"survivors {sorted(survivors)}")
        negative = {r.coefficients for r in rows if r.alpha == (1, 2) and r.status.kind is StatusKind.NEGATIVE_INTERSECTION}
        _expect(negative == {(2, 2, 0), (0, 0, 2)}, f"negative {negative}")
        return f"{len(survivors)} survivors"

    def check_phi_restriction(self) -> str:
        f_side = {_orbit(r.alpha, r.coefficients) for r in self._admissible_f_rows()}
        for row in classify_phi():
            if not row.status.is_admissible:
                continue
            image = restrict_chern(row.chern)
            _expect(_orbit(image.alpha, image.beta) in f_side, f"{row.alpha} {row.coefficients}")
        return "every survivor restricts to an admissible case of F"

    def check_final_lists(self) -> str:
        expected = {
            Variety.F: {
                (0, 0): {(1, 0)},
                (0, 1): {(1, 0)},
                (1, 2): {(2, 2)},
                (2, 2): {(3, 5), (4, 4)},
            },
            Variety.PHI: {
                (0, 0): {(1, 0, 0)},
                (0, 1): {(1, 0, 0)},
                (1, 2): {(1, 1, 1)},
                (2, 2): {(1, 3, 2)},
            },
        }
        for variety, table in expected.items():
            entries = final_classification(variety)
            _expect(tuple(e.alpha for e in entries) == FINAL_ALPHAS, f"{variety.value} alphas")
            for entry in entries:
                got = {_orbit(entry.alpha, c) for c in entry.classes}
                want = {_orbit(entry.alpha, c) for c in table[entry.alpha]}
                _expect(got == want, f"{variety.value} {entry.alpha}: {got}")
        return "(0,0), (0,1), (1,2), (2,2) on F and Phi"

    def check_upper_bound(self) -> str:
        polynomial = chi_dual_twist_polynomial()
        _expect(sympy.expand(polynomial - (12 - 3 * A1 - 3 * A2)) == 0, f"chi(E^v(h)) = {polynomial}")
        statuses = {row.alpha: row.status for row in upper_bound_elimination()}
        _expect(statuses[(1, 3)].kind is StatusKind.NO_INTEGER_SOLUTION, f"(1,3): {statuses[(1, 3)]}")
        _expect(statuses[(1, 3)].detail == "2*b2 = 5", statuses[(1, 3)].detail)
        _expect(statuses[(0, 4)].kind is StatusKind.CITED_RULE, f"(0,4): {statuses[(0, 4)]}")
        _expect(statuses[(2, 2)].is_admissible, "(2,2) must pass")
        survivors = [alpha for alpha, status in statuses.items() if status.is_admissible]
        _expect(survivors == [(2, 2)], f"survivors {survivors}")
        return f"chi(E^v(h)) = {polynomial}"

    def check_alpha_box(self) -> str:
        survivors = surviving_alphas()
        _expect(survivors == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)], f"{survivors}")
        return "0 <= c1 <= 2h"

    def check_nonempty_zero_locus(self) -> str:
        violations = nonempty_zero_locus_violations()
        _expect(not violations, f"{violations}")
        return "h1(O(-c1)) != 0 never gives an aCM extension"

    def check_line_indecomposable(self) -> str:
        for variety in Variety:
            hits = line_indecomposability_check(variety)
            _expect(not hits, f"{variety.value}: {hits}")
        return "no O(M) + O(-M) with c2 of a line or plane"

    def check_ulrich_splittings(self) -> str:
        for variety in Variety:
            pairs = [(s.first, s.second) for s in decomposable_ulrich_splittings(variety)]
            _expect(pairs == [((0, 2), (2, 0))], f"{variety.value}: {pairs}")
        return "O(2h1) + O(2h2) only"


def run_verification(scope: str = "all") -> VerifyReport:
    return VerificationSuite().run(scope)
