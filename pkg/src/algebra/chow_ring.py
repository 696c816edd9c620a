"""
Anneaux de Chow des deux sextiques de del Pezzo.

A(F)   = Z[h1, h2] / (h1^2 - h1*h2 + h2^2, h1^3, h2^3)
A(Phi) = Z[eta1, eta2] / (eta1^3, eta2^3)

Les tables de multiplication sont calculées une seule fois par variété à
partir de la présentation (base de Gröbner + changement de base exact vers
la base canonique), puis toute l'arithmétique se fait sur des entiers.
"""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from tokenize import TokenError
from typing import Dict, List, Mapping, Optional, Tuple, Union

import sympy
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from src.errors import (
    CodimensionError,
    IntegralityError,
    UnsupportedOperationError,
    VarietyMismatchError,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, int]


class Variety(Enum):
    """Les deux variétés étudiées."""

    F = "F"
    PHI = "Phi"

    @property
    def dimension(self) -> int:
        return 3 if self is Variety.F else 4

    @property
    def canonical_twist(self) -> int:
        """k tel que omega = O(k * hyperplan)."""
        return -2 if self is Variety.F else -3

    @property
    def generators(self) -> Tuple[str, str]:
        return ("h1", "h2") if self is Variety.F else ("eta1", "eta2")

    @property
    def hyperplane_name(self) -> str:
        return "h" if self is Variety.F else "eta"

    @classmethod
    def parse(cls, name: str) -> "Variety":
        """Lit le nom donné en ligne de commande (F ou Phi)."""
        for variety in cls:
            if name.lower() == variety.value.lower():
                return variety
        raise UnsupportedOperationError(f"unknown variety {name!r} (expected F or Phi)")


# Base canonique, rangée par codimension puis par puissance décroissante du
# premier générateur. Sur F, h1*h2 n'est jamais un élément de base.
CANONICAL_BASIS: Dict[Variety, Tuple[Tuple[Monomial, ...], ...]] = {
    Variety.F: (
        ((0, 0),),
        ((1, 0), (0, 1)),
        ((2, 0), (0, 2)),
        ((2, 1),),
    ),
    Variety.PHI: (
        ((0, 0),),
        ((1, 0), (0, 1)),
        ((2, 0), (1, 1), (0, 2)),
        ((2, 1), (1, 2)),
        ((2, 2),),
    ),
}


def _relations(variety: Variety, x: sympy.Symbol, y: sympy.Symbol) -> List[sympy.Expr]:
    if variety is Variety.F:
        return [x**2 - x * y + y**2, x**3, y**3]
    return [x**3, y**3]


def monomial_name(variety: Variety, mono: Monomial) -> str:
    """Nom lisible d'un monôme, par exemple h1^2*h2 ou eta1*eta2."""
    parts = []
    for gen, power in zip(variety.generators, mono):
        if power == 1:
            parts.append(gen)
        elif power > 1:
            parts.append(f"{gen}^{power}")
    return "*".join(parts) if parts else "1"


class ChowRing:
    """Table de multiplication exacte de A(F) ou A(Phi)."""

    def __init__(self, variety: Variety):
        self.variety = variety
        self.basis: Tuple[Monomial, ...] = tuple(
            mono for graded in CANONICAL_BASIS[variety] for mono in graded
        )
        self.basis_index: Dict[Monomial, int] = {m: i for i, m in enumerate(self.basis)}
        self.point: Monomial = CANONICAL_BASIS[variety][-1][0]

        self._symbols = sympy.symbols(variety.generators)
        x, y = self._symbols
        self._groebner = sympy.groebner(
            _relations(variety, x, y), x, y, order="grevlex"
        )
        self._rewrites: Dict[Monomial, Tuple[Tuple[Monomial, int], ...]] = {}
        self._products: Dict[Tuple[Monomial, Monomial], Tuple[Tuple[Monomial, int], ...]] = {}
        self._build_products()
        logger.debug(
            "Anneau de Chow %s : %d monômes de base, %d produits non nuls",
            variety.value,
            len(self.basis),
            len(self._products),
        )

    # ==================== CONSTRUCTION ====================

    def _coordinates(self, expr: sympy.Expr, degree: int) -> List[sympy.Rational]:
        """Coordonnées d'un polynôme homogène sur les monômes de degré donné."""
        coords = [sympy.Integer(0)] * (degree + 1)
        if expr == 0:
            return coords
        for (e1, _), coeff in sympy.Poly(expr, *self._symbols).terms():
            coords[degree - e1] += coeff
        return coords

    def reduce_monomial(self, mono: Monomial) -> Tuple[Tuple[Monomial, int], ...]:
        """Réécrit un monôme quelconque dans la base canonique."""
        if mono in self._rewrites:
            return self._rewrites[mono]

        degree = mono[0] + mono[1]
        if degree > self.variety.dimension:
            self._rewrites[mono] = ()
            return ()

        x, y = self._symbols
        graded = CANONICAL_BASIS[self.variety][degree]
        _, remainder = self._groebner.reduce(x ** mono[0] * y ** mono[1])

        columns = []
        for base in graded:
            _, base_nf = self._groebner.reduce(x ** base[0] * y ** base[1])
            columns.append(self._coordinates(base_nf, degree))
        matrix = sympy.Matrix(columns).T
        target = sympy.Matrix(self._coordinates(remainder, degree))

        solution, free = matrix.gauss_jordan_solve(target)
        if free.shape[0]:
            raise IntegralityError(
                f"base canonique non libre en codimension {degree} sur {self.variety.value}"
            )

        terms = []
        for base, value in zip(graded, solution):
            if not value.is_integer:
                raise IntegralityError(
                    f"réécriture non entière de {monomial_name(self.variety, mono)}"
                )
            if value != 0:
                terms.append((base, int(value)))
        self._rewrites[mono] = tuple(terms)
        return self._rewrites[mono]

    def _build_products(self) -> None:
        for left in self.basis:
            for right in self.basis:
                product = (left[0] + right[0], left[1] + right[1])
                terms = self.reduce_monomial(product)
                if terms:
                    self._products[(left, right)] = terms

    # ==================== ARITHMETIQUE ====================

    def normalize_terms(self, raw: Mapping[Monomial, int]) -> Dict[Monomial, int]:
        result: Dict[Monomial, int] = {}
        for mono, coeff in raw.items():
            if not coeff:
                continue
            for base, value in self.reduce_monomial(tuple(mono)):
                result[base] = result.get(base, 0) + coeff * value
        return {m: c for m, c in result.items() if c}

    def multiply(
        self, left: Mapping[Monomial, int], right: Mapping[Monomial, int]
    ) -> Dict[Monomial, int]:
        result: Dict[Monomial, int] = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                for base, value in self._products.get((m1, m2), ()):
                    result[base] = result.get(base, 0) + c1 * c2 * value
        return {m: c for m, c in result.items() if c}


@lru_cache(maxsize=None)
def chow_ring(variety: Variety) -> ChowRing:
    """Anneau de Chow partagé d'une variété (construit une seule fois)."""
    return ChowRing(variety)


@dataclass(frozen=True)
class ChowClass:
    """Classe de cycles à coefficients entiers, dans la base canonique."""

    variety: Variety
    terms: Tuple[Tuple[Monomial, int], ...] = ()

    def __post_init__(self):
        ring = chow_ring(self.variety)
        merged: Dict[Monomial, int] = {}
        for mono, coeff in self.terms:
            mono = tuple(mono)
            if mono not in ring.basis_index:
                raise CodimensionError(
                    f"{monomial_name(self.variety, mono)} is not a canonical basis "
                    f"monomial of {self.variety.value}; use normalize()"
                )
            merged[mono] = merged.get(mono, 0) + int(coeff)
        ordered = sorted(
            ((m, c) for m, c in merged.items() if c), key=lambda t: ring.basis_index[t[0]]
        )
        object.__setattr__(self, "terms", tuple(ordered))

    @classmethod
    def from_mapping(cls, variety: Variety, mapping: Mapping[Monomial, int]) -> "ChowClass":
        return cls(variety, tuple(mapping.items()))

    # ==================== ACCES ====================

    def as_dict(self) -> Dict[Monomial, int]:
        return dict(self.terms)

    def coefficient(self, mono: Union[Monomial, str]) -> int:
        if isinstance(mono, str):
            for base in chow_ring(self.variety).basis:
                if monomial_name(self.variety, base) == mono:
                    mono = base
                    break
            else:
                raise CodimensionError(f"unknown monomial {mono!r}")
        return dict(self.terms).get(tuple(mono), 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def codimension(self) -> Optional[int]:
        """Codimension commune des termes (None si nulle ou non homogène)."""
        degrees = {m[0] + m[1] for m, _ in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def named_terms(self) -> List[Tuple[str, int]]:
        return [(monomial_name(self.variety, m), c) for m, c in self.terms]

    # ==================== OPERATIONS ====================

    def _check_same(self, other: "ChowClass") -> None:
        if other.variety is not self.variety:
            raise VarietyMismatchError(
                f"cannot combine classes on {self.variety.value} and {other.variety.value}"
            )

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        other = as_chow(other)
        self._check_same(other)
        return ChowClass(self.variety, self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.variety, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "ChowClass":
        return self + (-as_chow(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass(self.variety, tuple((m, c * other) for m, c in self.terms))
        return mul(self, as_chow(other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> "ChowClass":
        if exponent < 0:
            raise UnsupportedOperationError("negative powers are not defined in A(X)")
        result = unit(self.variety)
        for _ in range(exponent):
            result = mul(result, self)
        return result

    def degree(self) -> int:
        return degree(self)

    def restrict(self) -> "ChowClass":
        return restrict(self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for name, coeff in self.named_terms():
            if name == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = name
            else:
                body = f"{abs(coeff)}*{name}"
            sign = "-" if coeff < 0 else "+"
            chunks.append((sign, body))
        text = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class DivisorClass:
    """Diviseur a1*h1 + a2*h2 (ou a1*eta1 + a2*eta2)."""

    variety: Variety
    a1: int
    a2: int

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.a1, self.a2)

    def to_chow(self) -> ChowClass:
        return ChowClass(self.variety, (((1, 0), self.a1), ((0, 1), self.a2)))

    def _other(self, other: "DivisorClass") -> "DivisorClass":
        if other.variety is not self.variety:
            raise VarietyMismatchError(
                f"cannot combine divisors on {self.variety.value} and {other.variety.value}"
            )
        return other

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        other = self._other(other)
        return DivisorClass(self.variety, self.a1 + other.a1, self.a2 + other.a2)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        other = self._other(other)
        return DivisorClass(self.variety, self.a1 - other.a1, self.a2 - other.a2)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(self.variety, -self.a1, -self.a2)

    def __mul__(self, other):
        if isinstance(other, int):
            return DivisorClass(self.variety, self.a1 * other, self.a2 * other)
        return mul(self.to_chow(), as_chow(other))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, exponent: int) -> ChowClass:
        return self.to_chow() ** exponent

    def restrict(self) -> "DivisorClass":
        if self.variety is not Variety.PHI:
            raise VarietyMismatchError("restriction goes from Phi to F")
        return DivisorClass(Variety.F, self.a1, self.a2)

    def __str__(self) -> str:
        return str(self.to_chow())


def as_chow(value: Union[ChowClass, DivisorClass]) -> ChowClass:
    if isinstance(value, DivisorClass):
        return value.to_chow()
    if isinstance(value, ChowClass):
        return value
    raise TypeError(f"expected a ChowClass or DivisorClass, got {type(value).__name__}")


# ==================== OPERATIONS DU MODULE ====================


def normalize(raw, variety: Variety) -> ChowClass:
    """
    Réduit une combinaison entière de monômes modulo l'idéal des relations.

    raw peut être un dictionnaire {(e1, e2): coeff}, une ChowClass, une
    expression sympy ou une chaîne (voir parse).
    """
    if isinstance(raw, ChowClass):
        if raw.variety is not variety:
            raise VarietyMismatchError("normalize: class lives on another variety")
        return raw
    if isinstance(raw, str):
        return parse(raw, variety)
    ring = chow_ring(variety)
    if isinstance(raw, sympy.Expr):
        raw = _poly_terms(raw, variety)
    return ChowClass.from_mapping(variety, ring.normalize_terms(raw))


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    """Produit d'intersection normalisé."""
    if x.variety is not y.variety:
        raise VarietyMismatchError(
            f"cannot multiply classes on {x.variety.value} and {y.variety.value}"
        )
    ring = chow_ring(x.variety)
    return ChowClass.from_mapping(x.variety, ring.multiply(dict(x.terms), dict(y.terms)))


def degree(x: ChowClass) -> int:
    """Coefficient de [pt] d'une classe de codimension maximale."""
    top = x.variety.dimension
    if x.is_zero:
        return 0
    if x.codimension != top:
        raise CodimensionError(
            f"degree needs a class of codimension {top} on {x.variety.value}, got {x}"
        )
    return x.coefficient(chow_ring(x.variety).point)


def restrict(x: ChowClass) -> ChowClass:
    """Restriction A(Phi) -> A(F) : eta_i -> h_i puis normalisation."""
    if x.variety is not Variety.PHI:
        raise VarietyMismatchError("restriction goes from Phi to F")
    raw: Dict[Monomial, int] = {}
    for mono, coeff in x.terms:
        if mono[0] + mono[1] > Variety.F.dimension:
            raise CodimensionError("codimension-4 classes on Phi have no image on F")
        raw[mono] = coeff
    return ChowClass.from_mapping(Variety.F, chow_ring(Variety.F).normalize_terms(raw))


# ==================== CLASSES USUELLES ====================


def unit(variety: Variety) -> ChowClass:
    return ChowClass(variety, (((0, 0), 1),))


def zero(variety: Variety) -> ChowClass:
    return ChowClass(variety)


def point(variety: Variety) -> ChowClass:
    return ChowClass(variety, ((chow_ring(variety).point, 1),))


def hyperplane(variety: Variety) -> DivisorClass:
    return DivisorClass(variety, 1, 1)


def generator(variety: Variety, index: int) -> DivisorClass:
    """h1/h2 (ou eta1/eta2), index 1 ou 2."""
    return DivisorClass(variety, 1, 0) if index == 1 else DivisorClass(variety, 0, 1)


@lru_cache(maxsize=None)
def omega2() -> ChowClass:
    """Seconde classe de Chern du fibré cotangent de F : 6*h1*h2."""
    return 6 * normalize({(1, 1): 1}, Variety.F)


def f_codim2(beta: Tuple[int, int]) -> ChowClass:
    """beta1*h2^2 + beta2*h1^2 (convention des tables)."""
    return ChowClass(Variety.F, (((2, 0), beta[1]), ((0, 2), beta[0])))


def phi_codim2(mu: Tuple[int, int, int]) -> ChowClass:
    """mu1*eta2^2 + mu2*eta1^2 + mu3*eta1*eta2."""
    return ChowClass(Variety.PHI, (((0, 2), mu[0]), ((2, 0), mu[1]), ((1, 1), mu[2])))


def beta(c2: ChowClass) -> Tuple[int, int]:
    """(deg(h1*c2), deg(h2*c2)) ; indépendant de la base."""
    if c2.variety is not Variety.F:
        raise VarietyMismatchError("beta is read on F; use mu() on Phi")
    return (
        degree(mul(generator(Variety.F, 1).to_chow(), c2)),
        degree(mul(generator(Variety.F, 2).to_chow(), c2)),
    )


def mu(gamma2: ChowClass) -> Tuple[int, int, int]:
    """(deg(eta1^2*g2), deg(eta2^2*g2), deg(eta1*eta2*g2))."""
    if gamma2.variety is not Variety.PHI:
        raise VarietyMismatchError("mu is read on Phi; use beta() on F")
    eta1 = generator(Variety.PHI, 1).to_chow()
    eta2 = generator(Variety.PHI, 2).to_chow()
    return (
        degree(eta1 * eta1 * gamma2),
        degree(eta2 * eta2 * gamma2),
        degree(eta1 * eta2 * gamma2),
    )


# ==================== LECTURE D'EXPRESSIONS ====================


def _poly_terms(expr: sympy.Expr, variety: Variety) -> Dict[Monomial, int]:
    gens = sympy.symbols(variety.generators)
    try:
        poly = sympy.Poly(sympy.expand(expr), *gens)
    except sympy.PolynomialError as exc:
        raise UnsupportedOperationError(f"not a polynomial in {', '.join(variety.generators)}") from exc
    terms: Dict[Monomial, int] = {}
    for mono, coeff in poly.terms():
        if not coeff.is_integer:
            raise IntegralityError(f"non-integer coefficient {coeff} in {expr}")
        if coeff != 0:
            terms[tuple(mono)] = int(coeff)
    return terms


# entiers, noms, + - * ^ ( ) et blancs : parse_expr évalue ce qu'on lui donne
_EXPRESSION_CHARS = re.compile(r"[\sA-Za-z0-9_+\-*^()]*")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _check_expression(text: str, allowed: Tuple[str, ...]) -> None:
    if not _EXPRESSION_CHARS.fullmatch(text):
        raise UnsupportedOperationError(f"{text!r} contains characters outside [0-9 +-*^()] and generator names")
    unknown = sorted(set(_IDENTIFIER.findall(text)) - set(allowed))
    if unknown:
        raise UnsupportedOperationError(
            f"{text!r} uses names other than {', '.join(allowed)}: {', '.join(unknown)}"
        )


def parse(text: str, variety: Variety) -> ChowClass:
    """
    Lit une expression comme '(h1+h2)^3' ou 'eta^4' et la normalise.

    Le symbole h (resp. eta) désigne la classe hyperplane.
    """
    g1, g2 = sympy.symbols(variety.generators)
    local = {variety.generators[0]: g1, variety.generators[1]: g2, variety.hyperplane_name: g1 + g2}
    _check_expression(text, tuple(local))
    try:
        expr = parse_expr(
            text,
            local_dict=local,
            transformations=standard_transformations + (convert_xor,),
        )
    except (SyntaxError, TypeError, TokenError, sympy.SympifyError) as exc:
        raise UnsupportedOperationError(f"cannot parse {text!r}") from exc
    if not isinstance(expr, sympy.Expr) or expr.free_symbols - {g1, g2}:
        raise UnsupportedOperationError(
            f"{text!r} uses symbols other than {', '.join(local)}"
        )
    return normalize(expr, variety)
