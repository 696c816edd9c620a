"""
Exceptions communes à Sextics.
"""


class SexticsError(Exception):
    """Erreur de base du projet."""


class VarietyMismatchError(SexticsError, ValueError):
    """Deux objets ne vivent pas sur la même variété."""


class CodimensionError(SexticsError, ValueError):
    """Classe de codimension inadaptée à l'opération demandée."""


class UnsupportedOperationError(SexticsError, ValueError):
    """Opération non définie pour cette variété ou ces arguments."""


class IntegralityError(SexticsError, ArithmeticError):
    """Une quantité qui devait être entière ne l'est pas."""
