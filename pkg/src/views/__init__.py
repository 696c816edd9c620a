"""
Module des vues de la ligne de commande.
"""

from .chern import ChernView
from .chow import ChowView
from .cohomology import CohomView
from .regions import RegionsView
from .tables import TableView
from .verify import VerifyView

__all__ = ["ChernView", "ChowView", "CohomView", "RegionsView", "TableView", "VerifyView"]
