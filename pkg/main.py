"""
Sextics - classification des fibrés aCM de rang 2 sur F et P2 x P2
Point d'entrée principal de la ligne de commande.
"""

import argparse
import logging
import sys
from typing import List, Optional

from src.algebra.chow_ring import Variety
from src.components.region_plot import RegionPlot
from src.components.theme import RegionTheme
from src.errors import SexticsError
from src.export.report_writer import writer
from src.verification.suite import SCOPES
from src.views.chern import ChernView
from src.views.chow import ChowView
from src.views.cohomology import CohomView
from src.views.regions import RegionsView
from src.views.tables import TABLES, TableView
from src.views.verify import VerifyView

logger = logging.getLogger("sextics")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

FORMATS = ("json", "csv", "markdown", "svg", "ascii")


class SexticsApp:
    """Application principale : analyse des arguments puis rendu d'une vue."""

    def __init__(self, argv: Optional[List[str]] = None):
        self.parser = self._build_parser()
        self.args = self.parser.parse_args(argv)
        self._setup_logging()

    def _build_parser(self) -> argparse.ArgumentParser:
        """Construit la grammaire <commande> [args] [--format ...] [--out FICHIER]."""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--format", choices=FORMATS, default=None, help="output format")
        common.add_argument("--out", default=None, help="write the output to FILE")
        common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

        parser = argparse.ArgumentParser(
            prog="sextics",
            description="Chow rings, line-bundle cohomology and rank-2 aCM bundles on F and P2 x P2.",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        cohom = commands.add_parser("cohom", parents=[common], help="cohomology of O(a1, a2)")
        cohom.add_argument("variety", type=Variety.parse)
        cohom.add_argument("a1", type=int)
        cohom.add_argument("a2", type=int)
        cohom.add_argument("--twist-range", nargs=2, type=int, metavar=("LO", "HI"))

        regions = commands.add_parser("regions", parents=[common], help="region map of the line bundles on F")
        regions.add_argument("--bound", type=int, default=RegionPlot.DEFAULT_BOUND)
        regions.add_argument("--theme", choices=RegionTheme.MODES, default="dark")

        table = commands.add_parser("table", parents=[common], help="classification tables")
        table.add_argument("name", choices=list(TABLES))

        verify = commands.add_parser("verify", parents=[common], help="run the verification suite")
        verify.add_argument("--scope", choices=("all",) + SCOPES, default="all")

        chow = commands.add_parser("chow", parents=[common], help="normalize a Chow ring expression")
        chow.add_argument("variety", type=Variety.parse)
        chow.add_argument("expression")

        chern = commands.add_parser("chern", parents=[common], help="invariants of rank-2 Chern data")
        chern.add_argument("variety", type=Variety.parse)
        chern.add_argument("a1", type=int)
        chern.add_argument("a2", type=int)
        chern.add_argument("c2", nargs="+", type=int, help="beta on F, mu on Phi")
        return parser

    def _setup_logging(self):
        level = logging.DEBUG if self.args.verbose else logging.WARNING
        logging.basicConfig(
            level=level,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
            force=True,
        )

    def _build_view(self):
        args = self.args
        if args.command == "cohom":
            twist_range = tuple(args.twist_range) if args.twist_range else None
            return CohomView(args.variety, args.a1, args.a2, args.format, twist_range)
        if args.command == "regions":
            return RegionsView(args.bound, args.format, args.theme)
        if args.command == "table":
            return TableView(args.name, args.format)
        if args.command == "verify":
            return VerifyView(args.scope, args.format)
        if args.command == "chow":
            return ChowView(args.variety, args.expression, args.format)
        return ChernView(args.variety, args.a1, args.a2, args.c2, args.format)

    def run(self) -> int:
        try:
            view = self._build_view()
            text = view.build()
        except (SexticsError, ValueError) as e:
            logger.debug("Commande %s rejetée", self.args.command, exc_info=True)
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE

        if self.args.out:
            if not writer.export_to_file(text, self.args.out):
                print(f"error: cannot write {self.args.out}", file=sys.stderr)
                return EXIT_USAGE
        else:
            sys.stdout.write(text)

        if isinstance(view, VerifyView) and not view.passed:
            return EXIT_VERIFY_FAILED
        return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Point d'entrée de la ligne de commande."""
    try:
        app = SexticsApp(argv)
    except SystemExit as e:
        # argparse : usage (2) ou --help (0)
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    return app.run()


if __name__ == "__main__":
    sys.exit(main())
