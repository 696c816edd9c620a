import pytest

from main import main
from src.algebra.chern import RiemannRoch
from src.algebra.chow_ring import Variety, chow_ring, hyperplane


@pytest.fixture
def ring_f():
    """Anneau de Chow de F (partagé, construit une seule fois)."""
    return chow_ring(Variety.F)


@pytest.fixture
def ring_phi():
    """Anneau de Chow de Phi = P2 x P2."""
    return chow_ring(Variety.PHI)


@pytest.fixture
def h():
    """Classe hyperplane h = h1 + h2 sur F."""
    return hyperplane(Variety.F)


@pytest.fixture
def eta():
    """Classe hyperplane eta = eta1 + eta2 sur Phi."""
    return hyperplane(Variety.PHI)


@pytest.fixture
def flipped_rr(monkeypatch):
    """Riemann-Roch avec le signe opposé devant le terme quadratique."""
    monkeypatch.setattr(RiemannRoch, "QUADRATIC_SIGN", -1)
    yield RiemannRoch


@pytest.fixture
def cli(capsys):
    """Lance la ligne de commande et renvoie (code, stdout, stderr)."""

    def run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return run
