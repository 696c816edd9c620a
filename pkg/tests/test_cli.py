"""
Tests de la ligne de commande : sorties, formats, codes de retour.
"""

import json

import pytest

from src.views.tables import TABLES


# ==========================================
# Tests de la commande cohom
# ==========================================


def test_cohom_f(cli):
    """Test h^i(O_F(-2h1 + 2h2)) = (0, 3, 0, 0)."""
    code, out, _ = cli("cohom", "F", -2, 2)
    assert code == 0
    assert json.loads(out) == {"variety": "F", "bundle": [-2, 2], "h": [0, 3, 0, 0]}


def test_cohom_phi(cli):
    """Test h^0(O_Phi(1, 1)) = 9."""
    code, out, _ = cli("cohom", "Phi", 1, 1)
    assert code == 0
    assert json.loads(out)["h"] == [9, 0, 0, 0, 0]


def test_cohom_twist_range(cli):
    """Test une plage de twists en CSV."""
    code, out, _ = cli("cohom", "F", 0, 0, "--twist-range", -1, 1, "--format", "csv")
    assert code == 0
    assert len(out.splitlines()) == 4


def test_cohom_rejects_svg(cli):
    """Test qu'un format graphique est refusé pour cohom."""
    code, _, err = cli("cohom", "F", 0, 0, "--format", "svg")
    assert code == 2
    assert err.startswith("error:")


def test_unknown_variety(cli):
    """Test qu'une variété inconnue est une erreur d'usage."""
    code, _, _ = cli("cohom", "P3", 0, 0)
    assert code == 2


# ==========================================
# Tests des commandes table et regions
# ==========================================


def test_table_section4(cli):
    """Test la table des parties divisorielles en Markdown."""
    code, out, _ = cli("table", "section4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("## ")
    assert sum(1 for line in lines if line.startswith("| F |")) == 9


def test_table_theorem_b_json(cli):
    """Test la liste finale sur F en JSON."""
    code, out, _ = cli("table", "theoremB-F", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert [e["alpha"] for e in entries] == [[0, 0], [0, 1], [1, 2], [2, 2]]
    assert entries[-1]["is_ulrich"] is True
    assert len(entries[-1]["c2"]) == 2


@pytest.mark.parametrize(
    "name",
    ["section4", "intermediateF", "intermediatePhi", "ulrichF", "embeddings", "theoremB-F", "theoremB-Phi"],
)
def test_documented_table_names(cli, name):
    """Test que chaque nom de table de la ligne de commande est accepté."""
    code, out, err = cli("table", name)
    assert code == 0, err
    assert out.startswith("## ")


def test_table_rows_cite_their_rule(cli):
    """Test qu'aucune ligne émise n'a de citation vide."""
    for name in ("section4", "intermediateF", "intermediatePhi", "ulrichF", "ulrichPhi", "embeddings", "upperBound", "alphaBox"):
        code, out, _ = cli("table", name, "--format", "json")
        assert code == 0
        for row in json.loads(out):
            assert row["status"]["citation"], f"{name}: {row}"
            assert row["status"]["anchor"], f"{name}: {row}"


def test_unknown_table(cli):
    """Test qu'une table inconnue est une erreur d'usage."""
    code, _, _ = cli("table", "nope")
    assert code == 2


def test_regions_svg(cli):
    """Test la carte des régions en SVG."""
    code, out, _ = cli("regions", "--format", "svg", "--bound", 5, "--theme", "light")
    assert code == 0
    assert "<svg" in out
    assert "x1+x2+3=0" in out


def test_regions_ascii_default(cli):
    """Test que la carte est en ASCII par défaut."""
    code, out, _ = cli("regions", "--bound", 2)
    assert code == 0
    assert out.splitlines()[0] == " 2 | 1 . 0 0 0"


def test_regions_bad_bound(cli):
    """Test qu'une borne trop grande est refusée."""
    code, _, err = cli("regions", "--bound", 500)
    assert code == 2
    assert "plot bound" in err


# ==========================================
# Tests des commandes chow et chern
# ==========================================


def test_chow(cli):
    """Test la réécriture de h1*h2."""
    code, out, _ = cli("chow", "F", "h1*h2")
    assert code == 0
    assert json.loads(out) == {
        "variety": "F",
        "terms": [{"monomial": "h1^2", "coeff": 1}, {"monomial": "h2^2", "coeff": 1}],
    }


def test_chern(cli):
    """Test les invariants du fibré d'une droite."""
    code, out, _ = cli("chern", "F", 0, 1, 1, 0)
    assert code == 0
    report = json.loads(out)
    assert report["degree"] == 1
    assert report["arithmetic_genus"] == 0
    assert report["dual_twist"]["c1"] == [2, 1]


def test_chern_wrong_arity(cli):
    """Test que c2 sur Phi demande trois coefficients."""
    code, _, err = cli("chern", "Phi", 0, 1, 1, 0)
    assert code == 2
    assert "3 coefficients" in err


# ==========================================
# Tests de verify, --out et déterminisme
# ==========================================


def test_verify_cohomology(cli):
    """Test la portée cohomologie de la vérification."""
    code, out, _ = cli("verify", "--scope", "cohomology")
    assert code == 0
    assert "- serre-duality: pass" in out
    assert out.rstrip().endswith("overall: pass")


def test_out_file(cli, tmp_path):
    """Test l'écriture dans un fichier au lieu de stdout."""
    path = tmp_path / "alpha.csv"
    code, out, _ = cli("table", "alphaBox", "--format", "csv", "--out", path)
    assert code == 0
    assert out == ""
    assert path.read_text(encoding="utf-8").startswith("alpha,status_kind")


@pytest.mark.parametrize("fmt", ["markdown", "json", "csv"])
@pytest.mark.parametrize("name", list(TABLES))
def test_deterministic_tables(cli, name, fmt):
    """Test que deux exécutions d'une table donnent exactement la même sortie."""
    first = cli("table", name, "--format", fmt)
    second = cli("table", name, "--format", fmt)
    assert first[0] == 0
    assert first == second


@pytest.mark.parametrize("fmt", ["ascii", "svg"])
def test_deterministic_regions(cli, fmt):
    """Test que la carte des régions est identique d'une exécution à l'autre."""
    first = cli("regions", "--format", fmt, "--bound", 4)
    assert first[0] == 0
    assert first == cli("regions", "--format", fmt, "--bound", 4)


def test_deterministic_verify(cli):
    """Test que deux vérifications complètes donnent le même rapport."""
    first = cli("verify")
    second = cli("verify")
    assert first[0] == 0
    assert first == second
    assert "- lemma-lvanishing-unique: pass" in first[1]
