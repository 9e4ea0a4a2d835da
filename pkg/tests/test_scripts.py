import json
from pathlib import Path

from scripts.check_imports import check_layering
from scripts.export_axioms import export_axioms
from src.core.logging import setup_logging

ROOT = Path(__file__).resolve().parent.parent


def test_calculus_does_not_import_outer_layers():
    assert check_layering(str(ROOT / "src" / "calculus")) == []


def test_export_axioms(runner, tmp_path):
    result = runner.invoke(
        export_axioms, ["--theory", "SMC", "--theory", "ReMon", "--out", str(tmp_path), "--ascii"]
    )
    setup_logging()
    assert result.exit_code == 0
    smc = json.loads((tmp_path / "SMC.json").read_text(encoding="utf-8"))
    assert smc["count"] == 22
    assert (tmp_path / "ReMon.json").exists()
    assert not (tmp_path / "RMC.json").exists()
