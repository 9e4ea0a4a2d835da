"""Write the axiom catalog of one or all theories as JSON files."""
from pathlib import Path

import click
from loguru import logger

from src.calculus.theories import Theory
from src.core.logging import setup_logging
from src.schemas.theories import AxiomCatalog


@click.command()
@click.option("--theory", "theories", multiple=True,
              type=click.Choice([t.value for t in Theory]),
              help="Theory to export; repeat for several. Default: all.")
@click.option("--out", "out_dir", default="docs/axioms", show_default=True,
              type=click.Path(file_okay=False))
@click.option("--ascii", "ascii_", is_flag=True)
def export_axioms(theories, out_dir, ascii_):
    setup_logging()
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name in theories or [t.value for t in Theory]:
        catalog = AxiomCatalog.for_theory(Theory(name), ascii_)
        path = out / f"{name}.json"
        path.write_text(catalog.model_dump_json(indent=2), encoding="utf-8")
        logger.info(f"Wrote {catalog.count} schemata to {path}")


if __name__ == "__main__":
    export_axioms()
