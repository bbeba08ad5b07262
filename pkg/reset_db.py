import logging
import os

import click

import config
from db import init_db, list_reports

logger = logging.getLogger(__name__)


def reset(db_path):
    """Drop the reports database file and recreate an empty schema. Returns True if a file was removed."""
    removed = os.path.exists(db_path)
    if removed:
        os.remove(db_path)
        logger.info("removed reports DB %s", db_path)
    init_db(db_path)
    return removed


@click.command()
@click.option("--db", "db_path", default=lambda: config.DB_PATH, show_default="DB_PATH", help="Reports database file.")
def main(db_path):
    if reset(db_path):
        click.echo(f"Removed existing reports DB: {db_path}")
    else:
        click.echo(f"No existing reports DB found at: {db_path}")
    click.echo(f"Initialized reports table ({len(list_reports(db_path=db_path))} rows).")


if __name__ == "__main__":
    main()
