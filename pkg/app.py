import json
import logging
import os
import sys

import click
from dotenv import load_dotenv
from marshmallow import ValidationError

from controllers.divisor_controller import cone, curves, h0, h1, h2, mu, ql
from controllers.oracle_controller import oracle_check
from controllers.resolution_controller import hilbert, resolve
from models.errors import InvariantViolation
from services.cohomology_service import CohomologyService
from services.divisor_service import DivisorService
from services.mu_rank_service import MuRankService
from services.oracle_service import EngineAdapter, OracleService
from services.resolution_service import ResolutionService

logger = logging.getLogger(__name__)


def load_config():
    load_dotenv()
    return {
        "LOG_LEVEL": os.environ.get("LOG_LEVEL", "WARNING").upper(),
        "LOG_FILE": os.environ.get("LOG_FILE"),
        "PRIME": int(os.environ.get("FATPOINTS_PRIME", 1_000_003)),
        "SEED": int(os.environ.get("FATPOINTS_SEED", 20011)),
        "SEED_COUNT": int(os.environ.get("FATPOINTS_SEED_COUNT", 2)),
        "WORKERS": int(os.environ.get("FATPOINTS_WORKERS", 4)),
    }


def create_app(config=None):
    config = config or load_config()

    handlers = [logging.StreamHandler(sys.stderr)]
    if config["LOG_FILE"]:
        handlers.append(logging.FileHandler(config["LOG_FILE"]))
    logging.basicConfig(
        level=getattr(logging, config["LOG_LEVEL"], logging.WARNING),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=handlers,
    )

    cohomology_service = CohomologyService()
    mu_rank_service = MuRankService(cohomology_service)
    resolution_service = ResolutionService(mu_rank_service)
    services = {
        "config": config,
        "cohomology_service": cohomology_service,
        "mu_rank_service": mu_rank_service,
        "resolution_service": resolution_service,
        "divisor_service": DivisorService(cohomology_service.repository),
        "oracle_service": OracleService(EngineAdapter(resolution_service), prime=config["PRIME"]),
    }

    @click.group()
    @click.pass_context
    def app(ctx):
        """Hilbert functions and resolutions of fat points at up to 8 general points of the plane."""
        ctx.obj = services

    for command in (resolve, hilbert, h0, h1, h2, mu, ql, curves, cone, oracle_check):
        app.add_command(command)
    return app


def run(argv=None, config=None):
    """Run one command and map the outcome to an exit code."""
    app = create_app(config)
    try:
        code = app.main(args=argv, prog_name="fatpoints", standalone_mode=False)
        return code if isinstance(code, int) else 0
    except ValidationError as err:
        click.echo(json.dumps({"error": err.messages}), err=True)
        return 1
    except click.ClickException as err:
        err.show()
        return 1
    except click.Abort:
        return 1
    except InvariantViolation as err:
        logger.error(f"Invariant violated: {err}", exc_info=True)
        return 2
    except Exception as err:
        logger.error(f"Unhandled exception: {err}", exc_info=True)
        return 2


if __name__ == "__main__":
    sys.exit(run())
