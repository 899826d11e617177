import json
import logging

import click

logger = logging.getLogger(__name__)


@click.command("oracle-check")
@click.option("--max-mult", type=int, default=3, show_default=True)
@click.option("--tmax", "t_max", type=int, default=None, help="Defaults to the engine's window end per vector.")
@click.option("--prime", type=int, default=None)
@click.option("--seed", "seeds", type=int, multiple=True, help="Repeatable; defaults to the configured seeds.")
@click.option("--mults", default=None, help="Check one vector instead of sweeping.")
@click.pass_obj
def oracle_check(obj, max_mult, t_max, prime, seeds, mults):
    """Compare the engine with linear algebra over GF(p) at random points."""
    config = obj["config"]
    if not seeds:
        seeds = [config["SEED"] + k for k in range(config["SEED_COUNT"])]
    data = {
        "max_mult": max_mult,
        "t_max": t_max,
        "prime": config["PRIME"] if prime is None else prime,
        "seeds": list(seeds),
        "mults": mults,
    }
    logger.info(f"oracle-check {data}")
    lines, code = obj["oracle_service"].check_payload(data, config["WORKERS"])
    for line in lines:
        click.echo(json.dumps(line), err="error" in line)
    return code
