import json
import logging

import click

from controllers.output import emit, format_option, pairs
from repositories.batch_repository import BatchRepository

logger = logging.getLogger(__name__)


def render_resolution(payload):
    lines = [
        f"mults: {' '.join(str(m) for m in payload['mults'])}",
        f"alpha: {payload['alpha']}",
        f"generators: {pairs(payload['generators'])}",
        f"syzygies: {pairs(payload['syzygies'])}",
    ]
    if "expected" in payload:
        lines.append(f"expected generators: {pairs(payload['expected'])}")
    return "\n".join(lines)


def render_hilbert(payload):
    return "\n".join(f"{t} {h}" for t, h in payload["hilbert"])


@click.command()
@click.argument("mults", required=False)
@click.option("--batch", "batch_path", type=click.Path(exists=True, dir_okay=False), help="CSV file, one vector per line.")
@click.option("--expected", is_flag=True, help="Also show generator counts predicted by maximal rank.")
@format_option
@click.pass_obj
def resolve(obj, mults, batch_path, expected, fmt):
    """Minimal free resolution of the fat point ideal m1 p1 + ... + mk pk."""
    service = obj["resolution_service"]
    if (mults is None) == (batch_path is None):
        raise click.UsageError("give either MULTS or --batch")
    if batch_path is not None:
        logger.info(f"resolve --batch {batch_path}")
        rows = BatchRepository(batch_path).get_all()
        code = 0
        for payload, status in service.resolve_batch(rows, obj["config"]["WORKERS"]):
            click.echo(json.dumps(payload))
            code = max(code, status)
        return code
    logger.info(f"resolve {mults}")
    payload, code = service.resolve_payload({"mults": mults}, expected=expected)
    emit(payload, fmt, render_resolution)
    return code


@click.command()
@click.argument("mults")
@click.option("--from", "start", type=int, default=0, show_default=True)
@click.option("--to", "stop", type=int, required=True)
@format_option
@click.pass_obj
def hilbert(obj, mults, start, stop, fmt):
    """Hilbert function h_Z(t) for t in [--from, --to]."""
    logger.info(f"hilbert {mults} --from {start} --to {stop}")
    payload, code = obj["resolution_service"].hilbert_payload({"mults": mults}, start, stop)
    emit(payload, fmt, render_hilbert)
    return code
