import logging

import click

from controllers.output import emit, format_option
from models.divisor import DivisorClass

logger = logging.getLogger(__name__)

CLASS_ARGS = {"ignore_unknown_options": True}


def divisor_data(values):
    """``d m1 ... m8`` (possibly negative, possibly one quoted string) as schema input."""
    F = DivisorClass.parse(" ".join(values))
    return {"d": F.d, "m": list(F.m)}


def class_argument(f):
    return click.argument("values", nargs=-1, type=click.UNPROCESSED)(f)


def _cohomology(obj, values, fmt, which):
    data = divisor_data(values)
    logger.info(f"{which} {data}")
    payload, code = obj["cohomology_service"].cohomology_payload(data)

    def render(report):
        line = f"{which}({report['class']}) = {report[which]}"
        special = report.get("special")
        if which == "h1" and special:
            line += f"\nF = {special['r']}H + K with H = {special['curve']}"
        return line

    emit(payload, fmt, render)
    return code


@click.command(context_settings=CLASS_ARGS)
@class_argument
@format_option
@click.pass_obj
def h0(obj, values, fmt):
    """Dimension of H0 for the class d m1 ... m8."""
    return _cohomology(obj, values, fmt, "h0")


@click.command(context_settings=CLASS_ARGS)
@class_argument
@format_option
@click.pass_obj
def h1(obj, values, fmt):
    """Dimension of H1, with the F = rH + K decomposition when it is nonzero."""
    return _cohomology(obj, values, fmt, "h1")


@click.command(context_settings=CLASS_ARGS)
@class_argument
@format_option
@click.pass_obj
def h2(obj, values, fmt):
    return _cohomology(obj, values, fmt, "h2")


def render_mu(report):
    lines = [f"ker = {report['ker']}, cok = {report['cok']}"]
    for event in report["trace"]:
        line = f"  {event['case']:<20} {event['class']}  h0={event['h0']} h0(F+L)={event['h0_next']} ker={event['ker']} cok={event['cok']}"
        if event["curve"] is not None:
            line += f" C={event['curve']}"
        if event["r"] is not None:
            line += f" r={event['r']}"
        lines.append(line)
    return "\n".join(lines)


@click.command(context_settings=CLASS_ARGS)
@class_argument
@format_option
@click.pass_obj
def mu(obj, values, fmt):
    """Kernel and cokernel of H0(F) x H0(L) -> H0(F + L), with the dispatch trace."""
    data = divisor_data(values)
    logger.info(f"mu {data}")
    payload, code = obj["mu_rank_service"].mu_payload(data)
    emit(payload, fmt, render_mu)
    return code


@click.command(context_settings=CLASS_ARGS)
@class_argument
@format_option
@click.pass_obj
def ql(obj, values, fmt):
    """q, l, q*, l* of a monotone class."""
    data = divisor_data(values)
    payload, code = obj["mu_rank_service"].ql_payload(data)
    emit(payload, fmt, lambda r: f"q={r['q']} l={r['l']} q*={r['q_star']} l*={r['l_star']}")
    return code


def render_curves(table):
    rows = [f"{c['class']}\t{c['lambda']}\t{c['Lambda']}" for c in table["curves"]]
    return "\n".join(rows + [f"# count: {table['count']}"])


@click.command()
@click.option("--kind", type=click.Choice(["exceptional", "square-zero"]), default="exceptional", show_default=True)
@format_option
@click.pass_obj
def curves(obj, kind, fmt):
    """Dump the exceptional or square-zero curve table."""
    payload, code = obj["divisor_service"].curves_payload(kind)
    emit(payload, fmt, render_curves)
    return code


def render_cone(payload):
    if "generators" in payload:
        return "\n".join(f"{g['d']} {g['a']} {g['b']}" for g in payload["generators"])
    if "coefficients" in payload:
        coeffs = payload["coefficients"]
        return "none" if coeffs is None else " ".join(str(c) for c in coeffs)
    return "true" if payload["contains"] else "false"


@click.command()
@click.option("--list", "show_list", is_flag=True, help="Print the seven generators.")
@click.option("--contains", "contains", nargs=3, type=int, help="Test membership of d a b.")
@click.option("--decompose", "decompose", nargs=3, type=int, help="Write d a b in the generators.")
@format_option
@click.pass_obj
def cone(obj, show_list, contains, decompose, fmt):
    """The cone of monotone nef classes dL - a(E1 + ... + E7) - bE8."""
    chosen = [flag for flag in (show_list, bool(contains), bool(decompose)) if flag]
    if len(chosen) > 1:
        raise click.UsageError("--list, --contains and --decompose are exclusive")
    service = obj["divisor_service"]
    triple = contains or decompose
    if triple:
        payload, code = service.cone_payload(dict(zip("dab", triple)), decompose=bool(decompose))
    else:
        payload, code = service.cone_payload()
    emit(payload, fmt, render_cone)
    return code
