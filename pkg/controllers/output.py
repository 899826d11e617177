import json

import click


def emit(payload, fmt, render=None):
    if "error" in payload:
        click.echo(json.dumps(payload), err=True)
    elif fmt == "json" or render is None:
        click.echo(json.dumps(payload))
    else:
        click.echo(render(payload))


def pairs(mapping):
    return " ".join(f"{t}:{v}" for t, v in mapping.items()) or "-"


format_option = click.option(
    "--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True
)
