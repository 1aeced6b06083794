"""Command-line entry points.

    carebridge load-graph <path> [--validate-only]
    carebridge serve --config <path>
    carebridge demo-session --script <chunk-log>
    carebridge report --patient <id> --month YYYY-MM [--preview]
    carebridge eval t-test|mannwhitney|sus|rubric|split ...

`eval` prints key=value lines so shell scripts can consume the numbers.
"""

from __future__ import annotations

import sys
from datetime import datetime

import click

from .errors import CarebridgeError


@click.group()
def main():
    """Diabetes care companion platform."""


@main.command("load-graph")
@click.argument("path", type=click.Path(exists=True))
@click.option("--validate-only", is_flag=True, help="parse and check, print nothing but stats")
def load_graph_cmd(path, validate_only):
    """Parse and validate a graph document."""
    from .knowledge import load_graph

    try:
        with open(path, "r", encoding="utf-8") as fh:
            graph = load_graph(fh)
    except CarebridgeError as exc:
        raise click.ClickException(str(exc))
    click.echo(f"nodes={len(graph.nodes)}")
    click.echo(f"edges={len(graph.edges)}")
    click.echo(f"version={graph.version}")
    if not validate_only:
        surfaces = sum(len(n.surface_forms) for n in graph.nodes.values())
        click.echo(f"surface_forms={surfaces}")


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True), default=None)
@click.option("--demo", is_flag=True, help="seed demo principals and a demo month")
def serve(config_path, demo):
    """Run the HTTP/WebSocket service."""
    import uvicorn

    from .service.app import build_app
    from .service.config import load_config
    from .service.platform import Platform, seed_demo_principals

    try:
        config = load_config(config_path)
        platform = Platform(config)
    except CarebridgeError as exc:
        raise click.ClickException(str(exc))
    if demo:
        from .demo import build_demo_month

        seed_demo_principals(platform)
        build_demo_month(platform.records)
        click.echo("demo data seeded (principals patient-demo/dr-demo/family-demo, password 'demo')")
    app = build_app(platform)
    uvicorn.run(app, host=config.get("server.host"), port=config.get_int("server.port"))


@main.command("demo-session")
@click.option("--script", "script_path", type=click.Path(exists=True), required=True)
def demo_session(script_path):
    """Replay a recorded chunk log and print transcript, sidebar, latency."""
    from .knowledge import fixture_graph
    from .transcripts import replay_chunk_log

    with open(script_path, "r", encoding="utf-8") as fh:
        script = fh.read()
    out = replay_chunk_log(script, fixture_graph())
    click.echo(out["transcript"], nl=False)
    latency = out["latency"]
    click.echo(f"chunks={latency['count']}")
    click.echo(f"latency_p50_ms={latency['p50']:.3f}")
    click.echo(f"latency_p100_ms={latency['p100']:.3f}")


@main.command()
@click.option("--patient", default=None, help="patient id (defaults to the demo patient)")
@click.option("--month", required=True, help="YYYY-MM")
@click.option("--preview", is_flag=True, help="allow building a still-open month")
def report(patient, month, preview):
    """Build and print a monthly report (demo dataset unless served state exists)."""
    from .demo import DEMO_PATIENT, build_demo_month, demo_knowledge_gaps, demo_utterances
    from .records import HealthRecords
    from .reporting import Period, build_monthly_report, serialize_report
    from .service.stores import MemoryStore

    period = Period.parse(month)
    records = HealthRecords(MemoryStore())
    utterances: list = []
    gaps: list = []
    if patient is None:
        patient = DEMO_PATIENT
        build_demo_month(records, period)
        utterances = demo_utterances(period)
        gaps = demo_knowledge_gaps()
    try:
        doc = build_monthly_report(
            patient, period, records,
            utterances=utterances, knowledge_gaps=gaps,
            force_preview=preview,
        )
    except CarebridgeError as exc:
        raise click.ClickException(str(exc))
    click.echo(serialize_report(doc), nl=False)


@main.group("eval")
def eval_group():
    """Study statistics (scoring, tests, SUS, rubric, split)."""


def _echo_kv(**pairs):
    for key, value in pairs.items():
        if isinstance(value, float):
            click.echo(f"{key}={value:.6g}")
        else:
            click.echo(f"{key}={value}")


@eval_group.command("t-test")
@click.option("--summary", required=True, help="m1,sd1,n1,m2,sd2,n2")
def eval_ttest(summary):
    """Welch's t-test from summary statistics."""
    from .evalstats import SummaryStats, welch_t_from_summary

    try:
        m1, sd1, n1, m2, sd2, n2 = (float(x) for x in summary.split(","))
        out = welch_t_from_summary(
            SummaryStats(m1, sd1, int(n1)), SummaryStats(m2, sd2, int(n2))
        )
    except (ValueError, CarebridgeError) as exc:
        raise click.ClickException(str(exc))
    _echo_kv(t=out["t"], df=out["df"], p_two_sided=out["p_two_sided"])


@eval_group.command("mannwhitney")
@click.option("--a", "a_csv", required=True, help="comma-separated sample A")
@click.option("--b", "b_csv", required=True, help="comma-separated sample B")
@click.option("--exact/--approx", "exact", default=None)
def eval_mannwhitney(a_csv, b_csv, exact):
    """Mann-Whitney U test (exact enumeration for small samples)."""
    from .evalstats import mann_whitney_u

    try:
        a = [float(x) for x in a_csv.split(",") if x.strip()]
        b = [float(x) for x in b_csv.split(",") if x.strip()]
        out = mann_whitney_u(a, b, exact=exact)
    except (ValueError, CarebridgeError) as exc:
        raise click.ClickException(str(exc))
    _echo_kv(U=out["U"], p_two_sided=out["p_two_sided"], method=out["method"])


@eval_group.command("sus")
@click.option("--responses", required=True, help="ten comma-separated item scores (1..5)")
def eval_sus(responses):
    """System Usability Scale score."""
    from .evalstats import sus_score

    try:
        items = [float(x) for x in responses.split(",")]
        score = sus_score(items)
    except (ValueError, CarebridgeError) as exc:
        raise click.ClickException(str(exc))
    _echo_kv(sus=score)


@eval_group.command("rubric")
@click.option("--scores", required=True, help="accuracy,relevance,readability,user_friendliness")
def eval_rubric(scores):
    """Weighted physician rubric."""
    from .evalstats import rubric_score

    try:
        a, r, d, u = (float(x) for x in scores.split(","))
        score = rubric_score(a, r, d, u)
    except (ValueError, CarebridgeError) as exc:
        raise click.ClickException(str(exc))
    _echo_kv(rubric=score)


@eval_group.command("split")
@click.option("--scores", required=True, help="comma-separated knowledge-test scores")
@click.option("--groups", "k", default=2, show_default=True)
def eval_split(scores, k):
    """Balanced serpentine group split."""
    from .evalstats import balanced_split

    try:
        values = [float(x) for x in scores.split(",")]
        result = balanced_split(values, k)
    except (ValueError, CarebridgeError) as exc:
        raise click.ClickException(str(exc))
    _echo_kv(assignment=",".join(str(g) for g in result.assignment))
    for i, mean in enumerate(result.means):
        _echo_kv(**{f"group{i}_mean": mean, f"group{i}_size": len(result.groups[i])})


if __name__ == "__main__":
    sys.exit(main())
