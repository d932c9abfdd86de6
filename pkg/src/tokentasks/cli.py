"""Command-line interface: generate, run, score, report.

Configuration is a plain key = value text file; every relative path in it
resolves against --root. Exit codes: 0 success, 1 validation failure,
2 partial run with errors.
"""

from __future__ import annotations

import csv
import json
import time
from dataclasses import replace
from pathlib import Path

import click

from . import figures, gen_struct, gen_token, pipeline, report
from .harness import (AuthError, GenerationParams, ModelEndpoint, read_run_records,
                      run_batch)
from .instances import TASKS, GenerationError, GenSpec, write_instances
from .lang import KO, LANGUAGES
from .resources import DEFAULT_RESOURCE_NAMES, ResourceError, load_bundle, sha256_file

EXIT_VALIDATION = 1
EXIT_PARTIAL = 2


def parse_config(path: Path | None, root: Path) -> dict:
    """key = value lines; resource keys resolve to paths under root."""
    config: dict[str, str] = {}
    if path is not None:
        for i, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise click.ClickException(f"{path}:{i}: expected 'key = value', got {line!r}")
            key, value = line.split("=", 1)
            config[key.strip()] = value.strip()
    cap_keys = {f"cap_{task}" for task in TASKS}
    known = set(DEFAULT_RESOURCE_NAMES) | cap_keys | {"seed", "outdir", "ridl_distribution"}
    unknown = set(config) - known
    if unknown:
        raise click.ClickException(
            f"unknown config keys: {', '.join(sorted(unknown))} "
            f"(known: {', '.join(sorted(known))})")
    config.setdefault("seed", "0")
    config.setdefault("outdir", "dataset")
    resolved: dict = {"seed": int(config["seed"]),
                      "outdir": (root / config["outdir"]).resolve()}
    resource_paths = {}
    for key in DEFAULT_RESOURCE_NAMES:
        if key in config:
            resource_paths[key] = (root / config[key]).resolve()
    resolved["resources"] = resource_paths
    if "ridl_distribution" in config:
        dist = {}
        for part in config["ridl_distribution"].split(","):
            length, count = part.split(":")
            dist[int(length)] = int(count)
        resolved["ridl_distribution"] = dist
    else:
        resolved["ridl_distribution"] = dict(gen_struct.DEFAULT_RIDL_DISTRIBUTION)
    caps = {}
    for key in cap_keys & set(config):
        task = key.split("_", 1)[1]
        cap = int(config[key])
        if cap < 1:
            raise click.ClickException(f"{key} must be a positive instance count")
        caps[task] = cap
    resolved["caps"] = caps
    return resolved


def load_validated_bundle(resource_paths: dict):
    """Load every resource, collecting all validation failures before exit."""
    problems = []
    for key, path in resource_paths.items():
        if not Path(path).exists():
            problems.append(f"{key}: missing file {path}")
    if not problems:
        try:
            return load_bundle(resource_paths or None)
        except ResourceError as exc:
            problems.append(str(exc))
        except OSError as exc:
            problems.append(str(exc))
        # retry one-by-one to report every broken resource at once
        for key, path in resource_paths.items():
            try:
                load_bundle({key: path})
            except (ResourceError, OSError) as exc:
                message = str(exc)
                if message not in problems:
                    problems.append(f"{key}: {message}")
    for problem in problems:
        click.echo(f"resource validation: {problem}", err=True)
    raise SystemExit(EXIT_VALIDATION)


@click.group()
@click.option("--root", type=click.Path(path_type=Path), default=Path("."),
              help="Base directory for all relative paths.")
@click.option("--config", "config_path", type=click.Path(path_type=Path, exists=True),
              default=None, help="key = value configuration file.")
@click.pass_context
def main(ctx, root: Path, config_path: Path | None):
    """Multilingual token-task engine: data generation, runs, scoring, reports."""
    ctx.ensure_object(dict)
    ctx.obj["root"] = root
    ctx.obj["config"] = parse_config(config_path, root)


def _parse_filter(value: str | None, universe: tuple[str, ...], kind: str) -> list[str]:
    if not value:
        return list(universe)
    chosen = [v.strip() for v in value.split(",") if v.strip()]
    unknown = [v for v in chosen if v not in universe]
    if unknown:
        raise click.ClickException(f"unknown {kind}: {', '.join(unknown)}")
    return chosen


def generate_task(task: str, spec: GenSpec, bundle, ridl_distribution, cap: int | None = None):
    """One (task, language) instance list; cap overrides the default scale.

    For length-bucketed tasks the cap must be a multiple of the number of
    target lengths; it applies per sub-variant for the two-variant tasks
    and clamps the inventory prefix for the bitmap task.
    """
    lang = spec.language
    corpus = bundle.corpora[lang]
    if cap is not None and task in ("freq", "lenop", "diff", "sort", "reord"):
        buckets = 10 if task == "freq" else len(spec.lengths())
        if cap % buckets:
            raise GenerationError(f"cap_{task}={cap} must be a multiple of {buckets}")
        if task == "freq":
            spec = replace(spec, per_count_cap=cap // buckets)
        else:
            spec = replace(spec, per_length_cap=cap // buckets)
    if task == "freq":
        return gen_token.gen_freq(spec, corpus)
    if task == "lenop":
        return gen_token.gen_lenop(spec, corpus, bundle.topics)
    if task == "diff":
        return gen_token.gen_diff(spec, corpus)
    if task == "sort":
        return gen_token.gen_sort(spec, corpus)
    if task == "reord":
        return gen_token.gen_reord(spec, corpus)
    if task == "compc":
        return gen_struct.gen_compc(spec, corpus, bundle.components_zh,
                                    **({"total": cap} if cap else {}))
    if task == "compm":
        return gen_struct.gen_compm(spec, corpus, bundle.components_zh,
                                    **({"total_per_variant": cap} if cap else {}))
    if task == "dot":
        inventory = bundle.inventory
        if cap is not None and cap < len(inventory):
            inventory = dict(list(inventory.items())[:cap])
        return gen_struct.gen_dot(spec, bundle.fonts, inventory)
    if task == "ridl":
        if lang == KO:
            distribution = ridl_distribution
            if cap is not None:
                distribution = dict(distribution or gen_struct.DEFAULT_RIDL_DISTRIBUTION)
                total = sum(distribution.values())
                if cap != total:
                    raise GenerationError(
                        f"cap_ridl={cap} conflicts with the length distribution "
                        f"(sums to {total}); adjust ridl_distribution instead")
            return gen_struct.gen_ridl_ko(spec, bundle.riddles_ko, distribution)
        return gen_struct.gen_ridl_external(spec, bundle.external_riddles[lang],
                                            **({"total": cap} if cap else {}))
    if task == "var":
        return gen_struct.gen_var(spec, bundle.variants, corpus,
                                  **({"total": cap} if cap else {}))
    raise click.ClickException(f"unknown task {task!r}")


@main.command()
@click.option("--tasks", default=None, help="Comma-separated task filter.")
@click.option("--langs", default=None, help="Comma-separated language filter.")
@click.option("--seed", type=int, default=None, help="Override the config seed.")
@click.option("--out", "out_dir", type=click.Path(path_type=Path), default=None,
              help="Output directory (default: config outdir).")
@click.pass_context
def generate(ctx, tasks, langs, seed, out_dir):
    """Generate dataset files, one JSONL per (task, language)."""
    config = ctx.obj["config"]
    bundle = load_validated_bundle(config["resources"])
    task_list = _parse_filter(tasks, TASKS, "tasks")
    lang_list = _parse_filter(langs, LANGUAGES, "languages")
    seed = config["seed"] if seed is None else seed
    out_dir = Path(out_dir) if out_dir else config["outdir"]
    out_dir.mkdir(parents=True, exist_ok=True)

    manifest = {
        "seed": seed,
        "created_unix": int(time.time()),
        "resources": bundle.checksums(),
        "files": {},
    }
    total = 0
    for task in task_list:
        for lang in lang_list:
            spec = GenSpec(language=lang, seed=seed)
            try:
                instances = generate_task(task, spec, bundle, config["ridl_distribution"],
                                          cap=config.get("caps", {}).get(task))
            except GenerationError as exc:
                click.echo(f"generation failed for {task}/{lang}: {exc}", err=True)
                raise SystemExit(EXIT_VALIDATION)
            path = out_dir / f"{task}_{lang}.jsonl"
            count = write_instances(path, instances)
            manifest["files"][path.name] = {"count": count, "sha256": sha256_file(path)}
            total += count
            click.echo(f"wrote {path} ({count} instances)")
    manifest["total_instances"] = total
    manifest_path = out_dir / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n",
                             encoding="utf-8")
    click.echo(f"wrote {manifest_path} (total {total})")


@main.command()
@click.option("--dataset", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--tasks", default=None)
@click.option("--langs", default=None)
@click.option("--out", "out_path", type=click.Path(path_type=Path), required=True)
@click.option("--base-url", required=True, help="Chat-completions endpoint base URL.")
@click.option("--model", required=True)
@click.option("--auth-env", default="MODEL_API_KEY", show_default=True,
              help="Environment variable holding the bearer token.")
@click.option("--concurrency", type=int, default=4, show_default=True)
@click.option("--timeout", "timeout_s", type=float, default=300.0, show_default=True)
@click.option("--retries", type=int, default=4, show_default=True)
@click.option("--cot", is_flag=True, help="Use the step-by-step instruction suffix.")
@click.option("--retry-errors", is_flag=True, help="Reattempt instances whose record errored.")
@click.option("--temperature", type=float, default=0.7, show_default=True)
@click.option("--max-tokens", type=int, default=16384, show_default=True)
@click.option("--top-p", type=float, default=0.95, show_default=True)
@click.option("--top-k", type=int, default=50, show_default=True)
@click.pass_context
def run(ctx, dataset, tasks, langs, out_path, base_url, model, auth_env, concurrency,
        timeout_s, retries, cot, retry_errors, temperature, max_tokens, top_p, top_k):
    """Send every dataset instance to a model endpoint, resumably."""
    task_list = _parse_filter(tasks, TASKS, "tasks")
    lang_list = _parse_filter(langs, LANGUAGES, "languages")
    paths = [p for p in pipeline.dataset_paths(dataset, task_list, lang_list) if p.exists()]
    if not paths:
        raise click.ClickException(f"no dataset files under {dataset}")
    instances = pipeline.load_dataset(paths)
    endpoint = ModelEndpoint(base_url=base_url, model=model, auth_env=auth_env,
                             timeout_s=timeout_s, max_retries=retries,
                             concurrency=concurrency)
    params = GenerationParams(temperature=temperature, max_tokens=max_tokens,
                              top_p=top_p, top_k=top_k)
    done = {"n": 0, "errors": 0}

    def progress(record):
        done["n"] += 1
        if record.error:
            done["errors"] += 1
        if done["n"] % 50 == 0:
            click.echo(f"  {done['n']} records ({done['errors']} errors)")

    try:
        run_batch(instances.values(), endpoint, params, out_path, cot=cot,
                  retry_errors=retry_errors, progress=progress)
    except AuthError as exc:
        click.echo(f"auth failure: {exc}", err=True)
        raise SystemExit(EXIT_VALIDATION)
    records = read_run_records(out_path)
    errors = sum(1 for r in records if r.get("error"))
    remaining = len(instances) - len(records)
    click.echo(f"run file: {len(records)} records, {errors} errors, {remaining} remaining")
    if errors:
        raise SystemExit(EXIT_PARTIAL)


def _print_summary(summary: dict) -> None:
    click.echo(f"overall: {summary['correct']}/{summary['n']} "
               f"({100 * summary['accuracy']:.2f}%)  "
               f"task-average: {100 * summary['task_average']:.2f}%")
    click.echo("task/language accuracy (%):")
    header = ["task"] + list(LANGUAGES)
    click.echo("  " + "  ".join(f"{h:>8}" for h in header))
    for task in TASKS:
        cells = [f"{task:>8}"]
        for lang in LANGUAGES:
            stats = summary["by_task_language"].get(f"{task}:{lang}")
            cells.append(f"{100 * stats['accuracy']:8.2f}" if stats else f"{'-':>8}")
        if any(c.strip() != "-" for c in cells[1:]):
            click.echo("  " + "  ".join(cells))
    if summary["unmatched_run_ids"]:
        click.echo(f"warning: {len(summary['unmatched_run_ids'])} run records "
                   f"did not match any instance", err=True)


@main.command()
@click.option("--dataset", type=click.Path(path_type=Path, exists=True), required=True)
@click.option("--run", "run_path", type=click.Path(path_type=Path), default=None,
              help="Run file to score (omit with --self-test).")
@click.option("--mode", type=click.Choice(["score", "reward-coarse", "reward-fine"]),
              default="score", show_default=True)
@click.option("--self-test", is_flag=True,
              help="Score the dataset against its own stored witness answers.")
@click.option("--model", default="", help="Model name recorded in the summary.")
@click.option("--out-dir", type=click.Path(path_type=Path), required=True)
@click.pass_context
def score(ctx, dataset, run_path, mode, self_test, model, out_dir):
    """Score a run file (or the dataset against itself) and summarize."""
    paths = [p for p in pipeline.dataset_paths(dataset) if p.exists()]
    instances = pipeline.load_dataset(paths)
    if self_test:
        run_records = [{"instance_id": inst.id,
                        "raw_output": pipeline.self_test_output(inst)}
                       for inst in instances.values()]
        model = model or "self-test"
    else:
        if run_path is None:
            raise click.ClickException("--run is required unless --self-test is set")
        run_records = read_run_records(run_path)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    if mode == "score":
        rows, unmatched = pipeline.score_run(instances, run_records)
        summary = pipeline.summarize(instances, rows, model=model,
                                     run_records=run_records, unmatched=unmatched)
        pipeline.write_jsonl(out_dir / "outcomes.jsonl", rows)
        (out_dir / "summary.json").write_text(
            json.dumps(summary, ensure_ascii=False, indent=2, sort_keys=True) + "\n",
            encoding="utf-8")
        _print_summary(summary)
        click.echo(f"wrote {out_dir / 'outcomes.jsonl'} and {out_dir / 'summary.json'}")
    else:
        reward_mode = mode.split("-", 1)[1]
        rows, unmatched = pipeline.reward_run(reward_mode, instances, run_records)
        pipeline.write_jsonl(out_dir / f"rewards_{reward_mode}.jsonl", rows)
        if rows:
            mean = sum(r["reward"] for r in rows) / len(rows)
            click.echo(f"{len(rows)} rewards ({reward_mode}), mean {mean:.4f}")
        if unmatched:
            click.echo(f"warning: {len(unmatched)} unmatched run ids", err=True)


def _advantage_rows(summaries: list[dict]) -> list[dict]:
    rows = []
    for summary in summaries:
        langs = summary["by_language"]
        if not all(lang in langs for lang in LANGUAGES):
            continue
        adv = report.language_advantage(
            a_en=100 * langs["en"]["accuracy"],
            a_zh=100 * langs["zh"]["accuracy"],
            a_ko=100 * langs["ko"]["accuracy"],
        )
        rows.append({
            "model": summary.get("model", ""),
            "a_en": adv.a_en, "a_zh": adv.a_zh, "a_ko": adv.a_ko,
            "ea": adv.ea, "ca": adv.ca, "ka": adv.ka,
            "uniformity": report.uniformity(adv.a_en, adv.a_zh, adv.a_ko),
        })
    return rows


@main.command(name="report")
@click.argument("summaries", nargs=-1, required=True,
                type=click.Path(path_type=Path, exists=True))
@click.option("--out-dir", type=click.Path(path_type=Path), required=True)
@click.option("--bucket-width", type=int, default=10, show_default=True)
@click.option("--smooth-window", type=int, default=5, show_default=True)
@click.option("--plots/--no-plots", default=True, show_default=True,
              help="Render SVG figures next to the CSV tables.")
@click.option("--validity", nargs=3, default=None,
              type=click.Path(path_type=Path, exists=True),
              metavar="DATASET FULL_OUTCOMES SAMPLE_OUTCOMES",
              help="Also compare a sampled outcome file against a full one.")
@click.pass_context
def report_cmd(ctx, summaries, out_dir, bucket_width, smooth_window, plots, validity):
    """Aggregate score summaries into the analysis bundle."""
    loaded = [json.loads(Path(p).read_text(encoding="utf-8")) for p in summaries]
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []

    if validity is not None:
        dataset_dir, full_path, sample_path = validity
        instances = pipeline.load_dataset(
            [p for p in pipeline.dataset_paths(dataset_dir) if p.exists()])

        def per_task(path):
            vectors: dict[str, list[float]] = {}
            for row in pipeline.read_jsonl(path):
                inst = instances.get(row["instance_id"])
                if inst is not None:
                    vectors.setdefault(inst.task, []).append(float(row["correct"]))
            return vectors

        validity_result = report.sample_validity(per_task(full_path),
                                                 per_task(sample_path))
        validity_path = out_dir / "sample_validity.json"
        validity_path.write_text(json.dumps(validity_result, indent=2, sort_keys=True)
                                 + "\n", encoding="utf-8")
        written.append(validity_path)
        click.echo(f"sample validity: mae={validity_result['mae']:.4f} "
                   f"pearson_r={validity_result['pearson_r']}")

    # accuracy matrix: model x task (%)
    matrix_path = out_dir / "accuracy_matrix.csv"
    with open(matrix_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["model", *TASKS, "avg"])
        for summary in loaded:
            cells = [summary.get("model", "")]
            accs = []
            for task in TASKS:
                stats = summary["by_task"].get(task)
                cells.append(f"{100 * stats['accuracy']:.2f}" if stats else "")
                if stats:
                    accs.append(stats["accuracy"])
            cells.append(f"{100 * report.overall_average(accs):.2f}" if accs else "")
            writer.writerow(cells)
    written.append(matrix_path)

    advantage_rows = _advantage_rows(loaded)
    advantage_path = out_dir / "language_advantage.csv"
    with open(advantage_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["model", "a_zh", "a_en", "a_ko", "ea", "ca", "ka"])
        for row in advantage_rows:
            writer.writerow([row["model"]] + [f"{row[k]:.3f}"
                                              for k in ("a_zh", "a_en", "a_ko",
                                                        "ea", "ca", "ka")])
    written.append(advantage_path)

    uniformity_path = out_dir / "uniformity.csv"
    with open(uniformity_path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["model", "uniformity_std"])
        for row in sorted(advantage_rows, key=lambda r: r["uniformity"]):
            writer.writerow([row["model"], f"{row['uniformity']:.3f}"])
    written.append(uniformity_path)

    # length curves per lenop variant
    curve_series: dict[str, dict[str, dict[str, list]]] = {}
    for variant in ("recognition", "generation"):
        series = {}
        for summary in loaded:
            points = [(p[0], bool(p[1])) for p in summary.get("lenop_points", [])
                      if p[2] == variant]
            if not points:
                continue
            buckets, smoothed = report.length_curves(points, bucket_width, smooth_window)
            series[summary.get("model", "")] = {
                "starts": [b.start for b in buckets],
                "n": [b.n for b in buckets],
                "accuracy": [b.accuracy for b in buckets],
                "smoothed": smoothed,
            }
        curve_series[variant] = series
        if not series:
            continue
        curve_path = out_dir / f"length_curve_{variant}.csv"
        with open(curve_path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["model", "bucket_start", "n", "accuracy", "smoothed"])
            for model, data in series.items():
                for start, n, acc, smooth in zip(data["starts"], data["n"],
                                                 data["accuracy"], data["smoothed"]):
                    writer.writerow([model, start, n, f"{acc:.4f}", f"{smooth:.4f}"])
        written.append(curve_path)

    # output-length correlation over models that carry a mean length
    corr_points = [(s.get("model", ""), s["mean_output_chars"], s["accuracy"])
                   for s in loaded if s.get("mean_output_chars")]
    r_value = None
    if len(corr_points) >= 2:
        r_value = report.length_accuracy_correlation(
            [(p[1], p[2]) for p in corr_points])

    bundle = {
        "models": [s.get("model", "") for s in loaded],
        "advantage": advantage_rows,
        "length_accuracy_pearson_r": r_value,
        "correlation_points": [
            {"model": m, "mean_output_chars": x, "accuracy": y}
            for m, x, y in corr_points],
    }
    report_path = out_dir / "report.json"
    report_path.write_text(json.dumps(bundle, ensure_ascii=False, indent=2,
                                      sort_keys=True) + "\n", encoding="utf-8")
    written.append(report_path)

    if plots:
        written.append(figures.save_task_accuracy_bars(loaded, out_dir / "accuracy.svg"))
        if advantage_rows:
            written.append(figures.save_language_advantage_bars(
                advantage_rows, out_dir / "language_advantage.svg"))
        for variant, series in curve_series.items():
            if series:
                written.append(figures.save_length_curves(
                    series, out_dir / f"length_curve_{variant}.svg", variant))
        if len(corr_points) >= 2:
            written.append(figures.save_length_accuracy_scatter(
                corr_points, r_value, out_dir / "length_vs_accuracy.svg"))

    for path in written:
        click.echo(f"wrote {path}")


if __name__ == "__main__":
    main()
