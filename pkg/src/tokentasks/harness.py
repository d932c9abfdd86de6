"""Benchmark run execution against chat-completions endpoints.

Builds prompts (standard or step-by-step), issues bounded-concurrency
requests with exponential backoff, appends durable JSONL records as
results arrive, and resumes interrupted runs by skipping instance ids
that already have a terminal record.
"""

from __future__ import annotations

import json
import logging
import os
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import requests

from .instances import TaskInstance

log = logging.getLogger(__name__)

STANDARD_SUFFIX = "You need to put the final result inside <answer> </answer>."
COT_SUFFIX = ("Let's think step by step and after that you need to put the final "
              "result inside <answer> </answer>.")


@dataclass(frozen=True)
class GenerationParams:
    temperature: float = 0.7
    max_tokens: int = 16384
    top_p: float = 0.95
    top_k: int = 50


@dataclass
class ModelEndpoint:
    base_url: str
    model: str
    auth_env: str = "MODEL_API_KEY"
    timeout_s: float = 300.0
    max_retries: int = 4
    backoff_s: float = 1.0
    concurrency: int = 4

    def __post_init__(self):
        if self.concurrency < 1:
            raise ValueError("concurrency limit must be >= 1")
        if self.max_retries < 0:
            raise ValueError("retries must be bounded and non-negative")

    def auth_token(self) -> str:
        token = os.environ.get(self.auth_env, "")
        if not token:
            raise AuthError(f"auth token environment variable {self.auth_env!r} is not set; "
                            f"export it before running")
        return token


class AuthError(RuntimeError):
    """Missing or rejected credentials; aborts the run."""


@dataclass
class RunRecord:
    instance_id: str
    prompt: str
    raw_output: str = ""
    latency_ms: float = 0.0
    output_chars: int = 0
    attempts: int = 0
    error: str | None = None

    def to_json(self) -> str:
        rec = {
            "instance_id": self.instance_id,
            "prompt": self.prompt,
            "raw_output": self.raw_output,
            "latency_ms": round(self.latency_ms, 3),
            "output_chars": self.output_chars,
            "attempts": self.attempts,
        }
        if self.error is not None:
            rec["error"] = self.error
        return json.dumps(rec, ensure_ascii=False, sort_keys=True)


def build_prompt(instance: TaskInstance, cot: bool = False) -> str:
    """Question plus the pinned instruction suffix (byte-exact)."""
    suffix = COT_SUFFIX if cot else STANDARD_SUFFIX
    return f"{instance.question}\n{suffix}"


def read_run_records(path: Path) -> list[dict]:
    """Records from a run file; a truncated trailing line (crash during the
    last append) is dropped with a warning so the run can resume."""
    records, _ = _scan_run_file(Path(path))
    return records


def _scan_run_file(path: Path) -> tuple[list[dict], int | None]:
    """(records, byte offset of a truncated trailing line or None).

    A corrupt line anywhere but the tail is real data loss and raises.
    """
    if not path.exists():
        return [], None
    raw = path.read_bytes()
    records = []
    offset = 0
    for chunk in raw.splitlines(keepends=True):
        line = chunk.decode("utf-8", errors="replace").strip()
        if line:
            try:
                records.append(json.loads(line))
            except json.JSONDecodeError:
                if offset + len(chunk) == len(raw):
                    log.warning("dropping truncated final record in %s", path)
                    return records, offset
                raise
        offset += len(chunk)
    return records, None


def repair_run_file(path: Path) -> list[dict]:
    """Drop a truncated trailing record from the file itself, then return
    the surviving records. Safe to call on healthy or missing files."""
    path = Path(path)
    records, truncate_at = _scan_run_file(path)
    if truncate_at is not None:
        with open(path, "r+b") as fh:
            fh.truncate(truncate_at)
    return records


@dataclass
class _Transport:
    """One run's HTTP state: session, auth, and the top_k drop latch."""

    endpoint: ModelEndpoint
    params: GenerationParams
    session: requests.Session = field(default_factory=requests.Session)
    send_top_k: bool = True
    _lock: threading.Lock = field(default_factory=threading.Lock)

    def payload(self, prompt: str) -> dict:
        body = {
            "model": self.endpoint.model,
            "messages": [{"role": "user", "content": prompt}],
            "temperature": self.params.temperature,
            "max_tokens": self.params.max_tokens,
            "top_p": self.params.top_p,
        }
        if self.send_top_k:
            body["top_k"] = self.params.top_k
        return body

    def drop_top_k(self) -> None:
        with self._lock:
            if self.send_top_k:
                self.send_top_k = False
                log.warning("endpoint rejected top_k; dropping it for the rest of the run")

    def complete(self, prompt: str, token: str) -> tuple[str, int]:
        """(raw_output, attempts); raises on exhausted retries."""
        attempts = 0
        delay = self.endpoint.backoff_s
        last_error: Exception = RuntimeError("no attempts made")
        while attempts <= self.endpoint.max_retries:
            attempts += 1
            try:
                resp = self.session.post(
                    f"{self.endpoint.base_url.rstrip('/')}/chat/completions",
                    json=self.payload(prompt),
                    headers={"Authorization": f"Bearer {token}"},
                    timeout=self.endpoint.timeout_s,
                )
                if resp.status_code in (401, 403):
                    raise AuthError(f"endpoint rejected credentials (HTTP {resp.status_code})")
                if resp.status_code == 400 and self.send_top_k and "top_k" in resp.text:
                    self.drop_top_k()
                    attempts -= 1  # parameter negotiation, not a failed try
                    continue
                if resp.status_code >= 400:
                    raise TransientHTTPError(f"HTTP {resp.status_code}: {resp.text[:200]}")
                data = resp.json()
                return data["choices"][0]["message"]["content"], attempts
            except AuthError:
                raise
            except Exception as exc:  # transient: connection, 5xx, parse
                last_error = exc
                if attempts > self.endpoint.max_retries:
                    break
                time.sleep(delay)
                delay *= 2
        raise ExhaustedRetries(str(last_error), attempts)


class TransientHTTPError(RuntimeError):
    pass


class ExhaustedRetries(RuntimeError):
    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


def run_batch(instances: Iterable[TaskInstance], endpoint: ModelEndpoint,
              params: GenerationParams, out_path: Path, cot: bool = False,
              retry_errors: bool = False, progress=None) -> list[RunRecord]:
    """Attempt every instance not yet terminal in out_path.

    Records append durably as they complete; rerunning over a finished
    file issues zero requests. Instances whose previous attempt errored
    are retried only with retry_errors.
    """
    out_path = Path(out_path)
    token = endpoint.auth_token()  # fail fast before any request
    done = set()
    for rec in repair_run_file(out_path):
        if retry_errors and rec.get("error"):
            continue
        done.add(rec["instance_id"])
    todo = [inst for inst in instances if inst.id not in done]
    log.info("run: %d to attempt, %d already terminal", len(todo), len(done))

    transport = _Transport(endpoint, params)
    write_lock = threading.Lock()
    records: list[RunRecord] = []
    out_path.parent.mkdir(parents=True, exist_ok=True)

    def one(instance: TaskInstance) -> None:
        prompt = build_prompt(instance, cot=cot)
        record = RunRecord(instance_id=instance.id, prompt=prompt)
        start = time.monotonic()
        try:
            record.raw_output, record.attempts = transport.complete(prompt, token)
            record.output_chars = len(record.raw_output)
        except AuthError:
            raise
        except ExhaustedRetries as exc:
            record.error = str(exc)
            record.attempts = exc.attempts
        record.latency_ms = (time.monotonic() - start) * 1000
        with write_lock:
            with open(out_path, "a", encoding="utf-8") as fh:
                fh.write(record.to_json() + "\n")
                fh.flush()
                os.fsync(fh.fileno())
            records.append(record)
            if progress is not None:
                progress(record)

    if todo:
        with ThreadPoolExecutor(max_workers=endpoint.concurrency) as pool:
            futures = [pool.submit(one, inst) for inst in todo]
            for fut in futures:
                fut.result()
    return records
