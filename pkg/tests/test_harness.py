"""Harness contract tests against a simulated chat-completions endpoint."""

import json
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from tokentasks.harness import (
    COT_SUFFIX,
    STANDARD_SUFFIX,
    AuthError,
    GenerationParams,
    ModelEndpoint,
    build_prompt,
    read_run_records,
    run_batch,
)
from tokentasks.instances import TaskInstance


def make_instances(n):
    return [TaskInstance(id=f"freq_en_{i:05d}", task="freq", language="en",
                         evaluation_type="number", question=f"How many? #{i}",
                         label="1") for i in range(n)]


class FakeModel:
    """Scriptable endpoint: per-instance transient failures, concurrency meter."""

    def __init__(self):
        self.in_flight = 0
        self.max_in_flight = 0
        self.requests = 0
        self.fail_first_for: set[str] = set()
        self.seen_attempts: dict[str, int] = {}
        self.reject_top_k = False
        self.require_token = "secret-token"
        self.lock = threading.Lock()
        self.delay_s = 0.0

    def handle(self, payload: dict, auth: str) -> tuple[int, dict | str]:
        with self.lock:
            self.requests += 1
            self.in_flight += 1
            self.max_in_flight = max(self.max_in_flight, self.in_flight)
        try:
            if auth != f"Bearer {self.require_token}":
                return 401, "bad token"
            if self.reject_top_k and "top_k" in payload:
                return 400, "unknown parameter: top_k"
            prompt = payload["messages"][0]["content"]
            marker = prompt.split("#")[-1].split("\n")[0]
            instance_id = f"freq_en_{int(marker):05d}"
            with self.lock:
                self.seen_attempts[instance_id] = self.seen_attempts.get(instance_id, 0) + 1
                failing = (instance_id in self.fail_first_for
                           and self.seen_attempts[instance_id] == 1)
            if failing:
                return 503, "temporarily unavailable"
            if self.delay_s:
                time.sleep(self.delay_s)
            return 200, {"choices": [{"message": {"content": f"<answer>{marker}</answer>"}}]}
        finally:
            with self.lock:
                self.in_flight -= 1


@pytest.fixture()
def fake_server():
    model = FakeModel()

    class Handler(BaseHTTPRequestHandler):
        def do_POST(self):
            length = int(self.headers.get("Content-Length", 0))
            payload = json.loads(self.rfile.read(length))
            status, body = model.handle(payload, self.headers.get("Authorization", ""))
            data = json.dumps(body) if isinstance(body, dict) else body
            raw = data.encode("utf-8")
            self.send_response(status)
            self.send_header("Content-Type", "application/json")
            self.send_header("Content-Length", str(len(raw)))
            self.end_headers()
            self.wfile.write(raw)

        def log_message(self, *args):
            pass

    server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    model.base_url = f"http://127.0.0.1:{server.server_port}/v1"
    yield model
    server.shutdown()


@pytest.fixture()
def endpoint(fake_server, monkeypatch):
    monkeypatch.setenv("FAKE_KEY", fake_server.require_token)
    return ModelEndpoint(base_url=fake_server.base_url, model="fake-model",
                         auth_env="FAKE_KEY", timeout_s=10, max_retries=3,
                         backoff_s=0.01, concurrency=8)


PARAMS = GenerationParams()


class TestBuildPrompt:
    def test_standard_suffix_verbatim(self):
        inst = make_instances(1)[0]
        prompt = build_prompt(inst, cot=False)
        assert prompt.endswith(STANDARD_SUFFIX)
        assert STANDARD_SUFFIX == "You need to put the final result inside <answer> </answer>."

    def test_cot_suffix_verbatim(self):
        inst = make_instances(1)[0]
        prompt = build_prompt(inst, cot=True)
        assert prompt.endswith(COT_SUFFIX)
        assert COT_SUFFIX == ("Let's think step by step and after that you need to put "
                              "the final result inside <answer> </answer>.")

    def test_question_prefix_unchanged(self):
        inst = make_instances(1)[0]
        for cot in (False, True):
            assert build_prompt(inst, cot=cot).startswith(inst.question)


class TestRunBatch:
    def test_all_instances_get_terminal_records(self, fake_server, endpoint, tmp_path):
        out = tmp_path / "run.jsonl"
        records = run_batch(make_instances(20), endpoint, PARAMS, out)
        assert len(records) == 20
        stored = read_run_records(out)
        assert {r["instance_id"] for r in stored} == {f"freq_en_{i:05d}" for i in range(20)}
        assert all(r["raw_output"] and "error" not in r for r in stored)
        assert all(r["output_chars"] == len(r["raw_output"]) for r in stored)

    def test_bounded_concurrency(self, fake_server, endpoint, tmp_path):
        fake_server.delay_s = 0.05
        run_batch(make_instances(30), endpoint, PARAMS, tmp_path / "run.jsonl")
        assert fake_server.max_in_flight <= endpoint.concurrency
        assert fake_server.max_in_flight >= 2  # actually parallel

    def test_transient_failure_then_success(self, fake_server, endpoint, tmp_path):
        fake_server.fail_first_for = {"freq_en_00003"}
        records = run_batch(make_instances(5), endpoint, PARAMS, tmp_path / "run.jsonl")
        by_id = {r.instance_id: r for r in records}
        assert by_id["freq_en_00003"].attempts == 2
        assert by_id["freq_en_00003"].raw_output
        assert by_id["freq_en_00000"].attempts == 1

    def test_exhausted_retries_record_error_and_continue(self, fake_server, endpoint,
                                                         tmp_path, monkeypatch):
        monkeypatch.setattr(endpoint, "max_retries", 0)
        fake_server.fail_first_for = {"freq_en_00001"}
        records = run_batch(make_instances(3), endpoint, PARAMS, tmp_path / "run.jsonl")
        by_id = {r.instance_id: r for r in records}
        assert by_id["freq_en_00001"].error
        assert by_id["freq_en_00000"].raw_output and by_id["freq_en_00002"].raw_output

    def test_resume_skips_completed(self, fake_server, endpoint, tmp_path):
        out = tmp_path / "run.jsonl"
        instances = make_instances(10)
        run_batch(instances[:6], endpoint, PARAMS, out)
        first_requests = fake_server.requests
        records = run_batch(instances, endpoint, PARAMS, out)
        assert len(records) == 4  # only the new ones
        assert fake_server.requests == first_requests + 4
        assert len(read_run_records(out)) == 10

    def test_idempotent_resume_zero_requests(self, fake_server, endpoint, tmp_path):
        out = tmp_path / "run.jsonl"
        instances = make_instances(8)
        run_batch(instances, endpoint, PARAMS, out)
        before = fake_server.requests
        records = run_batch(instances, endpoint, PARAMS, out)
        assert records == []
        assert fake_server.requests == before

    def test_error_records_are_terminal_unless_retry_errors(self, fake_server, endpoint,
                                                            tmp_path, monkeypatch):
        out = tmp_path / "run.jsonl"
        monkeypatch.setattr(endpoint, "max_retries", 0)
        fake_server.fail_first_for = {"freq_en_00000"}
        run_batch(make_instances(2), endpoint, PARAMS, out)
        before = fake_server.requests
        assert run_batch(make_instances(2), endpoint, PARAMS, out) == []
        assert fake_server.requests == before
        retried = run_batch(make_instances(2), endpoint, PARAMS, out, retry_errors=True)
        assert [r.instance_id for r in retried] == ["freq_en_00000"]
        assert retried[0].raw_output  # second attempt succeeds

    def test_missing_auth_aborts_before_requests(self, fake_server, endpoint, tmp_path,
                                                 monkeypatch):
        monkeypatch.delenv("FAKE_KEY")
        with pytest.raises(AuthError):
            run_batch(make_instances(2), endpoint, PARAMS, tmp_path / "run.jsonl")
        assert fake_server.requests == 0

    def test_rejected_auth_aborts(self, fake_server, endpoint, tmp_path, monkeypatch):
        monkeypatch.setenv("FAKE_KEY", "wrong")
        with pytest.raises(AuthError):
            run_batch(make_instances(2), endpoint, PARAMS, tmp_path / "run.jsonl")

    def test_top_k_dropped_after_rejection(self, fake_server, endpoint, tmp_path):
        fake_server.reject_top_k = True
        records = run_batch(make_instances(4), endpoint, PARAMS, tmp_path / "run.jsonl")
        assert all(r.raw_output for r in records)


def test_generation_parameter_defaults():
    params = GenerationParams()
    assert (params.temperature, params.max_tokens, params.top_p, params.top_k) == \
        (0.7, 16384, 0.95, 50)


def test_resume_repairs_truncated_final_record(fake_server, endpoint, tmp_path):
    import json as _json

    out = tmp_path / "run.jsonl"
    instances = make_instances(5)
    run_batch(instances[:3], endpoint, PARAMS, out)
    with open(out, "a", encoding="utf-8") as fh:
        fh.write('{"instance_id": "freq_en_00003", "raw_out')  # crash artifact
    records = run_batch(instances, endpoint, PARAMS, out)
    assert {r.instance_id for r in records} == {"freq_en_00003", "freq_en_00004"}
    # the artifact is gone: every line parses and ids are complete
    lines = out.read_text(encoding="utf-8").splitlines()
    parsed = [_json.loads(line) for line in lines if line.strip()]
    assert {r["instance_id"] for r in parsed} == {f"freq_en_{i:05d}" for i in range(5)}


def test_corrupt_middle_record_is_fatal(tmp_path):
    out = tmp_path / "run.jsonl"
    out.write_text('{broken\n{"instance_id": "freq_en_00000", "raw_output": "x"}\n')
    with pytest.raises(Exception):
        read_run_records(out)
