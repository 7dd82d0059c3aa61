"""Long-running commands exercised as real processes."""

import signal
import socket
import subprocess
import sys
import time

import requests

from conftest import FULL_PAPER_QUERY, PAPER_DOI


def free_port() -> int:
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


def wait_for(url, process, timeout_s=15.0):
    deadline = time.monotonic() + timeout_s
    while time.monotonic() < deadline:
        if process.poll() is not None:
            raise AssertionError(
                f"process exited early: {process.stderr.read().decode()}")
        try:
            return requests.get(url, timeout=1)
        except requests.RequestException:
            time.sleep(0.1)
    raise AssertionError(f"{url} never came up")


def spawn(*args):
    return subprocess.Popen(
        [sys.executable, "-m", "scholarly_context.cli", *args],
        stdout=subprocess.PIPE, stderr=subprocess.PIPE)


def test_serve_fixture_mode_health_and_query():
    port = free_port()
    process = spawn("serve", "--port", str(port), "--mode", "fixtures",
                    "--scenario", "happy")
    try:
        health = wait_for(f"http://127.0.0.1:{port}/health", process)
        assert health.status_code == 200
        assert health.json()["status"] == "ok"

        response = requests.post(f"http://127.0.0.1:{port}/query",
                                 json={"query": FULL_PAPER_QUERY}, timeout=10)
        assert response.status_code == 200
        assert response.json()["data"]["paper"]["doi"] == PAPER_DOI
    finally:
        process.send_signal(signal.SIGINT)
        process.wait(timeout=10)
    assert process.returncode == 0


def test_stub_command_serves_recorded_bodies():
    base = free_port()
    process = spawn("stub", "--scenario", "paper_happy", "--port-base", str(base))
    try:
        response = wait_for(
            f"http://127.0.0.1:{base}/graph/v1/paper/DOI:{PAPER_DOI}", process)
        assert response.status_code == 200
        assert response.json()["title"]
        log = requests.get(f"http://127.0.0.1:{base}/_log", timeout=2).json()
        assert log["requests"][0]["key"] == PAPER_DOI
    finally:
        process.send_signal(signal.SIGINT)
        process.wait(timeout=10)
