"""
The whole topology over real sockets
====================================

Five stub upstreams play back recorded responses; the gateway, configured
in live mode but pointed at the stubs, cannot tell the difference. The
request log then shows exactly which sub-requests the planner issued.
"""

import threading
import time
from dataclasses import replace

import requests
import uvicorn

from scholarly_context import Gateway, default_config, load_bundled, serve_stub
from scholarly_context.gateway.service import create_app

scenario = load_bundled("happy")
cluster = serve_stub(scenario)
print("stub upstreams:", cluster.base_urls)

# Point a live-mode gateway at the stubs.
config = default_config("live")
config = replace(config, sources={
    name: replace(cfg, base_url=cluster.base_urls[name])
    for name, cfg in config.sources.items()
})
app = create_app(config, gateway=Gateway(config))

server = uvicorn.Server(uvicorn.Config(app, host="127.0.0.1", port=8350,
                                       log_level="warning"))
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)
base = "http://127.0.0.1:8350"

health = requests.get(f"{base}/health").json()
print("health:", health["status"], "| upstreams reachable:",
      all(u["reachable"] for u in health["upstreams"].values()))

envelope = requests.post(f"{base}/query", json={"query": """
{ paper(doi: "10.1101/2020.03.08.20030643") {
    title
    topicDetails { topic }
} }"""}).json()
print("topics over HTTP:", envelope["data"]["paper"]["topicDetails"])
print("per-source timing:", envelope["timing"]["sources"])

# Pruning is observable at the stubs: only articles and topics were hit.
hits = [(e.source, e.key) for e in scenario.request_log]
print("stub request log:", hits)
assert {source for source, _ in hits} == {"articles_api", "topics_api"}

# The comparison endpoint serves the facet widget.
table = requests.post(f"{base}/comparison/filter", json={
    "table": {
        "title": "demo",
        "columns": [],
        "rows": [
            {"label": "a", "doi": "10.5194/gmd-2019-0001", "cells": {}},
            {"label": "b", "doi": "10.5194/gmd-2020-0002", "cells": {}},
        ],
    },
    "filters": [{"target": "citation_count", "op": "ge", "threshold": 1}],
}).json()
print("filter summary:", table["summary"])

server.should_exit = True
thread.join(timeout=5)
cluster.stop()
print("done")
