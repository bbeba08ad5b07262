# routes/analysis.py
"""
POST endpoints mirroring the CLI commands. Every run is stored; the response
carries the report and its id. AnalysisError is turned into JSON by the
app-level error handler.
"""
import json

from flask import Blueprint, current_app, jsonify, request

import config
from db import save_report
from errors import ParseError
from reports import (
    analyze_report,
    build_matroid,
    counterexample_report,
    gcheck_report,
    hilbert_report,
    parse_matroid,
    parse_order,
    parse_target,
    plain,
    validate_report,
)

analysis_bp = Blueprint("analysis", __name__)


# ---------- Shared helpers ----------

def _body():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ParseError("request body must be a JSON object")
    return data


def _int(data, key, default, minimum=0):
    value = data.get(key, default)
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise ParseError(f"{key} must be an integer >= {minimum}")
    return value


def _flag(data, key, default):
    value = data.get(key, default)
    if not isinstance(value, bool):
        raise ParseError(f"{key} must be true or false")
    return value


def _matroid(data):
    if "matroid" not in data:
        raise ParseError("matroid is required")
    doc = parse_matroid(data["matroid"])
    return doc, json.dumps(data["matroid"], sort_keys=True)


def _order(data, n):
    return parse_order(data["order"], n) if data.get("order") is not None else None


def _store(report, input_text):
    report = plain(report)
    report_id = save_report(report, input_text, db_path=current_app.config["DB_PATH"])
    current_app.logger.info("stored %s report %d (%s)", report["command"], report_id, report["status"])
    return jsonify({"id": report_id, "report": report}), 201


# ---------- Routes ----------

@analysis_bp.post("/analyze")
def analyze():
    """
    Body:
    {
      "matroid": {"n": 4, "bases": [[0,1],[0,2],...]},
      "target": "ind" | "bc",      (optional, default "ind")
      "order": [3, 0, 1, 2]        (optional, least first)
    }
    """
    data = _body()
    doc, text = _matroid(data)
    m = build_matroid(doc)
    report = analyze_report(m, parse_target(data.get("target", "ind")), _order(data, m.n))
    return _store(report, text)


@analysis_bp.post("/gcheck")
def gcheck():
    data = _body()
    doc, text = _matroid(data)
    report = gcheck_report(
        build_matroid(doc),
        seed=_int(data, "seed", config.DEFAULT_SEED),
        bound=_int(data, "bound", config.DEFAULT_BOUND),
        trials=_int(data, "trials", config.DEFAULT_TRIALS, minimum=1),
        exact=_flag(data, "exact", False),
        strip=_flag(data, "strip_coloops", False),
    )
    return _store(report, text)


@analysis_bp.post("/hilbert")
def hilbert():
    data = _body()
    doc, text = _matroid(data)
    m = build_matroid(doc)
    report = hilbert_report(
        m,
        target=parse_target(data.get("target", "ind")),
        seed=_int(data, "seed", config.DEFAULT_SEED),
        bound=_int(data, "bound", config.DEFAULT_BOUND),
        order=_order(data, m.n),
        exact=_flag(data, "exact", True),
    )
    return _store(report, text)


@analysis_bp.post("/validate")
def validate():
    data = _body()
    doc, text = _matroid(data)
    return _store(validate_report(doc), text)


@analysis_bp.post("/counterexample")
def counterexample():
    data = _body()
    s = _int(data, "s", 5)
    report = counterexample_report(
        s=s,
        order=parse_order(data.get("order"), 2 * s),
        trials=_int(data, "trials", config.COUNTEREXAMPLE_TRIALS, minimum=1),
        bound=_int(data, "bound", config.DEFAULT_BOUND),
        seed=_int(data, "seed", config.DEFAULT_SEED),
    )
    return _store(report, json.dumps({"s": s, "order": data.get("order")}, sort_keys=True))
