# routes/reports.py
from flask import Blueprint, current_app, jsonify, request

from db import get_report, list_reports
from routes.system import COMMANDS

reports_bp = Blueprint("reports", __name__, url_prefix="/reports")


@reports_bp.get("")
def index():
    """
    Returns stored report summaries, newest first. Optional ?command=gcheck.

    [
      {
        "id": 3,
        "command": "gcheck",
        "input_digest": "9f2c...",
        "seed": 1,
        "status": "ok",
        "created_at": 1760000000
      },
      ...
    ]
    """
    command = request.args.get("command")
    if command and command not in COMMANDS:
        return jsonify({"error": f"unknown command {command}"}), 400
    return jsonify(list_reports(command, db_path=current_app.config["DB_PATH"]))


@reports_bp.get("/<int:report_id>")
def show(report_id):
    row = get_report(report_id, db_path=current_app.config["DB_PATH"])
    if not row:
        return jsonify({"error": "report not found"}), 404
    return jsonify(row)
