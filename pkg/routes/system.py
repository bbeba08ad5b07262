# routes/system.py
from flask import Blueprint, current_app, jsonify
from db import get_db

# No url_prefix here; we define full paths on each route.
system_bp = Blueprint("system", __name__)

COMMANDS = ("analyze", "gcheck", "counterexample", "validate", "hilbert", "macaulay")


@system_bp.get("/health")
def health():
    return jsonify({"ok": True})


@system_bp.get("/system/metrics")
def system_metrics():
    """
    Returns stored report counts:
      - reports by command
      - reports whose status is "alert"
      - total reports
    """
    conn = get_db(current_app.config["DB_PATH"])
    cur = conn.cursor()

    # Default counts (so commands never run still show as 0)
    by_command = {command: 0 for command in COMMANDS}

    cur.execute(
        """
        SELECT command, COUNT(*) AS cnt
        FROM reports
        GROUP BY command;
        """
    )
    for row in cur.fetchall():
        by_command[row["command"]] = row["cnt"]

    cur.execute("SELECT COUNT(*) AS c FROM reports WHERE status = 'alert';")
    alerts = cur.fetchone()["c"]

    conn.close()

    return jsonify(
        {
            "reports": by_command,
            "alerts": alerts,
            "total": sum(by_command.values()),
        }
    )
