# db.py
import hashlib
import json
import sqlite3
import time

import config


def _path(db_path=None):
    return db_path or config.DB_PATH


def get_db(db_path=None):
    conn = sqlite3.connect(_path(db_path))
    conn.row_factory = sqlite3.Row
    return conn


def init_db(db_path=None):
    conn = get_db(db_path)
    cur = conn.cursor()

    # Reports: one row per analysis run (CLI --store or any POST route)
    cur.execute(
        """
        CREATE TABLE IF NOT EXISTS reports (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            command TEXT NOT NULL CHECK (command IN ('analyze','gcheck','counterexample','validate','hilbert','macaulay')),
            input_digest TEXT NOT NULL,
            seed INTEGER,
            status TEXT NOT NULL CHECK (status IN ('ok','alert')),
            body TEXT NOT NULL,
            created_at INTEGER NOT NULL
        );
        """
    )
    cur.execute(
        """
        CREATE INDEX IF NOT EXISTS idx_reports_command ON reports(command);
        """
    )
    conn.commit()
    conn.close()


def digest(text):
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def save_report(report, input_text="", db_path=None):
    conn = get_db(db_path)
    cur = conn.cursor()
    cur.execute(
        """
        INSERT INTO reports (command, input_digest, seed, status, body, created_at)
        VALUES (?, ?, ?, ?, ?, ?);
        """,
        (
            report["command"],
            digest(input_text),
            report.get("seed"),
            report["status"],
            json.dumps(report, sort_keys=True),
            int(time.time()),
        ),
    )
    report_id = cur.lastrowid
    conn.commit()
    conn.close()
    return report_id


def _row_summary(row):
    return {
        "id": row["id"],
        "command": row["command"],
        "input_digest": row["input_digest"],
        "seed": row["seed"],
        "status": row["status"],
        "created_at": row["created_at"],
    }


def get_report(report_id, db_path=None):
    conn = get_db(db_path)
    cur = conn.cursor()
    cur.execute(
        """
        SELECT id, command, input_digest, seed, status, body, created_at
        FROM reports
        WHERE id = ?;
        """,
        (report_id,),
    )
    row = cur.fetchone()
    conn.close()
    if not row:
        return None
    summary = _row_summary(row)
    summary["report"] = json.loads(row["body"])
    return summary


def list_reports(command=None, db_path=None):
    conn = get_db(db_path)
    cur = conn.cursor()
    if command:
        cur.execute(
            """
            SELECT id, command, input_digest, seed, status, created_at
            FROM reports
            WHERE command = ?
            ORDER BY id DESC;
            """,
            (command,),
        )
    else:
        cur.execute(
            """
            SELECT id, command, input_digest, seed, status, created_at
            FROM reports
            ORDER BY id DESC;
            """
        )
    rows = cur.fetchall()
    conn.close()
    return [_row_summary(r) for r in rows]
