# app.py
import logging

from flask import Flask, jsonify
from flask_cors import CORS

import config
from cli import cli
from db import init_db
from errors import AnalysisError
from routes.system import system_bp
from routes.analysis import analysis_bp
from routes.reports import reports_bp


def _analysis_error(exc):
    return jsonify(exc.to_dict()), exc.http_status


def create_app(testing=False, db_path=None):
    app = Flask(__name__)
    CORS(app)
    app.config["TESTING"] = testing
    app.config["DB_PATH"] = db_path or config.DB_PATH

    logging.basicConfig(level=config.LOG_LEVEL.upper())

    # Initialize DB (creates the reports table if it doesn't exist)
    init_db(app.config["DB_PATH"])

    # Register blueprints
    app.register_blueprint(system_bp)
    app.register_blueprint(analysis_bp)
    app.register_blueprint(reports_bp)

    app.register_error_handler(AnalysisError, _analysis_error)

    # `flask analyze ...` etc. run the same commands as the console script
    for name, command in cli.commands.items():
        app.cli.add_command(command, name)

    return app


if __name__ == "__main__":
    app = create_app()
    app.run(host="0.0.0.0", port=5001, debug=True)
