import logging

from flask import Flask

from config import Config


def create_app(config_class=Config):
    app = Flask(__name__)
    app.config.from_object(config_class)

    logging.getLogger().setLevel(app.config['LOG_LEVEL'])

    from routes import api
    app.register_blueprint(api.bp)

    # Register CLI commands
    from cli_commands import register_commands
    register_commands(app)

    return app


# Create app instance for flask run
app = create_app()

if __name__ == '__main__':
    app.run(debug=True)
