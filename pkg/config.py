import os
from pathlib import Path

from dotenv import load_dotenv

basedir = Path(__file__).parent.absolute()

load_dotenv(basedir / '.env')


def _int_setting(name, default):
    return int(os.environ.get(f'QUASIWORDS_{name}') or default)


class Config:
    # Stream analysis
    DEFAULT_PREFIX_LENGTH = _int_setting('DEFAULT_PREFIX_LENGTH', 2000)
    DEFAULT_MAX_QUASIPERIOD = _int_setting('DEFAULT_MAX_QUASIPERIOD', 100)

    # Budgets
    DIRECTIVE_PAIR_BUDGET = _int_setting('DIRECTIVE_PAIR_BUDGET', 64)
    CLOSURE_CAP = _int_setting('CLOSURE_CAP', 1_000_000)

    # Verify harness
    VERIFY_SEED = _int_setting('VERIFY_SEED', 20060109)

    # Reporting
    JSON_INDENT = _int_setting('JSON_INDENT', 2)
    REPORT_SCHEMA_VERSION = '1.0'
    REPORT_SCHEMA_PATH = basedir / 'schemas' / 'report.schema.json'

    LOG_LEVEL = os.environ.get('QUASIWORDS_LOG_LEVEL') or 'WARNING'
