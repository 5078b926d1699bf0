"""
Schema management for the tables and reports the CLI writes.

Provides fixed schemas and a run report so outputs never drift between runs.
"""

from .tables import (
    enforce_schema,
    get_schema_for_table,
    write_csv,
    CDF_SCHEMA,
    CHECK_SCHEMA,
    JOINT_SLICE_SCHEMA,
    TABLE_SCHEMAS,
    TW_SCHEMA,
)
from .report import CheckResult, RunReport

__all__ = [
    'enforce_schema',
    'get_schema_for_table',
    'write_csv',
    'CDF_SCHEMA',
    'CHECK_SCHEMA',
    'JOINT_SLICE_SCHEMA',
    'TABLE_SCHEMAS',
    'TW_SCHEMA',
    'CheckResult',
    'RunReport',
]
