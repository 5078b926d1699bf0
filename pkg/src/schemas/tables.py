"""
Fixed column schemas for every table the CLI writes.

This module provides:
1. Schema definitions for the Tracy-Widom, joint-slice, cdf and check tables
2. Schema enforcement so every written CSV has the same columns in the same order
"""

import logging

logger = logging.getLogger(__name__)


TW_SCHEMA = {
    's': 'float64',
    'F_GUE(s)': 'float64',
}

JOINT_SLICE_SCHEMA = {
    'beta2': 'float64',
    'P': 'float64',
}

CDF_SCHEMA = {
    'method': 'str',
    'value': 'float64',
    'imag': 'float64',
    'error_estimate': 'float64',
}

CHECK_SCHEMA = {
    'suite': 'str',
    'check': 'str',
    'anchor': 'str',
    'value': 'float64',
    'reference': 'float64',
    'deviation': 'float64',
    'tolerance': 'float64',
    'passed': 'bool',
    'converged': 'bool',
}

MISSING_VALUES = {
    'float64': float('nan'),
    'bool': False,
    'str': '',
}

TABLE_SCHEMAS = {
    'tw': TW_SCHEMA,
    'joint-slice': JOINT_SLICE_SCHEMA,
    'cdf': CDF_SCHEMA,
    'checks': CHECK_SCHEMA,
}


def enforce_schema(df, schema):
    """
    Enforce fixed schema on a dataframe.

    Aligns the dataframe to match the schema by:
    - Adding missing columns (NaN, empty string or False by type)
    - Dropping extra columns not in schema
    - Reordering columns to match schema order
    - Casting float and bool columns

    Args:
        df: DataFrame to align
        schema: Dict mapping column names to types

    Returns:
        DataFrame aligned to schema
    """
    df = df.copy()
    extra_cols = set(df.columns) - set(schema.keys())
    if extra_cols:
        logger.debug(f"Dropping {len(extra_cols)} extra columns not in schema: {sorted(extra_cols)}")
        df = df.drop(columns=list(extra_cols))

    missing_cols = set(schema.keys()) - set(df.columns)
    if missing_cols:
        logger.debug(f"Adding {len(missing_cols)} missing columns from schema")
        for col in missing_cols:
            df[col] = MISSING_VALUES[schema[col]]

    df = df[list(schema.keys())]

    casts = {col: dtype for col, dtype in schema.items() if dtype != 'str'}
    return df.astype(casts)


def get_schema_for_table(table_name):
    """
    Get the schema for a given table.

    Args:
        table_name: 'tw', 'joint-slice', 'cdf' or 'checks'

    Returns:
        Schema dict

    Raises:
        ValueError: If the table name is unknown
    """
    if table_name not in TABLE_SCHEMAS:
        raise ValueError(f"Unknown table: {table_name}. Must be one of {sorted(TABLE_SCHEMAS)}")
    return TABLE_SCHEMAS[table_name]


def write_csv(df, table_name, stream):
    """Align df to its schema and write it with 12 significant digits."""
    df = enforce_schema(df, get_schema_for_table(table_name))
    df.to_csv(stream, index=False, float_format="%.12g")
