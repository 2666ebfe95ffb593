import json
import sys
from contextlib import contextmanager
from typing import Optional

import pandas as pd

from errors import RejectedInputError


FORMATS = ('csv', 'json', 'dot')


@contextmanager
def open_out(path: Optional[str]):
    if path is None or path == '-':
        yield sys.stdout
        return
    with open(path, 'w', encoding='utf-8', newline='') as fh:
        yield fh


def read_json(path: str, where: str):
    """JSON document from a file; errors name the flag that pointed at it."""
    try:
        with open(path, encoding='utf-8') as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise RejectedInputError(f"{where}: no such file {path!r}") from None
    except json.JSONDecodeError as e:
        raise RejectedInputError(f"{where}: {path} line {e.lineno} column {e.colno}: {e.msg}") from None


def table_text(df: pd.DataFrame, fmt: str) -> str:
    if fmt == 'csv':
        return df.to_csv(index=False, lineterminator='\n')
    if fmt == 'json':
        return df.to_json(orient='records') + '\n'
    raise RejectedInputError(f"tables are written as csv or json, not {fmt!r}")


def json_text(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def write_table(df: pd.DataFrame, fmt: str, out: Optional[str]):
    with open_out(out) as fh:
        fh.write(table_text(df, fmt))


def write_json(obj, out: Optional[str]):
    with open_out(out) as fh:
        fh.write(json_text(obj))


def write_text(text: str, out: Optional[str]):
    with open_out(out) as fh:
        fh.write(text)
