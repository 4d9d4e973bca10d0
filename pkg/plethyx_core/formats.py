"""
Text and JSON formats shared by the library and the command line.

partition  "2,1"  (empty string is the empty partition)
biword     "1,1,2/3,4,1"  top letters, a slash, bottom letters
tableau    {"inner": [...], "rows": [[...], ...]}  or a bare list of rows
"""

import json
from pathlib import Path
from typing import Any, List, Union

from .domino import Domino, DominoTableau, domino_reading_word
from .interfaces import FormatError, InvalidPartitionError, InvalidTableauError
from .jdt import SlideTrace
from .partitions import Composition, Partition, Tableau, require_semistandard
from .rsk import Biword, BurgeWord, RskPair


def _ints(text: str, what: str) -> List[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError as e:
        raise FormatError(f"Bad {what} '{text}': expected comma-separated integers") from e


def parse_partition(text: str) -> Partition:
    try:
        return Partition(tuple(_ints(text, "partition")))
    except InvalidPartitionError as e:
        raise FormatError(str(e)) from e


def parse_composition(text: str) -> Composition:
    try:
        return Composition(tuple(_ints(text, "composition")))
    except InvalidPartitionError as e:
        raise FormatError(str(e)) from e


def _split_biword(text: str):
    if text.count("/") != 1:
        raise FormatError(f"Bad biword '{text}': expected 'top/bottom'")
    top, bottom = text.split("/")
    return _ints(top, "top word"), _ints(bottom, "bottom word")


def parse_biword(text: str) -> Biword:
    return Biword.from_words(*_split_biword(text))


def parse_burge(text: str) -> BurgeWord:
    return BurgeWord.from_words(*_split_biword(text))


def format_biword(w: Union[Biword, BurgeWord]) -> str:
    return ",".join(map(str, w.top)) + "/" + ",".join(map(str, w.bottom))


def tableau_to_json(t: Tableau) -> dict:
    return {"inner": list(t.inner.parts), "rows": [list(row) for row in t.rows]}


def tableau_from_json(data: Any) -> Tableau:
    if isinstance(data, list):
        data = {"rows": data}
    if not isinstance(data, dict) or "rows" not in data:
        raise FormatError("Tableau JSON must be a list of rows or an object with 'rows'")
    try:
        return require_semistandard(Tableau.from_rows(data["rows"], data.get("inner", [])))
    except (TypeError, ValueError) as e:
        raise FormatError(f"Bad tableau: {e}") from e


def load_tableau(source: str) -> Tableau:
    """Read a tableau from inline JSON or from a JSON file path."""
    text = source
    if not source.lstrip().startswith(("{", "[")):
        path = Path(source)
        if not path.is_file():
            raise FormatError(f"No such tableau file: {source}")
        text = path.read_text(encoding="utf-8")
    try:
        return tableau_from_json(json.loads(text))
    except json.JSONDecodeError as e:
        raise FormatError(f"Bad tableau JSON: {e}") from e


def rsk_pair_to_json(pair: RskPair) -> dict:
    return {"p": tableau_to_json(pair.p), "q": tableau_to_json(pair.q)}


def slide_trace_to_json(trace: SlideTrace) -> dict:
    return {
        "start_corner": list(trace.start_corner),
        "path": [list(cell) for cell in trace.path],
        "result": tableau_to_json(trace.result),
    }


def domino_to_json(d: DominoTableau) -> dict:
    return {
        "shape": list(d.shape.parts),
        "dominoes": [
            {"cells": [list(cell) for cell in dom.cells], "entry": dom.entry, "orientation": dom.orientation}
            for dom in d.dominoes
        ],
        "word": list(domino_reading_word(d).letters),
    }


def domino_from_json(data: dict) -> DominoTableau:
    try:
        dominoes = tuple(
            Domino(tuple(tuple(cell) for cell in item["cells"]), int(item["entry"])) for item in data["dominoes"]
        )
        return DominoTableau(Partition(tuple(data["shape"])), dominoes)
    except (KeyError, TypeError, ValueError, InvalidTableauError) as e:
        raise FormatError(f"Bad domino tableau: {e}") from e


def dumps(data: Any) -> str:
    """Stable JSON text: sorted keys, two-space indent."""
    return json.dumps(data, indent=2, sort_keys=True)
