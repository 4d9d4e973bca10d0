"""
Subcommand handlers.

Each handler takes the parsed :class:`RunConfig` and returns the text to
print on stdout together with the exit status.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from plethyx_core.domino import cospin, domino_reading_word, enumerate_domino_tableaux, family_shape, render_domino
from plethyx_core.formats import (
    domino_to_json,
    dumps,
    load_tableau,
    parse_biword,
    parse_burge,
    rsk_pair_to_json,
    slide_trace_to_json,
    tableau_to_json,
)
from plethyx_core.jdt import rectify, rectify_trace
from plethyx_core.partitions import Composition, Partition, SkewShape, Tableau, conjugate, enumerate_ssyt, transpose
from plethyx_core.plethysm_sign import decompose
from plethyx_core.rsk import rsk, rsk_tilde
from plethyx_core.suite_config import SuiteManager
from plethyx_core.verification import SUITES, run_suite
from runners import create_runner

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

DEFAULT_CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs" / "suites"

Outcome = Tuple[str, int]


@dataclass
class RunConfig:
    """Parsed command line shared by every subcommand."""
    command: str
    lam: Partition = field(default_factory=Partition)
    mu: Partition = field(default_factory=Partition)
    basis: str = "h"
    output_format: str = "table"
    threads: Optional[int] = None
    seed: Optional[int] = None
    # command specific
    tableau: Optional[str] = None
    trace: bool = False
    biword: Optional[str] = None
    burge: Optional[str] = None
    shape: Partition = field(default_factory=Partition)
    content: Composition = field(default_factory=Composition)
    conjugate: bool = False
    n: int = 1
    render: bool = False
    suite: Optional[str] = None
    list_suites: bool = False
    max_n: Optional[int] = None
    max_weight: Optional[int] = None
    count: Optional[int] = None
    max_cells: Optional[int] = None
    alphabet: Optional[int] = None
    config_dir: Optional[str] = None


def _tableau_text(t: Tableau) -> str:
    return str(t) if t.rows else "(empty)"


def cmd_decompose(cfg: RunConfig) -> Outcome:
    with create_runner(cfg.threads) as runner:
        table = decompose(cfg.basis, cfg.lam, cfg.mu, runner=runner)
    if cfg.output_format == "json":
        return dumps(table.to_json()), EXIT_OK
    return table.render(), EXIT_OK


def cmd_rectify(cfg: RunConfig) -> Outcome:
    t = load_tableau(cfg.tableau)
    frames = rectify_trace(t) if cfg.trace else []
    result = frames[-1].result if frames else rectify(t)
    if cfg.output_format == "json":
        data = {"input": tableau_to_json(t), "result": tableau_to_json(result)}
        if cfg.trace:
            data["trace"] = [slide_trace_to_json(f) for f in frames]
        return dumps(data), EXIT_OK
    blocks = []
    for k, frame in enumerate(frames, start=1):
        path = " ".join(f"({r},{c})" for r, c in frame.path)
        blocks.append(f"slide {k} from {frame.start_corner}: {path}\n{_tableau_text(frame.result)}")
    blocks.append("result:\n" + _tableau_text(result))
    return "\n\n".join(blocks), EXIT_OK


def cmd_rsk(cfg: RunConfig) -> Outcome:
    pair = rsk(parse_biword(cfg.biword)) if cfg.biword is not None else rsk_tilde(parse_burge(cfg.burge))
    if cfg.output_format == "json":
        return dumps(rsk_pair_to_json(pair)), EXIT_OK
    return f"P:\n{_tableau_text(pair.p)}\n\nQ:\n{_tableau_text(pair.q)}", EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> Outcome:
    if cfg.conjugate:
        found = [transpose(t) for t in enumerate_ssyt(SkewShape(conjugate(cfg.shape), conjugate(cfg.mu)), cfg.content)]
    else:
        found = enumerate_ssyt(SkewShape(cfg.shape, cfg.mu), cfg.content)
    if cfg.output_format == "json":
        return dumps({"count": len(found), "tableaux": [tableau_to_json(t) for t in found]}), EXIT_OK
    blocks = [_tableau_text(t) for t in found] + [f"count: {len(found)}"]
    return "\n\n".join(blocks), EXIT_OK


def cmd_domino(cfg: RunConfig) -> Outcome:
    found = enumerate_domino_tableaux(family_shape(cfg.n, cfg.basis), yamanouchi_only=True)
    if cfg.output_format == "json":
        items = [dict(domino_to_json(d), cospin=cospin(d)) for d in found]
        return dumps({"n": cfg.n, "basis": cfg.basis, "tableaux": items}), EXIT_OK
    blocks = []
    for d in found:
        head = f"word {domino_reading_word(d)}  weight ({Partition(d.weight().counts)})  cospin {cospin(d)}"
        blocks.append(head + ("\n" + render_domino(d) if cfg.render else ""))
    return "\n\n".join(blocks), EXIT_OK


def cmd_verify(cfg: RunConfig) -> Outcome:
    manager = SuiteManager(cfg.config_dir or str(DEFAULT_CONFIG_DIR))
    if cfg.list_suites:
        lines = [f"{c.id:<14} {c.name}" for c in manager.get_config_list() if c.id in SUITES]
        return "\n".join(lines), EXIT_OK
    names: List[str] = sorted(SUITES) if cfg.suite == "all" else [cfg.suite]
    reports = []
    with create_runner(cfg.threads) as runner:
        for name in names:
            preset = manager.get_config(name)
            config = preset.override(max_n=cfg.max_n, max_weight=cfg.max_weight, count=cfg.count,
                                     seed=cfg.seed, max_cells=cfg.max_cells, alphabet=cfg.alphabet)
            reports.append(run_suite(name, config, runner))
    status = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE
    if cfg.output_format == "json":
        data = [r.to_json() for r in reports]
        return dumps(data[0] if len(data) == 1 else data), status
    lines = []
    for r in reports:
        lines.append(f"{r.suite:<14} {'PASS' if r.passed else 'FAIL'}  {r.checked} checks")
        if r.counterexample is not None:
            lines.append("  counterexample: " + dumps(r.counterexample).replace("\n", "\n  "))
    return "\n".join(lines), status


COMMANDS = {
    "decompose": cmd_decompose,
    "rectify": cmd_rectify,
    "rsk": cmd_rsk,
    "enumerate": cmd_enumerate,
    "domino": cmd_domino,
    "verify": cmd_verify,
}
