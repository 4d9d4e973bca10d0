"""
Cross-module verification suites.

Every suite draws its random inputs in the calling process from
``random.Random(config.seed)`` and hands fixed work units to the runner,
so a report depends only on the config, never on the worker count.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .domino import cospin, domino_families, enumerate_domino_tableaux, family_shape, littlewood_via_domino
from .formats import format_biword, tableau_to_json
from .interfaces import FormatError, VerificationError, WorkRunner
from .jdt import product, rectify, rectify_trace
from .partitions import (
    Partition,
    SkewShape,
    Tableau,
    TableauTuple,
    conjugate,
    content,
    double,
    enumerate_row_tuples,
    horizontal_strip_extensions,
    is_conjugate_semistandard,
    is_semistandard,
    kostka,
    partitions_of,
    reading_word,
    transpose,
    vertical_strip_extensions,
)
from .plethysm_sign import SignedKostkaTable, decompose, littlewood_table, sign_e, sign_h, table_from_schur
from .rsk import (
    Biword,
    BurgeWord,
    column_tuple_to_burge,
    insert_word,
    row_tuple_to_biword,
    rsk,
    rsk_inverse,
    rsk_tilde,
    rsk_tilde_inverse,
    sub_biword_rsk,
    sub_burge_rsk_tilde,
    subtableau,
)
from .suite_config import SuiteConfig
from .symfunc import generators, schur_expand, split_square, verify_symantisym

logger = logging.getLogger(__name__)

Failure = Optional[dict]


@dataclass
class SuiteReport:
    suite: str
    passed: bool
    checked: int
    counterexample: Failure = None
    notes: List[str] = field(default_factory=list)

    def raise_for_failure(self) -> None:
        if not self.passed:
            raise VerificationError(f"Suite {self.suite} failed", self.counterexample)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
            "notes": list(self.notes),
        }


def _serial_map(fn, items):
    return [fn(item) for item in items]


def _mapper(runner: Optional[WorkRunner]) -> Callable:
    return runner.map if runner is not None else _serial_map


def _report(suite: str, results: Sequence[Failure], notes: Sequence[str] = ()) -> SuiteReport:
    failure = next((r for r in results if r is not None), None)
    report = SuiteReport(suite, failure is None, len(results), failure, list(notes))
    logger.info("suite %s: %s after %d checks", suite, "pass" if report.passed else "FAIL", report.checked)
    return report


def _table_diff(got: SignedKostkaTable, expected: SignedKostkaTable, label: str) -> Failure:
    if got.entries == expected.entries:
        return None
    for nu in sorted(set(got.entries) | set(expected.entries), reverse=True):
        a, b = got.entries.get(nu, (0, 0)), expected.entries.get(nu, (0, 0))
        if a != b:
            return {
                "check": label,
                "basis": got.basis_tag,
                "lambda": list(got.profile.parts),
                "mu": list(got.skew_inner.parts),
                "nu": list(nu.parts),
                "got": list(a),
                "expected": list(b),
            }
    return {"check": label, "basis": got.basis_tag, "lambda": list(got.profile.parts)}


def _weights(low: int, high: int) -> List[Partition]:
    return [lam for n in range(low, high + 1) for lam in partitions_of(n)]


# ----------------------------------------------------------------------
# Sign tables
# ----------------------------------------------------------------------
def _littlewood_case(task: Tuple[int, str]) -> Failure:
    n, basis = task
    return _table_diff(decompose(basis, Partition((n,))), littlewood_table(n, basis), "littlewood")


def suite_littlewood(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    tasks = [(n, basis) for basis in ("h", "e") for n in range(1, config.max_n + 1)]
    return _report("littlewood", _mapper(runner)(_littlewood_case, tasks))


def _oracle_table(basis: str, lam: Partition, mu: Partition = Partition()) -> SignedKostkaTable:
    sym, antisym = split_square(generators(basis, lam))
    if mu.parts:
        s_mu = generators("s", mu)
        sym, antisym = s_mu * sym, s_mu * antisym
    return table_from_schur(basis, lam, schur_expand(sym), schur_expand(antisym), mu)


def _oracle_case(task: Tuple[str, Partition, Partition]) -> SignedKostkaTable:
    return _oracle_table(*task)


def _pieri_case(task: Tuple[Partition, int]) -> Failure:
    lam, n = task
    s_lam = generators("s", lam)
    for basis, strips in (("h", horizontal_strip_extensions), ("e", vertical_strip_extensions)):
        got = schur_expand(s_lam * generators(basis, Partition((n,))))
        expected = {nu: 1 for nu in strips(lam, n)}
        if got != expected:
            return {"check": "pieri", "basis": basis, "lambda": list(lam.parts), "n": n}
    return None


def suite_oracle(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    results = []
    tasks = [(basis, lam, Partition()) for basis in ("h", "e") for lam in _weights(1, config.max_weight)]
    oracles = _mapper(runner)(_oracle_case, tasks)
    for (basis, lam, _), expected in zip(tasks, oracles):
        results.append(_table_diff(decompose(basis, lam, runner=runner), expected, "oracle"))
    pieri = [(lam, n) for lam in _weights(1, min(config.max_weight, 5)) for n in (1, 2, 3)]
    results.extend(_mapper(runner)(_pieri_case, pieri))
    return _report("oracle", results)


def suite_completeness(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    results: List[Failure] = []
    for basis in ("h", "e"):
        for lam in _weights(1, config.max_weight):
            table = decompose(basis, lam, runner=runner)
            weight = double(lam)
            expected = {}
            for nu in partitions_of(2 * lam.size):
                shape = nu if basis == "h" else conjugate(nu)
                k = kostka(shape, weight.parts)
                if k:
                    expected[nu] = k
            got = {nu: kp + km for nu, (kp, km) in table.entries.items()}
            failure = None
            if got != expected:
                nu = next(nu for nu in sorted(set(got) | set(expected), reverse=True)
                          if got.get(nu) != expected.get(nu))
                failure = {"check": "completeness", "basis": basis, "lambda": list(lam.parts),
                           "nu": list(nu.parts), "got": got.get(nu, 0), "kostka": expected.get(nu, 0)}
            results.append(failure)
    return _report("completeness", results)


def _skew_case(task: Tuple[str, Partition, Partition]) -> Failure:
    basis, lam, mu = task
    return _table_diff(decompose(basis, lam, mu), _oracle_table(basis, lam, mu), "skew")


def suite_skew(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    tasks = [(basis, lam, mu) for basis in ("h", "e")
             for mu in _weights(1, config.max_inner) for lam in _weights(1, config.max_weight)]
    return _report("skew", _mapper(runner)(_skew_case, tasks))


# ----------------------------------------------------------------------
# Random generators (parent process only)
# ----------------------------------------------------------------------
def random_partition(rng: random.Random, n: int) -> Partition:
    parts: List[int] = []
    left = n
    while left:
        p = rng.randint(1, min(left, parts[-1] if parts else left))
        parts.append(p)
        left -= p
    return Partition(tuple(parts))


def random_skew_tableau(rng: random.Random, max_cells: int, alphabet: int) -> Tableau:
    """A random semistandard skew tableau with at most ``max_cells`` cells."""
    outer = random_partition(rng, rng.randint(2, max(2, max_cells)))
    inner: List[int] = []
    for r, part in enumerate(outer):
        # the last row keeps at least one cell
        cap = min(part if r + 1 < len(outer) else part - 1, inner[-1] if inner else part)
        inner.append(rng.randint(0, cap))
    shape = SkewShape(outer, Partition(tuple(inner)))
    grid: Dict[Tuple[int, int], int] = {}
    for r, c in shape.cells():
        low = max(grid.get((r, c - 1), 1), grid.get((r - 1, c), 0) + 1)
        grid[(r, c)] = low + rng.randint(0, max(0, alphabet - low))
    return Tableau.from_cells(grid, shape.inner)


def random_straight_tableau(rng: random.Random, cells: int, alphabet: int) -> Tableau:
    return insert_word([rng.randint(1, alphabet) for _ in range(cells)]).p


def random_row_tuple(rng: random.Random, profile: Partition, alphabet: int) -> TableauTuple:
    return TableauTuple.rows_of([sorted(rng.randint(1, alphabet) for _ in range(k)) for k in profile])


def random_column_tuple(rng: random.Random, profile: Partition, alphabet: int) -> TableauTuple:
    return TableauTuple.columns_of([sorted(rng.sample(range(1, alphabet + 1), k)) for k in profile])


# ----------------------------------------------------------------------
# RSK and jeu de taquin
# ----------------------------------------------------------------------
def _rsk_case(task: Tuple[str, Tuple[Tuple[int, int], ...]]) -> Failure:
    kind, pairs = task
    if kind == "rsk":
        w = Biword(pairs)
        pair = rsk(w)
        ok = is_semistandard(pair.q) and rsk_inverse(pair) == w
    else:
        w = BurgeWord(pairs)
        pair = rsk_tilde(w)
        ok = is_conjugate_semistandard(pair.q) and rsk_tilde_inverse(pair) == w
    ok = ok and is_semistandard(pair.p) and pair.p.outer == pair.q.outer
    return None if ok else {"check": kind, "word": format_biword(w)}


def suite_rsk_roundtrip(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    rng = random.Random(config.seed)
    a = config.alphabet
    tasks = []
    for _ in range(config.count):
        length = rng.randint(1, config.max_cells)
        pairs = sorted((rng.randint(1, a), rng.randint(1, a)) for _ in range(length))
        tasks.append(("rsk", tuple(pairs)))
        length = rng.randint(1, min(config.max_cells, a * a))
        picked = rng.sample([(u, v) for u in range(1, a + 1) for v in range(1, a + 1)], length)
        tasks.append(("rsk-tilde", tuple(sorted(picked, key=lambda uv: (uv[0], -uv[1])))))
    return _report("rsk-roundtrip", _mapper(runner)(_rsk_case, tasks))


def _jdt_case(task: Tuple[Tableau, int, int]) -> Failure:
    t, first_seed, second_seed = task
    straight = rectify(t)
    ok = is_semistandard(straight) and content(straight) == content(t)
    for seed in (first_seed, second_seed):
        frames = rectify_trace(t, choose=random.Random(seed).choice)
        shuffled = frames[-1].result if frames else t
        ok = ok and shuffled == straight and all(is_semistandard(f.result) for f in frames)
    if ok:
        return None
    return {"check": "jdt-order", "tableau": tableau_to_json(t), "seeds": [first_seed, second_seed]}


def suite_jdt_order(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    rng = random.Random(config.seed)
    tasks = [(random_skew_tableau(rng, config.max_cells, config.alphabet), rng.getrandbits(32), rng.getrandbits(32))
             for _ in range(config.count)]
    return _report("jdt-order", _mapper(runner)(_jdt_case, tasks))


def _plactic_case(task: Tuple[Tableau, Tableau, Tableau]) -> Failure:
    a, b, c = task
    ab = product(a, b)
    ok = insert_word(reading_word(a) + reading_word(b)).p == ab
    ok = ok and product(ab, c) == product(a, product(b, c))
    if ok:
        return None
    return {"check": "plactic", "tableaux": [tableau_to_json(t) for t in task]}


def suite_plactic(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    rng = random.Random(config.seed)
    tasks = [tuple(random_straight_tableau(rng, rng.randint(1, config.max_cells), config.alphabet)
                   for _ in range(3))
             for _ in range(config.count)]
    return _report("plactic", _mapper(runner)(_plactic_case, tasks))


def _shape_sign(shape: Partition) -> int:
    return -1 if shape.part(1) % 2 else 1


def _row_tuple_case(task: Tuple[Partition, TableauTuple]) -> Failure:
    lam, t = task
    q = rsk(row_tuple_to_biword(t)).q
    expected_sign = 1
    for i in range(1, len(lam) + 1):
        piece = sub_biword_rsk(t, i)
        if piece.q != rectify(subtableau(q, i)):
            return {"check": "corollary-qi", "lambda": list(lam.parts), "i": i,
                    "tuple": [list(w) for w in t.words()]}
        expected_sign *= _shape_sign(product(t.members[2 * i - 2], t.members[2 * i - 1]).outer)
    if expected_sign != sign_h(q, lam) or expected_sign != sign_h(q, lam, by_rectification=True):
        return {"check": "sign-h", "lambda": list(lam.parts), "tuple": [list(w) for w in t.words()]}
    return None


def _column_tuple_case(task: Tuple[Partition, TableauTuple]) -> Failure:
    lam, t = task
    q = rsk_tilde(column_tuple_to_burge(t)).q
    expected_sign = 1
    for i in range(1, len(lam) + 1):
        piece = sub_burge_rsk_tilde(t, i)
        if piece.q != transpose(rectify(transpose(subtableau(q, i)))):
            return {"check": "corollary-qi-conjugate", "lambda": list(lam.parts), "i": i,
                    "tuple": [list(w) for w in t.words()]}
        ones = sum(1 for x in piece.q.outer if x == 1)
        expected_sign *= -1 if (ones // 2) % 2 else 1
    if expected_sign != sign_e(q, lam) or expected_sign != sign_e(q, lam, by_rectification=True):
        return {"check": "sign-e", "lambda": list(lam.parts), "tuple": [list(w) for w in t.words()]}
    return None


def suite_corollary_qi(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    rng = random.Random(config.seed)
    rows = [(lam, t) for lam in _weights(1, config.max_weight)
            for t in enumerate_row_tuples(double(lam), config.alphabet)]
    bigger = _weights(config.max_weight + 1, config.max_weight + 2)
    for _ in range(config.count):
        lam = rng.choice(bigger)
        rows.append((lam, random_row_tuple(rng, double(lam), config.alphabet + 2)))
    columns = []
    for _ in range(config.count):
        lam = rng.choice(_weights(1, config.max_weight + 2))
        columns.append((lam, random_column_tuple(rng, double(lam), max(lam.part(0), config.alphabet) + 2)))
    results = _mapper(runner)(_row_tuple_case, rows) + _mapper(runner)(_column_tuple_case, columns)
    return _report("corollary-qi", results)


# ----------------------------------------------------------------------
# Dominoes and product rules
# ----------------------------------------------------------------------
def _domino_key(d) -> frozenset:
    return frozenset((frozenset(dom.cells), dom.entry) for dom in d.dominoes)


def _domino_case(task: Tuple[int, str]) -> Failure:
    n, basis = task
    label = {"check": "domino", "n": n, "basis": basis}
    found = enumerate_domino_tableaux(family_shape(n, basis), yamanouchi_only=True)
    family = domino_families(n, basis)
    if {_domino_key(d) for d in found} != {_domino_key(d) for d in family} or len(found) != len(family):
        return dict(label, reason="Yamanouchi set differs from the explicit family", found=len(found))
    weights = [d.weight() for d in found]
    if len(set(weights)) != len(weights):
        return dict(label, reason="weight repeated")
    for j, d in enumerate(family):
        if cospin(d) != j:
            return dict(label, reason="cospin", j=j, cospin=cospin(d))
    return _table_diff(littlewood_via_domino(n, basis), littlewood_table(n, basis), "domino")


def suite_domino(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    tasks = [(n, basis) for basis in ("h", "e") for n in range(1, config.max_n + 1)]
    return _report("domino", _mapper(runner)(_domino_case, tasks))


PRODUCT_GENERATORS = (("h", 1), ("h", 2), ("e", 2))


def _symantisym_case(task: Tuple[Tuple[str, int], ...]) -> Failure:
    gs = [generators(basis, Partition((k,))) for basis, k in task]
    if verify_symantisym(gs):
        return None
    return {"check": "symantisym", "factors": [f"{basis}_{k}" for basis, k in task]}


def suite_symantisym(config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    tasks = [combo for size in range(1, config.max_n + 1)
             for combo in combinations_with_replacement(PRODUCT_GENERATORS, size)]
    return _report("symantisym", _mapper(runner)(_symantisym_case, tasks))


SUITES: Dict[str, Callable[[SuiteConfig, Optional[WorkRunner]], SuiteReport]] = {
    "littlewood": suite_littlewood,
    "oracle": suite_oracle,
    "completeness": suite_completeness,
    "rsk-roundtrip": suite_rsk_roundtrip,
    "jdt-order": suite_jdt_order,
    "plactic": suite_plactic,
    "corollary-qi": suite_corollary_qi,
    "domino": suite_domino,
    "symantisym": suite_symantisym,
    "skew": suite_skew,
}


def run_suite(name: str, config: SuiteConfig, runner: Optional[WorkRunner] = None) -> SuiteReport:
    try:
        suite = SUITES[name]
    except KeyError:
        raise FormatError(f"Unknown suite '{name}'; expected one of {', '.join(sorted(SUITES))}") from None
    logger.info("running suite %s", name)
    return suite(config, runner)
