"""
Sign statistics on recording tableaux and the split of Kostka numbers
into the symmetric and anti-symmetric parts of h_lambda^2 and e_lambda^2.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .interfaces import InvalidTableauError, OracleError, ShapeMismatchError, WorkRunner
from .jdt import rectify
from .partitions import (
    Composition,
    Partition,
    SkewShape,
    Tableau,
    conjugate,
    content,
    double,
    enumerate_ssyt,
    kostka,
    partitions_of,
    transpose,
)
from .rsk import subtableau

logger = logging.getLogger(__name__)

Counts = Tuple[int, int]


@dataclass(frozen=True)
class SignedKostkaTable:
    """nu -> (k_plus, k_minus): multiplicity of s_nu in s_2[g] and in s_11[g].

    ``entries`` is kept in decreasing lexicographic order of nu. For a
    non-empty ``skew_inner`` mu the table describes s_mu * s_2[g] and
    s_mu * s_11[g] instead.
    """
    entries: Dict[Partition, Counts]
    profile: Partition
    basis_tag: str = "h"
    skew_inner: Partition = field(default_factory=Partition)

    def k_plus(self, nu: Partition) -> int:
        return self.entries.get(nu, (0, 0))[0]

    def k_minus(self, nu: Partition) -> int:
        return self.entries.get(nu, (0, 0))[1]

    def s2_terms(self) -> Dict[Partition, int]:
        return {nu: kp for nu, (kp, _) in self.entries.items() if kp}

    def s11_terms(self) -> Dict[Partition, int]:
        return {nu: km for nu, (_, km) in self.entries.items() if km}

    def to_json(self) -> dict:
        return {
            "basis": self.basis_tag,
            "lambda": list(self.profile.parts),
            "mu": list(self.skew_inner.parts),
            "terms": [{"nu": list(nu.parts), "s2": kp, "s11": km} for nu, (kp, km) in self.entries.items()],
        }

    def render(self) -> str:
        """Aligned plain-text table."""
        header = f"basis={self.basis_tag} lambda=({self.profile})"
        if self.skew_inner.parts:
            header += f" mu=({self.skew_inner})"
        labels = [f"({nu})" for nu in self.entries]
        width = max([len("nu")] + [len(label) for label in labels])
        lines = [header, f"{'nu':<{width}}  {'s2':>4}  {'s11':>4}"]
        for label, (kp, km) in zip(labels, self.entries.values()):
            lines.append(f"{label:<{width}}  {kp:>4}  {km:>4}")
        return "\n".join(lines)


def _require_content(q: Tableau, lam: Partition) -> None:
    if content(q) != Composition(double(lam).parts):
        raise InvalidTableauError(f"Tableau content {content(q)} is not ({double(lam)})")


def _h_exponent(shape: Partition, half: int) -> int:
    if len(shape) == 1 and shape[0] == 2 * half:
        return 0
    if len(shape) == 2 and shape.size == 2 * half:
        return shape[1]
    raise ShapeMismatchError(f"Rectified piece has shape ({shape}), expected (2*{half}-j, j)")


def _e_exponent(shape: Partition, half: int) -> int:
    twos = sum(1 for x in shape if x == 2)
    ones = sum(1 for x in shape if x == 1)
    if twos + ones != len(shape) or ones % 2 or twos + ones // 2 != half:
        raise ShapeMismatchError(f"Rectified piece has shape ({shape}), expected (2^({half}-j), 1^(2j))")
    return ones // 2


def _matched_pairs(word: List[int], low: int) -> int:
    """Pairs (high, low) matched like brackets in a word on two letters.

    This is the length of the second row of the word's rectification.
    """
    open_high = matched = 0
    for x in word:
        if x != low:
            open_high += 1
        elif open_high:
            open_high -= 1
            matched += 1
    return matched


def _piece_word(cells: Dict[Tuple[int, int], int], i: int, transposed: bool = False) -> List[int]:
    """Reading word of the letters 2i-1, 2i, taken from the transpose when asked."""
    low = 2 * i - 1
    picked = [(rc, x) for rc, x in cells.items() if low <= x <= low + 1]
    if transposed:
        picked.sort(key=lambda item: (-item[0][1], item[0][0]))
    else:
        picked.sort(key=lambda item: (-item[0][0], item[0][1]))
    return [x for _, x in picked]


def sign_h(q: Tableau, lam: Partition, by_rectification: bool = False) -> int:
    """prod (-1)^j_i where Rect(subtableau(q, i)) has shape (2 lam_i - j_i, j_i).

    j_i is read off the bracket matching of the piece's reading word unless
    ``by_rectification`` asks for the pieces to be slid out in full.
    """
    _require_content(q, lam)
    cells = q.cells()
    total = 0
    for i, half in enumerate(lam, start=1):
        if by_rectification:
            total += _h_exponent(rectify(subtableau(q, i)).outer, half)
        else:
            total += _matched_pairs(_piece_word(cells, i), 2 * i - 1)
    return -1 if total % 2 else 1


def sign_e(q: Tableau, lam: Partition, by_rectification: bool = False) -> int:
    """Sign of a conjugate-semistandard recording tableau.

    Each piece is transposed, rectified and transposed back; its shape
    (2^(lam_i - j_i), 1^(2 j_i)) contributes (-1)^j_i.
    """
    _require_content(q, lam)
    cells = q.cells()
    total = 0
    for i, half in enumerate(lam, start=1):
        if by_rectification:
            piece = transpose(rectify(transpose(subtableau(q, i))))
            total += _e_exponent(piece.outer, half)
        else:
            total += half - _matched_pairs(_piece_word(cells, i, transposed=True), 2 * i - 1)
    return -1 if total % 2 else 1


def signed_recording_tableaux(nu: Partition, lam: Partition, basis: str = "h",
                              mu: Partition = Partition()) -> List[Tuple[Tableau, int]]:
    """Every recording tableau of outer shape ``nu`` over ``mu`` with its sign.

    For basis h these are the semistandard tableaux of content lam^2; for
    basis e they are the conjugates of semistandard tableaux of shape
    nu'/mu'.
    """
    weight = Composition(double(lam).parts)
    if basis == "h":
        return [(q, sign_h(q, lam)) for q in enumerate_ssyt(SkewShape(nu, mu), weight)]
    if basis == "e":
        out = []
        for qt in enumerate_ssyt(SkewShape(conjugate(nu), conjugate(mu)), weight):
            q = transpose(qt)
            out.append((q, sign_e(q, lam)))
        return out
    raise ValueError(f"Unknown basis '{basis}'")


def _tally(task: Tuple[str, Partition, Partition, Partition]) -> Tuple[Partition, Counts]:
    basis, nu, lam, mu = task
    plus = minus = 0
    for _, s in signed_recording_tableaux(nu, lam, basis, mu):
        if s > 0:
            plus += 1
        else:
            minus += 1
    return nu, (plus, minus)


def _candidates(basis: str, lam: Partition, mu: Partition) -> List[Partition]:
    weight = Composition(double(lam).parts)
    found = []
    for nu in partitions_of(2 * lam.size + mu.size):
        if not nu.contains(mu):
            continue
        shape = SkewShape(nu, mu) if basis == "h" else SkewShape(conjugate(nu), conjugate(mu))
        if kostka(shape, weight):
            found.append(nu)
    return found


def _decompose(basis: str, lam: Partition, mu: Partition, runner: Optional[WorkRunner]) -> SignedKostkaTable:
    tasks = [(basis, nu, lam, mu) for nu in _candidates(basis, lam, mu)]
    results = runner.map(_tally, tasks) if runner is not None else [_tally(t) for t in tasks]
    logger.debug("decompose %s lambda=(%s) mu=(%s): %d shapes", basis, lam, mu, len(results))
    return SignedKostkaTable(dict(results), lam, basis, mu)


def decompose_h_square(lam: Partition, runner: Optional[WorkRunner] = None) -> SignedKostkaTable:
    return _decompose("h", lam, Partition(), runner)


def decompose_e_square(lam: Partition, runner: Optional[WorkRunner] = None) -> SignedKostkaTable:
    return _decompose("e", lam, Partition(), runner)


def decompose_skew_h_square(mu: Partition, lam: Partition,
                            runner: Optional[WorkRunner] = None) -> SignedKostkaTable:
    """s_mu * s_2[h_lam] and s_mu * s_11[h_lam] from skew tableaux of shape nu/mu."""
    return _decompose("h", lam, mu, runner)


def decompose_skew_e_square(mu: Partition, lam: Partition,
                            runner: Optional[WorkRunner] = None) -> SignedKostkaTable:
    return _decompose("e", lam, mu, runner)


def decompose(basis: str, lam: Partition, mu: Partition = Partition(),
              runner: Optional[WorkRunner] = None) -> SignedKostkaTable:
    if basis not in ("h", "e"):
        raise ValueError(f"Unknown basis '{basis}'")
    return _decompose(basis, lam, mu, runner)


def littlewood_table(n: int, basis: str = "h") -> SignedKostkaTable:
    """Closed forms for s_2[h_n], s_11[h_n] (two-row shapes) and
    s_2[e_n], s_11[e_n] (shapes 2^(n-j) 1^(2j)); even j is symmetric."""
    entries: Dict[Partition, Counts] = {}
    for j in range(n + 1):
        if basis == "h":
            nu = Partition((2 * n - j, j))
        elif basis == "e":
            nu = Partition((2,) * (n - j) + (1,) * (2 * j))
        else:
            raise ValueError(f"Unknown basis '{basis}'")
        entries[nu] = (0, 1) if j % 2 else (1, 0)
    return SignedKostkaTable(entries, Partition((n,)) if n else Partition(), basis)


def _multiplicity(c: object, nu: Partition) -> int:
    value = Fraction(c)
    if value.denominator != 1 or value < 0:
        raise OracleError(f"Coefficient of s_({nu}) is {value}, not a multiplicity")
    return int(value)


def table_from_schur(basis: str, lam: Partition, s2: Dict[Partition, object], s11: Dict[Partition, object],
                     mu: Partition = Partition()) -> SignedKostkaTable:
    """Build a table from two Schur expansions, keys in decreasing lex order."""
    keys = sorted(set(s2) | set(s11), reverse=True)
    entries = {nu: (_multiplicity(s2.get(nu, 0), nu), _multiplicity(s11.get(nu, 0), nu)) for nu in keys}
    return SignedKostkaTable(entries, lam, basis, mu)
