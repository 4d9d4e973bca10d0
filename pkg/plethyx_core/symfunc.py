"""
Exact symmetric functions stored in the power-sum basis.

The engine is independent of the tableau machinery except for Kostka
numbers, which drive the Schur elimination. Every coefficient is a
``fractions.Fraction``.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple, Union

from .interfaces import FormatError, OracleError
from .partitions import Composition, Partition, count_standard, kostka, partitions_of

logger = logging.getLogger(__name__)

BASES = ("m", "h", "e", "p", "s")
Scalar = Union[int, Fraction]
Terms = Dict[Partition, Fraction]


def _clean(terms: Mapping[Partition, Fraction]) -> Terms:
    return {k: Fraction(v) for k, v in terms.items() if v}


class SymFunc:
    """A symmetric function as a map from power-sum partitions to rationals."""

    __slots__ = ("_p",)

    def __init__(self, p_terms: Mapping[Partition, Scalar] = None):
        self._p: Terms = _clean(p_terms or {})

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls()

    @classmethod
    def one(cls) -> "SymFunc":
        return cls({Partition(): Fraction(1)})

    @property
    def p_terms(self) -> Terms:
        return dict(self._p)

    def coefficient(self, mu: Partition) -> Fraction:
        return self._p.get(mu, Fraction(0))

    def degrees(self) -> List[int]:
        return sorted({mu.size for mu in self._p})

    @property
    def degree(self) -> int:
        """Top degree; 0 for the zero function."""
        return max(self.degrees(), default=0)

    def homogeneous(self, d: int) -> "SymFunc":
        return SymFunc({mu: c for mu, c in self._p.items() if mu.size == d})

    def is_zero(self) -> bool:
        return not self._p

    def __add__(self, other: "SymFunc") -> "SymFunc":
        terms = defaultdict(Fraction, self._p)
        for mu, c in other._p.items():
            terms[mu] += c
        return SymFunc(terms)

    def __neg__(self) -> "SymFunc":
        return SymFunc({mu: -c for mu, c in self._p.items()})

    def __sub__(self, other: "SymFunc") -> "SymFunc":
        return self + (-other)

    def __mul__(self, other: Union["SymFunc", Scalar]) -> "SymFunc":
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return SymFunc({mu: c * other for mu, c in self._p.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "SymFunc":
        return SymFunc({mu: c / scalar for mu, c in self._p.items()})

    def __pow__(self, k: int) -> "SymFunc":
        result = SymFunc.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self._p == other._p

    __hash__ = None

    def to_basis(self, basis: str) -> Terms:
        if basis == "p":
            return self.p_terms
        if basis == "m":
            return monomial_expand(self)
        if basis == "s":
            return schur_expand(self)
        raise OracleError(f"Cannot expand into basis '{basis}'")

    def __repr__(self) -> str:
        if not self._p:
            return "SymFunc(0)"
        parts = [f"{c}*p[{mu}]" for mu, c in sorted(self._p.items(), reverse=True)]
        return "SymFunc(" + " + ".join(parts) + ")"


def _merge(a: Partition, b: Partition) -> Partition:
    return Partition(tuple(sorted(a.parts + b.parts, reverse=True)))


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """p_mu * p_nu = p_(mu union nu)."""
    terms: Dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, a in f.p_terms.items():
        for nu, b in g.p_terms.items():
            terms[_merge(mu, nu)] += a * b
    return SymFunc(terms)


# ----------------------------------------------------------------------
# Generators
# ----------------------------------------------------------------------
def _power(k: int) -> SymFunc:
    return SymFunc({Partition((k,)): Fraction(1)})


@lru_cache(maxsize=None)
def _complete(n: int) -> SymFunc:
    # n h_n = sum_i p_i h_{n-i}
    if n == 0:
        return SymFunc.one()
    total = SymFunc()
    for i in range(1, n + 1):
        total = total + _power(i) * _complete(n - i)
    return total * Fraction(1, n)


@lru_cache(maxsize=None)
def _elementary(n: int) -> SymFunc:
    # n e_n = sum_i (-1)^(i-1) p_i e_{n-i}
    if n == 0:
        return SymFunc.one()
    total = SymFunc()
    for i in range(1, n + 1):
        term = _power(i) * _elementary(n - i)
        total = total + term if i % 2 else total - term
    return total * Fraction(1, n)


def _complete_or_zero(n: int) -> SymFunc:
    return _complete(n) if n >= 0 else SymFunc()


@lru_cache(maxsize=None)
def _schur(lam: Partition) -> SymFunc:
    """Jacobi-Trudi determinant det(h_{lam_i - i + j}) by memoised Laplace expansion."""
    n = len(lam)
    minors: Dict[Tuple[int, frozenset], SymFunc] = {}

    def minor(row: int, free: frozenset) -> SymFunc:
        if row == n:
            return SymFunc.one()
        key = (row, free)
        if key not in minors:
            total = SymFunc()
            for rank, col in enumerate(sorted(free)):
                entry = _complete_or_zero(lam[row] - row + col)
                if entry.is_zero():
                    continue
                term = entry * minor(row + 1, free - {col})
                total = total + term if rank % 2 == 0 else total - term
            minors[key] = total
        return minors[key]

    return minor(0, frozenset(range(n)))


@lru_cache(maxsize=None)
def _assignments(mu: Tuple[int, ...], lam: Tuple[int, ...]) -> int:
    """Number of maps sending each part of ``mu`` to a part of ``lam`` with
    the parts landing on ``lam[j]`` summing to ``lam[j]``."""

    @lru_cache(maxsize=None)
    def count(i: int, remaining: Tuple[int, ...]) -> int:
        if i == len(mu):
            return 1 if not any(remaining) else 0
        total = 0
        for j, room in enumerate(remaining):
            if room >= mu[i]:
                total += count(i + 1, remaining[:j] + (room - mu[i],) + remaining[j + 1:])
        return total

    return count(0, lam)


@lru_cache(maxsize=None)
def _p_in_m(mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    out = []
    for lam in partitions_of(mu.size):
        if len(lam) <= len(mu):
            c = _assignments(mu.parts, lam.parts)
            if c:
                out.append((lam, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial(lam: Partition) -> SymFunc:
    # p_lam = R_{lam,lam} m_lam + sum over strict coarsenings nu of R_{lam,nu} m_nu
    rest = SymFunc({lam: Fraction(1)})
    diagonal = 0
    for nu, c in _p_in_m(lam):
        if nu == lam:
            diagonal = c
        else:
            rest = rest - _monomial(nu) * c
    if not diagonal:
        raise OracleError(f"Power sum p[{lam}] has no diagonal monomial term")
    return rest * Fraction(1, diagonal)


def generators(basis: str, lam: Union[Partition, Sequence[int]]) -> SymFunc:
    """The basis element ``basis``_``lam`` for ``basis`` in m, h, e, p, s."""
    lam = lam if isinstance(lam, Partition) else Partition(tuple(lam))
    if basis == "p":
        return SymFunc({lam: Fraction(1)})
    if basis == "h":
        result = SymFunc.one()
        for part in lam:
            result = result * _complete(part)
        return result
    if basis == "e":
        result = SymFunc.one()
        for part in lam:
            result = result * _elementary(part)
        return result
    if basis == "s":
        return _schur(lam)
    if basis == "m":
        return _monomial(lam)
    raise OracleError(f"Unknown basis '{basis}'; expected one of {', '.join(BASES)}")


def from_terms(basis: str, terms: Mapping[Partition, Scalar]) -> SymFunc:
    total = SymFunc()
    for lam, c in terms.items():
        total = total + generators(basis, lam) * Fraction(c)
    return total


# ----------------------------------------------------------------------
# Expansions
# ----------------------------------------------------------------------
def monomial_expand(f: SymFunc) -> Terms:
    terms: Dict[Partition, Fraction] = defaultdict(Fraction)
    for mu, c in f.p_terms.items():
        for lam, r in _p_in_m(mu):
            terms[lam] += c * r
    return _clean(terms)


def schur_expand(f: SymFunc) -> Terms:
    """Schur coefficients of ``f``.

    Each homogeneous part is expanded in monomials and the lexicographically
    largest monomial is cancelled by its Schur function, using
    s_lam = sum_mu K(lam, mu) m_mu.
    """
    remaining = monomial_expand(f)
    result: Terms = {}
    steps = 0
    limit = sum(len(partitions_of(d)) for d in f.degrees())
    while remaining:
        steps += 1
        if steps > limit:
            raise OracleError(f"Schur elimination left a remainder: {remaining}")
        lam = max(remaining)
        c = remaining[lam]
        if kostka(lam, Composition(lam.parts)) != 1:
            raise OracleError(f"Kostka diagonal for {lam} is not 1")
        result[lam] = c
        for mu in partitions_of(lam.size):
            if mu > lam:
                continue
            k = kostka(lam, Composition(mu.parts))
            if k:
                left = remaining.get(mu, Fraction(0)) - c * k
                if left:
                    remaining[mu] = left
                else:
                    remaining.pop(mu, None)
    logger.debug("schur_expand: %d Schur terms", len(result))
    return result


# ----------------------------------------------------------------------
# Plethysm
# ----------------------------------------------------------------------
def _adams(k: int, g: SymFunc) -> SymFunc:
    """p_k[g]: every power sum p_m in g becomes p_(km)."""
    return SymFunc({Partition(tuple(k * x for x in mu)): c for mu, c in g.p_terms.items()})


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f[g], linear in f and multiplicative over the parts of each p_mu."""
    cache: Dict[int, SymFunc] = {}
    total = SymFunc()
    for mu, c in f.p_terms.items():
        term = SymFunc.one()
        for k in mu:
            if k not in cache:
                cache[k] = _adams(k, g)
            term = term * cache[k]
        total = total + term * c
    return total


def split_square(g: SymFunc) -> Tuple[SymFunc, SymFunc]:
    """(s_2[g], s_11[g]) = ((g^2 + p_2[g]) / 2, (g^2 - p_2[g]) / 2)."""
    square = g * g
    twisted = _adams(2, g)
    half = Fraction(1, 2)
    return (square + twisted) * half, (square - twisted) * half


def _product(fs: Iterable[SymFunc]) -> SymFunc:
    result = SymFunc.one()
    for f in fs:
        result = result * f
    return result


def verify_symantisym(gs: Sequence[SymFunc]) -> bool:
    """Check both product rules for s_2 and s_11 of g_1 ... g_n.

    s_2[prod g]  = sum over even-sized I of prod_{i in I} s_11[g_i] prod_{j not in I} s_2[g_j]
    s_11[prod g] = the same sum over odd-sized I
    """
    splits = [split_square(g) for g in gs]
    sym, antisym = split_square(_product(gs))
    even, odd = SymFunc(), SymFunc()
    n = len(gs)
    for size in range(n + 1):
        for picked in combinations(range(n), size):
            term = _product(splits[i][1] if i in picked else splits[i][0] for i in range(n))
            if size % 2:
                odd = odd + term
            else:
                even = even + term
    ok = sym == even and antisym == odd
    if not ok:
        logger.info("symantisym identity failed for %d factors", n)
    return ok


def power_decomposition(g: SymFunc, k: int) -> Dict[Partition, SymFunc]:
    """s_mu[g] for every mu of size k, checked against g^k = sum f^mu s_mu[g]."""
    pieces = {mu: plethysm(generators("s", mu), g) for mu in partitions_of(k)}
    total = SymFunc()
    for mu, piece in pieces.items():
        total = total + piece * count_standard(mu)
    if total != g ** k:
        raise OracleError(f"Power decomposition of degree {k} does not sum to g^{k}")
    return pieces


# ----------------------------------------------------------------------
# Serialization
# ----------------------------------------------------------------------
def to_records(f: SymFunc, basis: str = "p") -> List[dict]:
    """[{basis, partition, numerator, denominator}, ...] in decreasing lex order."""
    terms = f.to_basis(basis)
    return [
        {"basis": basis, "partition": list(lam.parts), "numerator": c.numerator, "denominator": c.denominator}
        for lam, c in sorted(terms.items(), reverse=True)
    ]


def from_records(records: Iterable[Mapping]) -> SymFunc:
    total = SymFunc()
    for rec in records:
        try:
            coeff = Fraction(int(rec["numerator"]), int(rec.get("denominator", 1)))
            total = total + generators(rec["basis"], Partition(tuple(rec["partition"]))) * coeff
        except (KeyError, TypeError, ZeroDivisionError) as e:
            raise FormatError(f"Bad SymFunc record {rec!r}: {e}") from e
    return total
