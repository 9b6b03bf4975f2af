"""Strict-index straightening (Schur-Q side) and the vertex-operator series.

Products of the degree-n operators here anticommute, and a repeated degree
annihilates, so straightening an index is signed sorting into a strictly
decreasing index (possibly with one trailing zero row).  The same result is
computed two independent ways: by counting out-of-order pairs directly, and by
rewriting the code word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Composition,
    DomainError,
    InternalInvariantError,
    SignedIndexResult,
    ZERO,
    is_strict_partition,
    signed_result,
    validate_composition,
)
from .codes import (
    _decode_letters,
    _q_exchange_step,
    _straighten_letters,
    encode_code,
)


def straighten_Y_perm(parts) -> SignedIndexResult:
    """Straighten by sorting: zero on a repeated entry, else (-1) per out-of-order pair."""
    parts = validate_composition(parts)
    if len(set(parts)) < len(parts):
        return ZERO
    inversions = sum(
        1
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
        if parts[i] < parts[j]
    )
    return signed_result(inversions, tuple(sorted(parts, reverse=True)))


def straighten_Y_code_trace(parts):
    """Code-word route for straighten_Y_perm; None when zero, else (exponent, index)."""
    parts = validate_composition(parts)
    word = encode_code(parts).letters
    out = _straighten_letters(word, _q_exchange_step, _decode_letters, 0)
    if out is None:
        return None
    total, final, _ = out
    rows = _decode_letters(final)
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise InternalInvariantError(f"straightened rows not sorted: {rows!r}")
    if any(rows[i] == rows[i + 1] for i in range(len(rows) - 1)):
        return None  # equal adjacent rows annihilate
    return total, rows


def straighten_Y_code(parts) -> SignedIndexResult:
    """Straighten a strict-side index by code-word rewriting."""
    out = straighten_Y_code_trace(parts)
    if out is None:
        return ZERO
    return signed_result(*out)


def _validated_strict(parts) -> Composition:
    parts = validate_composition(parts, minimum=1)
    if not is_strict_partition(parts):
        raise DomainError(f"{parts!r} is not strictly decreasing")
    return parts


def yn_action(n: int, lam) -> SignedIndexResult:
    """Apply the degree-n operator to a strict index with positive rows.

    n > lam_1 prepends with sign +1; n already a row annihilates; otherwise n
    is inserted in place with one sign flip per larger row (n = 0 appends a
    trailing zero row).
    """
    lam = _validated_strict(lam)
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"degree must be an int >= 0, got {n!r}")
    if not lam or n > lam[0]:
        return signed_result(0, (n,) + lam)
    if n in lam:
        return ZERO
    j = sum(1 for p in lam if p > n)
    return signed_result(j, lam[:j] + (n,) + lam[j:])


def _bracket_by_values(lam: Composition, i: int) -> Composition:
    """Insert the i-th smallest positive integer absent from lam, in order."""
    present = set(lam)
    v = 0
    count = 0
    while count < i:
        v += 1
        if v not in present:
            count += 1
    j = sum(1 for p in lam if p > v)
    return lam[:j] + (v,) + lam[j:]


def _bracket_by_code(lam: Composition, i: int) -> Composition:
    """Insert a U between the i-th adjacent R-pair of the code word.

    Pairs are counted left to right, overlaps allowed, continuing into the
    implicit R-tail past the word's end.
    """
    word = encode_code(lam).letters
    pairs = [t for t in range(len(word) - 1) if word[t] == "R" and word[t + 1] == "R"]
    if i <= len(pairs):
        t = pairs[i - 1]
        seq = word[: t + 1] + "U" + word[t + 1 :]
    else:
        seq = word + "R" * (i - len(pairs)) + "U"
    return _decode_letters(seq)


def lambda_bracket(lam, i: int) -> Composition:
    """The i-th bracket-index of a strict index (i = 0 appends a zero row).

    For i >= 1 this inserts the i-th absent positive value; the equivalent
    code-word construction is evaluated too and cross-checked on every call.
    """
    lam = _validated_strict(lam)
    if not isinstance(i, int) or isinstance(i, bool) or i < 0:
        raise DomainError(f"bracket position must be an int >= 0, got {i!r}")
    if i == 0:
        return lam + (0,)
    by_values = _bracket_by_values(lam, i)
    by_code = _bracket_by_code(lam, i)
    if by_values != by_code:
        raise InternalInvariantError(
            f"bracket routes disagree for {lam!r}, i={i}: {by_values!r} vs {by_code!r}"
        )
    return by_values


@dataclass(frozen=True)
class QSeriesTerm:
    """One term of the strict-side operator series: sign * t**n on an index."""

    n: int
    j: int
    i: int
    sign_exp: int
    index: Composition

    @property
    def sign(self) -> int:
        return -1 if self.sign_exp % 2 else 1

    @property
    def t_exp(self) -> int:
        return self.n

    def to_dict(self) -> dict:
        return {
            "family": "schurQ",
            "i": self.i,
            "j": self.j,
            "t_exp": self.n,
            "sign_exp": self.sign_exp,
            "index": list(self.index),
        }


def q_series_j_form(lam, n_max: int) -> list[QSeriesTerm]:
    """Series terms with t-exponent n <= n_max, enumerated by insertion slot j.

    Slot j inserts n strictly between neighbouring rows (top slot is bounded by
    n_max only, bottom slot reaches down to n = 0); the term's sign is (-1)**j.
    """
    lam = _validated_strict(lam)
    if not isinstance(n_max, int) or isinstance(n_max, bool) or n_max < 0:
        raise DomainError(f"n_max must be an int >= 0, got {n_max!r}")
    l = len(lam)
    terms: list[QSeriesTerm] = []
    for j in range(l + 1):
        hi = lam[j - 1] - 1 if j >= 1 else n_max
        lo = lam[j] + 1 if j < l else 0
        for n in range(lo, min(hi, n_max) + 1):
            index = lam[:j] + (n,) + lam[j:]
            terms.append(QSeriesTerm(n=n, j=j, i=n - l + j, sign_exp=j, index=index))
    terms.sort(key=lambda t: t.n)
    return terms


def q_series_i_form(lam, i_max: int) -> list[QSeriesTerm]:
    """Series terms i = 0..i_max via bracket-indexes; must agree with the j-form.

    Term i carries index lambda^[i], t-exponent n = |lambda^[i]| - |lam| and
    sign exponent len(lam) + |lam| - |lambda^[i]| + i, which is checked to be
    the insertion slot of n on every call.
    """
    lam = _validated_strict(lam)
    if not isinstance(i_max, int) or isinstance(i_max, bool) or i_max < 0:
        raise DomainError(f"i_max must be an int >= 0, got {i_max!r}")
    l = len(lam)
    base = sum(lam)
    terms: list[QSeriesTerm] = []
    for i in range(i_max + 1):
        index = lambda_bracket(lam, i)
        n = sum(index) - base
        sign_exp = l + base - sum(index) + i
        if sign_exp != index.index(n) or i != n - l + sign_exp:
            raise InternalInvariantError(
                f"series bookkeeping off at i={i} for {lam!r}: {index!r}"
            )
        terms.append(QSeriesTerm(n=n, j=sign_exp, i=i, sign_exp=sign_exp, index=index))
    return terms
