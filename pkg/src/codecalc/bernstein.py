"""Row-adding (Bernstein) operator action on partitions and its operator series.

Applying the degree-n operator to a partition either vanishes, prepends n as a
new top row, or (for small n) produces a signed partition read off the code
word by turning one R into a U.  The series expansion of the operator product
is indexed by i >= 1 via the sup-indexes lambda^(i).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Composition,
    DomainError,
    InternalInvariantError,
    SignedIndexResult,
    ZERO,
    is_partition,
    signed_result,
    validate_composition,
)
from .codes import decode_code, encode_code


def _validated_partition(parts) -> Composition:
    parts = validate_composition(parts)
    if not is_partition(parts):
        raise DomainError(f"{parts!r} is not weakly decreasing")
    return parts


def bn_action(n: int, lam) -> SignedIndexResult:
    """Apply the degree-n row-adding operator to the partition lam.

    For n >= lam_1 the row is prepended with sign +1.  Otherwise the code word
    of lam is inspected k = lam_1 - n letters from its right end: a U there
    (or falling off the word, i.e. n < -len(lam)) annihilates, while an R
    there becomes a U, with one sign flip per U strictly between it and the
    word's final U, plus one more.
    """
    lam = _validated_partition(lam)
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"degree must be an int, got {n!r}")
    top = lam[0] if lam else 0
    if n >= top:
        return signed_result(0, (n,) + lam)
    word = encode_code(lam).letters
    zidx = len(word) - (top - n)
    if zidx < 0 or word[zidx] == "U":
        return ZERO
    exponent = word[zidx + 1 : -1].count("U") + 1
    new = decode_code(word[:zidx] + "U" + word[zidx + 1 :])
    if (
        len(new) != len(lam) + 1
        or sum(new) != sum(lam) + n
        or not is_partition(new)
    ):
        raise InternalInvariantError(f"bad action result {new!r} for n={n}, lam={lam!r}")
    return signed_result(exponent, new)


def _replace_ith_r(word: str, i: int) -> str:
    """Turn the i-th R (from the left, counting into the R-tail) into a U."""
    count = 0
    for idx, ch in enumerate(word):
        if ch == "R":
            count += 1
            if count == i:
                return word[:idx] + "U" + word[idx + 1 :]
    return word + "R" * (i - count - 1) + "U"


def lambda_sup(lam, i: int) -> Composition:
    """The i-th sup-index of a partition: i-th R of the code word becomes a U.

    Equivalently (and cross-checked on every call): with j the number of rows
    >= i, subtract 1 from each of the first j rows and insert a new row i-1
    after them.
    """
    lam = _validated_partition(lam)
    if not isinstance(i, int) or isinstance(i, bool) or i < 1:
        raise DomainError(f"sup-index position must be an int >= 1, got {i!r}")
    from_code = decode_code(_replace_ith_r(encode_code(lam).letters, i))
    j = 0
    while j < len(lam) and lam[j] >= i:
        j += 1
    closed = tuple(p - 1 for p in lam[:j]) + (i - 1,) + lam[j:]
    if from_code != closed:
        raise InternalInvariantError(
            f"sup-index routes disagree for {lam!r}, i={i}: {from_code!r} vs {closed!r}"
        )
    return closed


def r_index(lam, i: int) -> int:
    """Number of R's left of the i-th U from the right; equals row i (0 past the end)."""
    lam = _validated_partition(lam)
    if not isinstance(i, int) or isinstance(i, bool) or i < 1:
        raise DomainError(f"row position must be an int >= 1, got {i!r}")
    if i > len(lam):
        return 0
    word = encode_code(lam).letters
    count = 0
    for idx in range(len(word) - 1, -1, -1):
        if word[idx] == "U":
            count += 1
            if count == i:
                break
    value = word[:idx].count("R")
    if value != lam[i - 1]:
        raise InternalInvariantError(f"r_index({lam!r}, {i}) = {value}, expected row")
    return value


@dataclass(frozen=True)
class SeriesTerm:
    """One term of an operator series: sign * t**t_exp attached to an index."""

    family: str
    i: int
    t_exp: int
    sign_exp: int
    index: Composition

    @property
    def sign(self) -> int:
        return -1 if self.sign_exp % 2 else 1

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "i": self.i,
            "t_exp": self.t_exp,
            "sign_exp": self.sign_exp,
            "index": list(self.index),
        }


def bernstein_series(lam, i_max: int) -> list[SeriesTerm]:
    """Terms i = 1..i_max of the row-adding operator series applied to lam.

    Term i carries index lambda^(i), t-exponent |lambda^(i)| - |lam| and sign
    (-1) ** (|lam| - |lambda^(i)| + i - 1).
    """
    lam = _validated_partition(lam)
    if not isinstance(i_max, int) or isinstance(i_max, bool) or i_max < 0:
        raise DomainError(f"i_max must be an int >= 0, got {i_max!r}")
    base = sum(lam)
    terms: list[SeriesTerm] = []
    for i in range(1, i_max + 1):
        index = lambda_sup(lam, i)
        t_exp = sum(index) - base
        sign_exp = base - sum(index) + i - 1
        if sign_exp < 0:
            raise InternalInvariantError(f"negative sign exponent at i={i} for {lam!r}")
        terms.append(
            SeriesTerm(family="schur", i=i, t_exp=t_exp, sign_exp=sign_exp, index=index)
        )
    return terms


def bernstein_series_window(lam, n_max: int) -> list[SeriesTerm]:
    """All series terms with t-exponent <= n_max (the t-exponents below that
    window's floor, -len(lam), never occur)."""
    lam = _validated_partition(lam)
    if not isinstance(n_max, int) or isinstance(n_max, bool):
        raise DomainError(f"n_max must be an int, got {n_max!r}")
    i_max = max(n_max + 1 + len(lam), 0)
    return [t for t in bernstein_series(lam, i_max) if t.t_exp <= n_max]
