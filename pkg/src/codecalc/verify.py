"""Deterministic verification sweeps, shared by the test suite and the CLI.

Each suite enumerates its inputs in a fixed order (randomised checks use a
fixed seed), records mismatches as JSON-ready failure dicts, and returns a
VerifyReport.  The corpus suite replays a JSON-lines file of worked examples
through the same operations the CLI exposes.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from importlib import resources
from itertools import combinations, product

from . import bernstein, codes, oracle, qvertex, shifted
from .core import (
    CalcError,
    DomainError,
    canonical_json,
    classify,
    negate,
    parse_index,
)


@dataclass
class VerifyReport:
    """Outcome of one verification suite."""

    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, input_, expected, got) -> None:
        self.failures.append(
            {"suite": self.suite, "input": input_, "expected": expected, "got": got}
        )

    def check(self, input_, expected, got) -> None:
        self.cases += 1
        if expected != got:
            self.fail(input_, expected, got)


def _compositions(max_part: int, max_len: int, min_part: int = 0):
    for length in range(max_len + 1):
        yield from product(range(min_part, max_part + 1), repeat=length)


def _partitions(max_part: int, max_len: int):
    for mu in _compositions(max_part, max_len):
        if all(mu[i] >= mu[i + 1] for i in range(len(mu) - 1)):
            yield mu


def _strict_partitions(max_part: int, max_len: int):
    for length in range(min(max_len, max_part) + 1):
        for lam in combinations(range(max_part, 0, -1), length):
            yield lam


def _result_json(result) -> dict:
    return result.to_dict()


def verify_codes(
    max_part: int = 4, max_len: int = 3, samples: int = 2000, seed: int = 0
) -> VerifyReport:
    """Round trips, reduction properties, and three-way straightening agreement."""
    report = VerifyReport("codes")
    start = time.perf_counter()
    for mu in _compositions(max_part, max_len):
        word = codes.encode_code(mu)
        report.check(
            {"op": "round_trip", "index": list(mu)},
            list(mu),
            list(codes.decode_code(word)),
        )
        expected = _result_json(oracle.exponent_straighten(mu))
        report.check(
            {"op": "straighten_code", "index": list(mu)},
            expected,
            _result_json(codes.straighten_code(word)),
        )
        report.check(
            {"op": "reading_straighten", "index": list(mu)},
            expected,
            _result_json(codes.reading_straighten(word)),
        )
        # exchange-step count is bounded by the U's right of the leftmost L
        letters = word.letters
        if "L" in letters:
            bound = letters[letters.index("L") :].count("U")
            out = codes._straighten_letters(
                letters,
                lambda w: codes._exchange_step(w, virtual_prefix=True),
                codes._decode_letters,
                0,
            )
            steps = out[2] if out is not None else 0
            report.check(
                {"op": "step_bound", "index": list(mu)},
                True,
                steps <= bound,
            )
    rng = random.Random(seed)
    for case in range(samples):
        raw = "".join(rng.choice("RLU") for _ in range(rng.randrange(0, 24)))
        reduced = codes.reduce_word(raw)
        report.check(
            {"op": "reduce_idempotent", "case": case, "letters": raw},
            reduced,
            codes.reduce_word(reduced),
        )
        # cancelling adjacent RL/LR pairs in any order reaches the same word
        letters = list(raw)
        while True:
            pairs = [
                i
                for i in range(len(letters) - 1)
                if letters[i] + letters[i + 1] in ("RL", "LR")
            ]
            if not pairs:
                break
            i = rng.choice(pairs)
            del letters[i : i + 2]
        report.check(
            {"op": "reduce_any_order", "case": case, "letters": raw},
            reduced,
            "".join(letters),
        )
    for case in range(samples // 4):
        # reading_straighten tolerates non-reduced words
        length = rng.randrange(0, 4)
        mu = tuple(rng.randrange(0, max_part + 1) for _ in range(length))
        letters = list(codes.encode_code(mu).letters)
        for _ in range(rng.randrange(1, 4)):
            pos = rng.randrange(0, len(letters) + 1)
            letters[pos:pos] = rng.choice(["RL", "LR"])
        raw = "".join(letters)
        report.check(
            {"op": "reading_raw", "case": case, "letters": raw},
            _result_json(oracle.exponent_straighten(mu)),
            _result_json(codes.reading_straighten(raw)),
        )
    report.seconds = time.perf_counter() - start
    return report


def verify_bernstein(max_part: int = 4, max_len: int = 3) -> VerifyReport:
    """Action/series consistency, vanishing degrees, sup-indexes and r_index."""
    report = VerifyReport("bernstein")
    start = time.perf_counter()
    for lam in _partitions(max_part, max_len):
        l = len(lam)
        vanish = {lam[j] - (j + 1) for j in range(l)}
        n_max = max_part + 2
        window = bernstein.bernstein_series_window(lam, n_max)
        by_exp = {t.t_exp: t for t in window}
        report.check(
            {"op": "window_distinct", "index": list(lam)},
            len(window),
            len(by_exp),
        )
        for n in range(-l - 2, n_max + 1):
            result = bernstein.bn_action(n, lam)
            report.check(
                {"op": "vanishing", "index": list(lam), "n": n},
                n in vanish or n < -l,
                result.is_zero,
            )
            term = by_exp.get(n)
            report.check(
                {"op": "series_action", "index": list(lam), "n": n},
                _result_json(result),
                {"zero": True}
                if term is None
                else {"sign": term.sign, "index": list(term.index)},
            )
            if n >= 0:
                report.check(
                    {"op": "action_straighten", "index": list(lam), "n": n},
                    _result_json(codes.straighten_B((n,) + lam)),
                    _result_json(result),
                )
        report.check(
            {"op": "window_exponents", "index": list(lam)},
            sorted(n for n in range(-l, n_max + 1) if n not in vanish),
            sorted(by_exp),
        )
        for i in range(1, max_part + max_len + 2):
            sup = bernstein.lambda_sup(lam, i)  # dual routes cross-checked inside
            rows_at_least_i = sum(1 for p in lam if p >= i)
            report.check(
                {"op": "sup_index", "index": list(lam), "i": i},
                {"size": sum(lam) + i - 1 - rows_at_least_i, "partition": True},
                {"size": sum(sup), "partition": classify(sup) != "general"},
            )
        for i in range(1, l + 3):
            expected = lam[i - 1] if i <= l else 0
            report.check(
                {"op": "r_index", "index": list(lam), "i": i},
                expected,
                bernstein.r_index(lam, i),
            )
    report.seconds = time.perf_counter() - start
    return report


def verify_qvertex(
    max_part: int = 4, max_len: int = 3, min_part: int = 0, window_pad: int = 5
) -> VerifyReport:
    """Two-route straightening agreement, action laws and series-form equivalence."""
    report = VerifyReport("qvertex")
    start = time.perf_counter()
    for mu in _compositions(max_part, max_len, min_part):
        report.check(
            {"op": "straighten_Y", "index": list(mu)},
            _result_json(qvertex.straighten_Y_perm(mu)),
            _result_json(qvertex.straighten_Y_code(mu)),
        )
    for m in range(max_part + 1):
        for n in range(max_part + 1):
            if m != n:
                report.check(
                    {"op": "anticommute", "index": [m, n]},
                    _result_json(negate(qvertex.straighten_Y_perm((n, m)))),
                    _result_json(qvertex.straighten_Y_perm((m, n))),
                )
    for lam in _strict_partitions(max_part, max_len):
        top = lam[0] if lam else 0
        for n in range(0, max_part + 3):
            result = qvertex.yn_action(n, lam)
            report.check(
                {"op": "yn_zero", "index": list(lam), "n": n},
                n in lam,
                result.is_zero,
            )
            report.check(
                {"op": "yn_straighten", "index": list(lam), "n": n},
                _result_json(qvertex.straighten_Y_perm((n,) + lam)),
                _result_json(result),
            )
        n_max = top + window_pad
        j_terms = qvertex.q_series_j_form(lam, n_max)
        i_terms = qvertex.q_series_i_form(lam, n_max + len(lam))
        in_window = [t for t in i_terms if t.n <= n_max]
        report.check(
            {"op": "series_forms", "index": list(lam), "n_max": n_max},
            [t.to_dict() for t in j_terms],
            sorted((t.to_dict() for t in in_window), key=lambda d: d["t_exp"]),
        )
        for term in j_terms:
            report.check(
                {"op": "series_strict", "index": list(lam), "n": term.n},
                "strict-partition",
                classify(term.index),
            )
    report.seconds = time.perf_counter() - start
    return report


def verify_shifted(max_part: int = 4, max_len: int = 3, i_max: int = 10) -> VerifyReport:
    """Shifted round trips, preshift consistency and shared straightening."""
    report = VerifyReport("shifted")
    start = time.perf_counter()
    for mu in _compositions(max_part, max_len, 1):
        word = shifted.encode_shifted(mu)
        report.check(
            {"op": "round_trip", "index": list(mu)},
            list(mu),
            list(shifted.decode_shifted(word)),
        )
        report.check(
            {"op": "preshift", "index": list(mu)},
            word.letters,
            shifted.preshift(codes.encode_code(mu)).strip_prefix().letters,
        )
        report.check(
            {"op": "shifted_straighten", "index": list(mu)},
            _result_json(qvertex.straighten_Y_perm(mu)),
            _result_json(shifted.shifted_straighten(word)),
        )
    for lam in _strict_partitions(max_part, max_len):
        if not lam:
            continue
        for i in range(1, i_max + 1):
            report.check(
                {"op": "bracket_shifted", "index": list(lam), "i": i},
                list(qvertex.lambda_bracket(lam, i)),
                list(shifted.lambda_bracket_shifted(lam, i)),
            )
    report.cases += 1
    try:
        shifted.preshift(codes.encode_code((2, 0)))
    except DomainError:
        pass
    else:
        report.fail({"op": "preshift_zero_row", "index": [2, 0]}, "DomainError", "no error")
    report.seconds = time.perf_counter() - start
    return report


def verify_oracle(max_part: int = 3, max_len: int = 3, seed: int = 0) -> VerifyReport:
    """Polynomial-level checks: exchange antisymmetry and the straightening law."""
    report = VerifyReport("oracle")
    start = time.perf_counter()
    for nvars in range(min(max_len, 5) + 1):
        report.check(
            {"op": "vandermonde", "nvars": nvars},
            True,
            oracle.bialternant(oracle.staircase(nvars)) == oracle.vandermonde_product(nvars),
        )
    rng = random.Random(seed)
    for case in range(300):
        n = rng.randint(2, 4)
        exps = tuple(rng.randint(0, max_part + n) for _ in range(n))
        i = rng.randrange(n - 1)
        swapped = list(exps)
        swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
        report.check(
            {"op": "exchange", "exponents": list(exps), "i": i},
            True,
            oracle.bialternant(tuple(swapped)) == -oracle.bialternant(exps),
        )
    for mu in _compositions(max_part, max_len):
        result = oracle.exponent_straighten(mu)
        report.check(
            {"op": "exponent_vs_code", "index": list(mu)},
            _result_json(codes.straighten_B(mu)),
            _result_json(result),
        )
        if not mu:
            continue
        poly = oracle.schur_poly(mu, len(mu))
        if result.is_zero:
            report.check(
                {"op": "schur_law", "index": list(mu)}, True, poly.is_zero
            )
        else:
            target = oracle.schur_poly(result.index, len(mu))
            if result.sign < 0:
                target = -target
            report.check(
                {"op": "schur_law", "index": list(mu)}, True, poly == target
            )
    report.seconds = time.perf_counter() - start
    return report


_CORPUS_OPS = {
    "parse_index": lambda a: {"index": list(parse_index(a["text"]))},
    "classify": lambda a: {"kind": classify(tuple(a["index"]))},
    "reduce_word": lambda a: {"letters": codes.reduce_word(a["letters"])},
    "encode_code": lambda a: {"letters": codes.encode_code(tuple(a["index"])).letters},
    "decode_code": lambda a: {"index": list(codes.decode_code(a["letters"]))},
    "straighten_code": lambda a: codes.straighten_code(a["letters"]).to_dict(),
    "reading_straighten": lambda a: codes.reading_straighten(a["letters"]).to_dict(),
    "straighten_B": lambda a: codes.straighten_B(tuple(a["index"])).to_dict(),
    "exponent_straighten": lambda a: oracle.exponent_straighten(
        tuple(a["index"])
    ).to_dict(),
    "bn_action": lambda a: bernstein.bn_action(a["n"], tuple(a["index"])).to_dict(),
    "lambda_sup": lambda a: {
        "index": list(bernstein.lambda_sup(tuple(a["index"]), a["i"]))
    },
    "r_index": lambda a: {"value": bernstein.r_index(tuple(a["index"]), a["i"])},
    "bernstein_series": lambda a: {
        "terms": [t.to_dict() for t in bernstein.bernstein_series(tuple(a["index"]), a["i_max"])]
    },
    "bernstein_series_window": lambda a: {
        "terms": [
            t.to_dict()
            for t in bernstein.bernstein_series_window(tuple(a["index"]), a["n_max"])
        ]
    },
    "straighten_Y_perm": lambda a: qvertex.straighten_Y_perm(tuple(a["index"])).to_dict(),
    "straighten_Y_code": lambda a: qvertex.straighten_Y_code(tuple(a["index"])).to_dict(),
    "yn_action": lambda a: qvertex.yn_action(a["n"], tuple(a["index"])).to_dict(),
    "lambda_bracket": lambda a: {
        "index": list(qvertex.lambda_bracket(tuple(a["index"]), a["i"]))
    },
    "q_series_j_form": lambda a: {
        "terms": [t.to_dict() for t in qvertex.q_series_j_form(tuple(a["index"]), a["n_max"])]
    },
    "q_series_i_form": lambda a: {
        "terms": [t.to_dict() for t in qvertex.q_series_i_form(tuple(a["index"]), a["i_max"])]
    },
    "encode_shifted": lambda a: {
        "letters": shifted.encode_shifted(tuple(a["index"])).letters
    },
    "decode_shifted": lambda a: {"index": list(shifted.decode_shifted(a["letters"]))},
    "shifted_straighten": lambda a: shifted.shifted_straighten(a["letters"]).to_dict(),
    "preshift": lambda a: {"letters": shifted.preshift(a["letters"]).letters},
    "lambda_bracket_shifted": lambda a: {
        "index": list(shifted.lambda_bracket_shifted(tuple(a["index"]), a["i"]))
    },
    "schur_poly": lambda a: {
        "poly": oracle.schur_poly(tuple(a["index"]), a["nvars"]).render()
    },
    "bialternant": lambda a: {"poly": oracle.bialternant(tuple(a["exponents"])).render()},
}


def corpus_lines(path: str | None = None) -> list[str]:
    """Raw JSON lines of the worked-example corpus (shipped copy by default)."""
    if path is not None:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    else:
        text = (
            resources.files("codecalc").joinpath("data/corpus.jsonl").read_text("utf-8")
        )
    return [line for line in text.splitlines() if line.strip()]


def verify_corpus(path: str | None = None) -> VerifyReport:
    """Replay every corpus entry and require canonical-JSON-identical results."""
    import json

    report = VerifyReport("corpus")
    start = time.perf_counter()
    for lineno, line in enumerate(corpus_lines(path), start=1):
        entry = json.loads(line)
        op = entry["op"]
        handler = _CORPUS_OPS.get(op)
        report.cases += 1
        if handler is None:
            report.fail({"line": lineno, "op": op}, "known op", "unknown op")
            continue
        try:
            got = handler(entry["args"])
        except CalcError as exc:
            report.fail(
                {"line": lineno, "op": op, "args": entry["args"]},
                entry["expected"],
                f"{type(exc).__name__}: {exc}",
            )
            continue
        emitted = canonical_json(got)
        if emitted != canonical_json(entry["expected"]):
            report.fail(
                {"line": lineno, "op": op, "args": entry["args"]},
                entry["expected"],
                got,
            )
        elif canonical_json(json.loads(emitted)) != emitted:
            report.fail(
                {"line": lineno, "op": op, "args": entry["args"]},
                "byte-identical round trip",
                emitted,
            )
    report.seconds = time.perf_counter() - start
    return report


SUITES = {
    "codes": verify_codes,
    "bernstein": verify_bernstein,
    "qvertex": verify_qvertex,
    "shifted": verify_shifted,
    "oracle": verify_oracle,
    "corpus": verify_corpus,
}
