"""Exhaustive surveys of g-vector signs over operator words of one length."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from .flagops import evaluate
from .gvec import GVector, IndexSet, effective_closure_check, g_vector
from .words import FibonacciIndex, enumerate_indexes, format_word

__all__ = [
    "MAX_DEGREE",
    "survey_words",
    "SurveyRecord",
    "SurveyReport",
    "survey",
    "worker_count",
    "closure_search",
]

log = logging.getLogger(__name__)

MAX_DEGREE = 8
THREADS_ENV = "GCOMPLETE_THREADS"


def survey_words(d: int) -> list[str]:
    """All ``3**(d-1)`` words of length ``d`` over ``B, C, I`` ending in ``C``, sorted."""
    if d < 1:
        raise ValueError("word length must be at least 1")
    return ["".join(w) + "C" for w in product("BCI", repeat=d - 1)]


@dataclass(frozen=True)
class SurveyRecord:
    word: str
    g: GVector

    @property
    def negative(self) -> dict:
        return self.g.negative()


@dataclass
class SurveyReport:
    degree: int
    records: list = field(default_factory=list)
    oracle_mismatches: list | None = None  # None when not verified

    @property
    def exceptional(self) -> list[FibonacciIndex]:
        """Indexes with a negative value on some word, in canonical order."""
        hit = set()
        for rec in self.records:
            hit.update(rec.negative)
        return [k for k in enumerate_indexes(self.degree) if k in hit]

    @property
    def witnesses(self) -> dict:
        out = {k: [] for k in self.exceptional}
        for rec in self.records:
            for k in rec.negative:
                out[k].append(rec.word)
        return out

    def to_text(self, show_witnesses: bool = False) -> str:
        lines = [f"degree {self.degree}: {len(self.records)} words"]
        exc = self.exceptional
        lines.append("exceptional: " + (" ".join(map(str, exc)) if exc else "none"))
        for k, words in self.witnesses.items():
            worst = min(words, key=lambda w: self._value(w, k))
            lines.append(
                f"{k}  witnesses={len(words)}  min={self._value(worst, k)} ({format_word(worst)})"
            )
            if show_witnesses:
                lines.extend(f"    {format_word(w)}  {self._value(w, k)}" for w in words)
        if self.oracle_mismatches is not None:
            lines.append(f"oracle mismatches: {len(self.oracle_mismatches)}")
        return "\n".join(lines) + "\n"

    def _value(self, word, k):
        return self._by_word[word].g.values[k]

    @cached_property
    def _by_word(self):
        return {rec.word: rec for rec in self.records}

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["word", "index", "g_value"])
        for rec in self.records:
            for k, v in rec.g.values.items():
                out.writerow([format_word(rec.word), str(k), str(v)])
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        obj = {
            "degree": self.degree,
            "words": [
                {
                    "word": format_word(rec.word),
                    "g": [{"index": str(k), "value": str(v)} for k, v in rec.g.values.items()],
                    "negative": [str(k) for k in rec.g.values if k in rec.negative],
                }
                for rec in self.records
            ],
            "exceptional": [str(k) for k in self.exceptional],
            "witnesses": {str(k): [format_word(w) for w in ws] for k, ws in self.witnesses.items()},
        }
        if self.oracle_mismatches is not None:
            obj["oracle_mismatches"] = [format_word(w) for w in self.oracle_mismatches]
        return obj

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_json_obj(), **kw)

    def render(self, fmt: str = "text", show_witnesses: bool = False) -> str:
        if fmt == "text":
            return self.to_text(show_witnesses)
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json(indent=1) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def worker_count() -> int:
    """Workers from ``GCOMPLETE_THREADS``: unset means 1, 0 means one per CPU."""
    raw = os.environ.get(THREADS_ENV, "1").strip() or "1"
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{THREADS_ENV} must be >= 0")
    return n or os.cpu_count() or 1


def _g_chunk(words):
    return [(w, g_vector(evaluate(w))) for w in words]


def _oracle_chunk(words):
    from .lattice import flags_of_lattice, lattice_of_word

    return [w for w in words if flags_of_lattice(lattice_of_word(w)) != evaluate(w)]


def _fan_out(fn, words, workers):
    if workers <= 1 or len(words) < 2 * workers:
        return fn(words)
    size = -(-len(words) // workers)
    chunks = [words[i:i + size] for i in range(0, len(words), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves chunk order, so the merge is canonical
        return [item for part in pool.map(fn, chunks) for item in part]


def survey(d: int, verify: bool = False, workers: int | None = None,
           max_degree: int = MAX_DEGREE) -> SurveyReport:
    """g-vectors of every length-``d`` word ending in ``C``.

    With ``verify`` each flag vector is also recounted on its face lattice.
    """
    if not 1 <= d <= max_degree:
        raise ValueError(f"degree must be between 1 and {max_degree}, got {d}")
    workers = worker_count() if workers is None else workers
    words = survey_words(d)
    log.info("surveying %d words of length %d with %d worker(s)", len(words), d, workers)
    records = [SurveyRecord(w, g) for w, g in _fan_out(_g_chunk, words, workers)]
    report = SurveyReport(d, records)
    if verify:
        report.oracle_mismatches = _fan_out(_oracle_chunk, words, workers)
    return report


def closure_search(s_d: IndexSet, s_d1: IndexSet, words=None) -> dict:
    """Run the C/I/B closure check over ``words`` (default: every survey word of degree ``s_d``).

    Returns ``{word: ClosureReport}`` for the words where the check fails.
    """
    words = survey_words(s_d.degree) if words is None else words
    failures = {}
    for w in words:
        report = effective_closure_check(s_d, s_d1, evaluate(w))
        if not report.holds:
            failures[w] = report
    return failures
