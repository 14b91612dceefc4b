"""Seeded random and adversarial colorings, and the corpus driver.

Adversarial instances are "partition colorings": the vertex set is split
into parts, each part gets a connected, mostly-red interior, and every edge
between parts is blue. The part sizes decide which branch of the extraction
fires, so each family below targets one branch.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .errors import StructuralContradiction
from .extraction import Regime, extract_ctm, extract_ctm_perturbed
from .extremal import gen_ctm_lower_bound
from .graph import Color, ColoredGraph, random_coloring, with_random_white
from .packing import oracle_has_ctm, verify_ctm

FAMILIES = (
    "random",
    "all-blue",
    "extremal-plus",
    "case1",
    "case2",
    "case3",
    "case4a",
    "case4b",
    "x1-large",
)
ORACLE_EVERY = 100  # oracle spot-check on 1% of trials
ORACLE_MAX_N = 5  # exact search is exponential; beyond this only the verifier runs


def partition_coloring(
    sizes: list[int], seed: int = 0, p_in: float = 1.0, swap: bool = False, shuffle: bool = False
) -> ColoredGraph:
    """Red-connected parts of the given sizes, blue between parts.

    Inside a part each pair is red with probability ``p_in`` and a red path
    through the part keeps it connected. ``swap`` exchanges the colors;
    ``shuffle`` relabels vertices with a seeded permutation.
    """
    rng = np.random.default_rng(seed)
    n = sum(sizes)
    table = np.full((n, n), Color.BLUE, dtype=np.uint8)
    start = 0
    for size in sizes:
        block = np.where(rng.random((size, size)) < p_in, Color.RED, Color.BLUE).astype(np.uint8)
        block = np.triu(block, 1)
        block = block + block.T
        idx = np.arange(size - 1)
        block[idx, idx + 1] = block[idx + 1, idx] = Color.RED
        table[start : start + size, start : start + size] = block
        start += size
    if swap:
        table = 1 - table
    if shuffle:
        perm = rng.permutation(n)
        table = table[np.ix_(perm, perm)]
    return ColoredGraph(table)


def two_cliques(n: int, k1: int, k2: int) -> ColoredGraph:
    """Red cliques of sizes 3n + k1 and 3n + k2, remaining vertices of ``K_{7n-2}`` as red singletons."""
    a1, a2 = 3 * n + k1, 3 * n + k2
    rest = 7 * n - 2 - a1 - a2
    if rest < 0 or k1 < k2:
        raise ValueError(f"need k1 >= k2 and k1 + k2 <= n - 2, got k1={k1}, k2={k2}")
    return partition_coloring([a1, a2] + [1] * rest)


def _fill(rng, total: int, lo: int, hi: int) -> list[int]:
    """Split ``total`` into parts of size in [lo, hi] (the last part may be smaller)."""
    out = []
    while total > 0:
        top = min(hi, total)
        size = int(rng.integers(min(lo, top), top + 1))
        out.append(size)
        total -= size
    return out


def family_sizes(family: str, n: int, t: int, rng) -> list[int] | None:
    """Part sizes aimed at one extraction branch; None when the family is empty for (n, t)."""
    N = 7 * n - 2 + 7 * t
    ceiling = 6 * n - 2 + 5 * t if t else 5 * n - 1

    def pick(lo, hi):
        return int(rng.integers(lo, hi + 1)) if lo <= hi else None

    if family == "case1":
        x2 = pick(3 * n + 2 * t, (N - 0) // 2)
        if x2 is None:
            return None
        x1 = pick(x2, min(ceiling, N - x2))
        if x1 is None:
            return None
        return [x1, x2] + _fill(rng, N - x1 - x2, 1, x2)
    if family in ("case2", "case3"):
        lo2, hi2 = (2 * n + 2 * t, 3 * n + 2 * t - 1) if family == "case2" else (n + 2 * t, 2 * n + 2 * t - 1)
        x2 = pick(lo2, hi2)
        x1 = pick(max(3 * n + 2 * t, x2 or 0), min(ceiling, N - (x2 or 0)))
        if x1 is None or x2 is None:
            return None
        return [x1, x2] + _fill(rng, N - x1 - x2, 1, x2)
    if family == "case4a":
        if rng.random() < 0.5:
            x1 = pick(3 * n + 2 * t, ceiling)
            cap = n + 2 * t - 1
        else:
            x1 = pick(n + 2 * t, 3 * n + 2 * t - 1)
            cap = x1
        if x1 is None or cap is None or cap < 1:
            return None
        return [x1] + _fill(rng, N - x1, 1, cap)
    if family == "case4b":
        cap = n + 2 * t - 1
        if cap < 3:
            return None
        return _fill(rng, N, 3, cap)
    if family == "x1-large":
        lo = 6 * n - 1 + 5 * t if t else 5 * n
        x1 = pick(lo, N - 2)
        if x1 is None:
            return None
        return [x1] + _fill(rng, N - x1, 1, N - x1)
    raise ValueError(f"unknown family {family!r}")


def make_instance(family: str, n: int, t: int, seed: int) -> ColoredGraph | None:
    """Instance of ``family`` on ``7n - 2 + 7t`` vertices (None if the family is empty here)."""
    rng = np.random.default_rng(seed)
    N = 7 * n - 2 + 7 * t
    if family == "random":
        g = random_coloring(N, seed)
    elif family == "all-blue":
        g = ColoredGraph.monochromatic(N, Color.BLUE if rng.random() < 0.5 else Color.RED)
    elif family == "extremal-plus":
        base = gen_ctm_lower_bound(n).table
        table = np.full((N, N), Color.BLUE, dtype=np.uint8)
        table[: base.shape[0], : base.shape[0]] = base
        perm = rng.permutation(N)
        g = ColoredGraph(table[np.ix_(perm, perm)])
    else:
        sizes = family_sizes(family, n, t, rng)
        if sizes is None:
            return None
        p_in = float(rng.choice([1.0, 0.9, 0.75]))
        g = partition_coloring(sizes, seed=seed, p_in=p_in, swap=bool(rng.random() < 0.5), shuffle=True)
    if t:
        g = with_random_white(g, t, seed)
    return g


def trial_seed(seed: int, n: int, t: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, n, t, index]).generate_state(1, dtype=np.uint64)[0] >> 1)


@dataclass
class CorpusReport:
    trials: int = 0
    verified: int = 0
    skipped: int = 0
    oracle_checks: int = 0
    regimes: Counter = field(default_factory=Counter)
    per_n: dict = field(default_factory=dict)
    finder: Counter = field(default_factory=Counter)

    def merge(self, other: "CorpusReport") -> None:
        self.trials += other.trials
        self.verified += other.verified
        self.skipped += other.skipped
        self.oracle_checks += other.oracle_checks
        self.regimes.update(other.regimes)
        self.finder.update(other.finder)
        for key, counts in other.per_n.items():
            self.per_n.setdefault(key, Counter()).update(counts)

    def zero_hit(self) -> list[str]:
        return [r.value for r in Regime if self.regimes[r.value] == 0]

    def render(self) -> str:
        lines = [f"trials={self.trials} verified={self.verified} skipped={self.skipped} oracle_checks={self.oracle_checks}"]
        lines.append("finder " + " ".join(f"{k}={self.finder[k]}" for k in sorted(self.finder)))
        for r in Regime:
            lines.append(f"regime {r.value} {self.regimes[r.value]}")
        for key in sorted(self.per_n):
            n, t = key
            counts = self.per_n[key]
            body = " ".join(f"{r.value}={counts[r.value]}" for r in Regime)
            lines.append(f"n={n} t={t} {body}")
        zero = self.zero_hit()
        lines.append("zero-hit " + (",".join(zero) if zero else "none"))
        return "\n".join(lines) + "\n"


class CorpusFailure(RuntimeError):
    def __init__(self, message: str, n: int, t: int, index: int, seed: int):
        super().__init__(f"{message} (n={n} t={t} trial={index} seed={seed})")
        self.seed = seed


def run_trial(n: int, t: int, index: int, seed: int) -> CorpusReport:
    """One corpus trial; the family cycles with the trial index."""
    family = FAMILIES[index % len(FAMILIES)]
    s = trial_seed(seed, n, t, index)
    report = CorpusReport(trials=1)
    g = make_instance(family, n, t, s)
    if g is None:
        report.skipped = 1
        return report
    try:
        if t:
            w, trace = extract_ctm_perturbed(g, n, t, stats=report.finder)
        else:
            w, trace = extract_ctm(g, n, stats=report.finder)
    except StructuralContradiction as exc:
        raise CorpusFailure(f"{family}: structural contradiction: {exc}", n, t, index, s) from exc
    verdict = verify_ctm(g, w, n)
    if not verdict:
        raise CorpusFailure(f"{family}: witness rejected ({verdict.reason})", n, t, index, s)
    report.verified = 1
    report.regimes[trace.regime.value] += 1
    report.per_n[(n, t)] = Counter({trace.regime.value: 1})
    if index % ORACLE_EVERY == 0 and n <= ORACLE_MAX_N:
        if oracle_has_ctm(g, w.color, n) is None:
            raise CorpusFailure(f"{family}: oracle disagrees with extracted witness", n, t, index, s)
        report.oracle_checks = 1
    return report


def _run_chunk(args) -> CorpusReport:
    n, t, indices, seed = args
    out = CorpusReport()
    for i in indices:
        out.merge(run_trial(n, t, i, seed))
    return out


def run_corpus(ns, trials: int, seed: int, t: int = 0, jobs: int = 1) -> CorpusReport:
    """Run ``trials`` trials for every n in ``ns``; results do not depend on ``jobs``."""
    tasks = []
    for n in ns:
        idx = list(range(trials))
        chunk = max(1, trials // max(1, jobs))
        tasks.extend((n, t, idx[i : i + chunk], seed) for i in range(0, trials, chunk))
    report = CorpusReport()
    if jobs <= 1:
        for task in tasks:
            report.merge(_run_chunk(task))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_chunk, tasks):
                report.merge(part)
    return report
