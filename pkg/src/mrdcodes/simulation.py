"""Seeded Monte-Carlo trials: encode, corrupt, decode, tally."""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field

from .channels import (ModelAParams, ModelBParams, apply_error, sample_model_a_error,
                       sample_model_b_error)
from .codes import CodeSpec, encode
from .decoders import decode
from .errors import DecodeAmbiguous, RankCodeError
from .linpoly import random_rank_t
from .channels import ErrorPattern


@dataclass
class TrialStats:
    trials: int = 0
    successes: int = 0
    failures: int = 0
    ambiguous: int = 0
    wrong: int = 0
    branch_histogram: Counter = field(default_factory=Counter)
    mean_decode_micros: float | None = None

    def to_dict(self):
        return {
            "trials": self.trials,
            "successes": self.successes,
            "failures": self.failures,
            "ambiguous": self.ambiguous,
            "wrong": self.wrong,
            "branch_histogram": dict(sorted(self.branch_histogram.items())),
            "mean_decode_micros": self.mean_decode_micros,
        }


def trial_rng(seed, i):
    return random.Random(f"{seed}/{i}")


def draw_error(spec: CodeSpec, model, t, rng) -> ErrorPattern:
    ctx = spec.ctx
    if isinstance(model, ModelAParams):
        return sample_model_a_error(ctx, model, spec.k, t, rng)
    if isinstance(model, ModelBParams):
        return sample_model_b_error(ctx, model, rng)
    return ErrorPattern.from_poly(random_rank_t(ctx, t, rng))


def run_trials(spec: CodeSpec, model, t, trials, seed=0, timing=False) -> TrialStats:
    """Trial i draws everything from ``random.Random(f"{seed}/{i}")``.

    A trial succeeds when the decoded message equals the transmitted one.
    Ambiguous decodes (several verified candidates) are counted separately
    from outright failures, and ``wrong`` counts decodes that returned a
    different message.
    """
    ctx = spec.ctx
    stats = TrialStats()
    elapsed = 0.0
    for i in range(trials):
        rng = trial_rng(seed, i)
        m = [ctx.random_element(rng) for _ in range(spec.k)]
        e = draw_error(spec, model, t, rng)
        r = apply_error(encode(spec, m), e)
        stats.trials += 1
        start = time.perf_counter()
        try:
            rep = decode(spec, model, r)
        except DecodeAmbiguous:
            stats.ambiguous += 1
            stats.branch_histogram["Ambiguous"] += 1
            continue
        except RankCodeError:
            stats.failures += 1
            stats.branch_histogram["Failure"] += 1
            continue
        finally:
            elapsed += time.perf_counter() - start
        stats.branch_histogram[rep.branch] += 1
        if rep.message == m:
            stats.successes += 1
        else:
            stats.wrong += 1
            stats.failures += 1
    if timing and trials:
        stats.mean_decode_micros = round(elapsed / trials * 1e6, 1)
    return stats
