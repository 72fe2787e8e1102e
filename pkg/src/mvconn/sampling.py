"""Deterministic argument domains for law checks.

Finite carriers are scanned exhaustively. The rational unit interval is
probed with a fixed grid of landmarks (all combinations first) followed
by seeded pseudo-random fractions with a bounded denominator.
"""
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

LANDMARKS = (Fraction(0), Fraction(1, 2), Fraction(1))


@dataclass(frozen=True)
class Sampling:
    samples: int = 10_000
    seed: int = 0
    denominator_bound: int = 64

    def as_params(self):
        return {"samples": self.samples, "seed": self.seed,
                "denominator_bound": self.denominator_bound}


DEFAULT = Sampling()


def random_fraction(rng, bound):
    q = rng.randint(1, bound)
    return Fraction(rng.randint(0, q), q)


@lru_cache(maxsize=32)
def _sampled(arity, samples, seed, bound):
    rng = random.Random(seed * 7919 + arity)
    out = list(itertools.product(LANDMARKS, repeat=arity))[:samples]
    while len(out) < samples:
        out.append(tuple(random_fraction(rng, bound) for _ in range(arity)))
    return tuple(out)


def tuples(carrier, arity, sampling=None):
    """All ``arity``-tuples of a finite carrier, or a reproducible sample."""
    if carrier.finite:
        return tuple(itertools.product(carrier.elements(), repeat=arity))
    s = sampling or DEFAULT
    return _sampled(arity, s.samples, s.seed, s.denominator_bound)


def elements(carrier, sampling=None):
    return tuple(t[0] for t in tuples(carrier, 1, sampling))


def pairs(carrier, sampling=None):
    return tuples(carrier, 2, sampling)


def triples(carrier, sampling=None):
    return tuples(carrier, 3, sampling)
