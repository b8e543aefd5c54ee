"""Frobenius conjugacy classes in mod-l Galois representations of elliptic curves."""

import json

from ._core import FrobclassError, count_points, default_seed, scan_tsv
from ._core import classify_json as _classify_json
from ._core import classtable as _classtable
from ._core import selftest as _selftest

__all__ = ["FrobclassError", "classify", "classtable", "count_points", "default_seed", "scan", "selftest"]


def classify(job, seed=None):
    """Classify a job given as a dict (same schema as the CLI job files)."""
    text = job if isinstance(job, str) else json.dumps(job)
    return json.loads(_classify_json(text, seed, "json"))


def classtable(l):
    return [json.loads(line) for line in _classtable(l).splitlines()]


def selftest(seed=None, inject_fault=False):
    """Returns {suite: failures}; empty lists mean the suite passed."""
    return {name: failures for name, _, failures in _selftest(seed, inject_fault)}


def scan(curve, ls, primes, threads=1, seed=None, global_exponent=1):
    """Rows of a multi-prime scan as dicts; summary lines are dropped."""
    text = scan_tsv(json.dumps(curve), list(ls), primes, threads, seed, global_exponent)
    lines = [x for x in text.splitlines() if not x.startswith("#")]
    header = lines[0].split("\t")
    return [dict(zip(header, x.split("\t"))) for x in lines[1:]]
