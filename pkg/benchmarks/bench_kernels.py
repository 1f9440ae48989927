#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Each case runs the same workload through both backends by driving the
backend modules directly (the package-level selection is bypassed), and
reports wall time plus the speedup of the compiled path.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from latdeg._kernels import available_backends, get_backend
from latdeg.groups import make_dihedral, make_symmetric


def _subgroup_masks(backend, table_rows):
    """Join-closure enumeration, the closure-heavy workload."""
    tab = backend.prepare_table(table_rows)
    masks = [1]
    seen = {1}
    for a in range(1, len(table_rows)):
        m = backend.closure_mask(tab, 1 << a)
        if m not in seen:
            seen.add(m)
            masks.append(m)
    work = [(i, j) for i in range(len(masks)) for j in range(i)]
    while work:
        i, j = work.pop()
        a, b = masks[i], masks[j]
        if a | b in (a, b):
            continue
        joined = backend.closure_mask(tab, a | b)
        if joined not in seen:
            seen.add(joined)
            masks.append(joined)
            k = len(masks) - 1
            work.extend((k, t) for t in range(k))
    return tab, masks


def bench_lattice(backend, group):
    _subgroup_masks(backend, group.table)


def bench_bracket_table(backend, group):
    tab, masks = _subgroup_masks(backend, group.table)
    for a in masks:
        for b in masks:
            backend.commutator_closure_mask(tab, a, b)


def bench_centralizers(backend, group):
    tab, masks = _subgroup_masks(backend, group.table)
    for a in masks:
        for b in masks:
            backend.centralizer_mask(tab, a, b)


def bench_tuple_commutators(backend, group):
    tab = backend.prepare_table(group.table)
    full = (1 << group.order) - 1
    backend.count_trivial_iterated_commutators(tab, 3, full)


CASES = [
    ("lattice enumeration D(30)", bench_lattice, make_dihedral(30)),
    ("bracket table D(15)", bench_bracket_table, make_dihedral(15)),
    ("centralizer matrix D(15)", bench_centralizers, make_dihedral(15)),
    ("iterated commutators S(4), depth 3", bench_tuple_commutators, make_symmetric(4)),
]


def run(repeat: int) -> None:
    backends = available_backends()
    print(f"available backends: {', '.join(backends)}")
    header = f"{'case':40s}" + "".join(f"{name:>12s}" for name in backends)
    if "fast" in backends:
        header += f"{'speedup':>10s}"
    print(header)
    print("-" * len(header))
    for name, fn, group in CASES:
        times = {}
        for bname in backends:
            backend = get_backend(bname)
            best = min(
                _timed(fn, backend, group) for _ in range(repeat)
            )
            times[bname] = best
        row = f"{name:40s}" + "".join(f"{times[b] * 1e3:10.1f}ms" for b in backends)
        if "fast" in times:
            row += f"{times['pure'] / times['fast']:9.1f}x"
        print(row)


def _timed(fn, backend, group) -> float:
    start = time.perf_counter()
    fn(backend, group)
    return time.perf_counter() - start


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="best-of repetitions")
    run(parser.parse_args().repeat)
