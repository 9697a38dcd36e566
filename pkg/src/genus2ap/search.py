"""Brute-force searches for progressions of square values.

Two strategies are provided:

* ``degree5``: choose y_1..y_6, interpolate the degree-5 polynomial through
  (x_k, y_k^2) and ask that it keep taking square values further along the
  progression;
* ``n19``: sextics c3 z^3 + c2 z^2 + c1 z + c0 with z = x(x-19), which are
  symmetric under x -> 19-x, so only x = 1..9 need testing for x = 1..18.

Enumeration is lexicographic over the bound ranges, outermost key first.
Work is cut into chunks along the outermost key whose range has more than
one value; chunks run on a process pool and are merged in order, so the
output never depends on the worker count.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, isqrt
from typing import Iterable, Iterator, Sequence

import numpy as np

from genus2ap.exactmath import Poly, interpolate, is_square_int, is_squarefree
from genus2ap.families import APCertificate, r5_template

log = logging.getLogger(__name__)

STRATEGIES = ("degree5", "n19")
DEGREE5_KEYS = ("y1", "y2", "y3", "y4", "y5", "y6")
N19_Z = tuple(k * (k - 19) for k in range(1, 10))
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class SearchSpec:
    """What to search and where.

    ``bounds`` maps coordinate names to inclusive integer ranges.  For
    ``degree5`` the keys are y1..y6.  For ``n19`` they are c3, c2, c1 and
    either c0, or y9: then c0 is solved so that h(9) = y9^2.
    """

    strategy: str
    bounds: dict[str, tuple[int, int]]
    x0: int = 1
    step: int = 1
    target_length: int = 12
    chunk_size: int = 1

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.target_length < 2:
            raise ValueError("target_length must be at least 2")
        if self.step == 0:
            raise ValueError("step must be nonzero")
        bounds = {k: (int(v[0]), int(v[1])) for k, v in self.bounds.items()}
        for k, (lo, hi) in bounds.items():
            if lo > hi:
                raise ValueError(f"empty range for {k}: [{lo}, {hi}]")
        if self.strategy == "degree5":
            if set(bounds) != set(DEGREE5_KEYS):
                raise ValueError(f"degree5 bounds need exactly {DEGREE5_KEYS}")
            if self.target_length < 7:
                raise ValueError("degree5 needs target_length >= 7")
        else:
            need = {"c3", "c2", "c1"}
            last = set(bounds) - need
            if not need <= set(bounds) or last not in ({"c0"}, {"y9"}):
                raise ValueError("n19 bounds need c3, c2, c1 and one of c0 / y9")
            if self.x0 != 1 or self.step != 1 or self.target_length != 18:
                raise ValueError("n19 searches the progression x = 1..18")
        object.__setattr__(self, "bounds", bounds)

    @property
    def keys(self) -> tuple[str, ...]:
        if self.strategy == "degree5":
            return DEGREE5_KEYS
        return ("c3", "c2", "c1", "y9" if "y9" in self.bounds else "c0")

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "bounds": {k: list(v) for k, v in self.bounds.items()},
            "x0": self.x0,
            "step": self.step,
            "target_length": self.target_length,
            "chunk_size": self.chunk_size,
        }

    @classmethod
    def from_dict(cls, data: dict) -> SearchSpec:
        strategy = data["strategy"]
        defaults = {"target_length": 18} if strategy == "n19" else {}
        return cls(
            strategy=strategy,
            bounds=data["bounds"],
            x0=int(data.get("x0", 1)),
            step=int(data.get("step", 1)),
            target_length=int(data.get("target_length", defaults.get("target_length", 12))),
            chunk_size=int(data.get("chunk_size", 1)),
        )

    def fingerprint(self) -> str:
        return hashlib.sha256(json.dumps(self.to_dict(), sort_keys=True).encode()).hexdigest()

    def chunks(self) -> list[SearchSpec]:
        """Sub-specs covering the box in enumeration order."""
        keys = self.keys
        split = next((k for k in keys if self.bounds[k][0] < self.bounds[k][1]), keys[0])
        lo, hi = self.bounds[split]
        size = max(1, self.chunk_size)
        out = []
        for start in range(lo, hi + 1, size):
            b = dict(self.bounds)
            b[split] = (start, min(hi, start + size - 1))
            out.append(SearchSpec(self.strategy, b, self.x0, self.step, self.target_length, self.chunk_size))
        return out


def _ranges(spec: SearchSpec) -> list[range]:
    return [range(spec.bounds[k][0], spec.bounds[k][1] + 1) for k in spec.keys]


# --------------------------------------------------------------------------
# degree 5


def extrapolation_weights(n_nodes: int, targets: Iterable[int]) -> list[list[int]]:
    """w[j][k] with p(j) = sum_k w[j][k] p(k) for deg p < n_nodes, nodes 0..n_nodes-1.

    On consecutive integer nodes these Lagrange weights are integers.
    """
    out = []
    for j in targets:
        row = []
        for k in range(n_nodes):
            w = Fraction(1)
            for m in range(n_nodes):
                if m != k:
                    w *= Fraction(j - m, k - m)
            assert w.denominator == 1
            row.append(int(w))
        out.append(row)
    return out


def _fifth_difference(vals: Sequence[int]) -> int:
    return sum((-1) ** (5 - k) * comb(5, k) * v for k, v in enumerate(vals))


def search_degree5(spec: SearchSpec) -> Iterator[APCertificate]:
    """Interpolate through six square values and keep going while the values stay square."""
    if spec.strategy != "degree5":
        raise ValueError("search_degree5 needs a degree5 spec")
    weights = extrapolation_weights(6, range(6, spec.target_length))
    # y and -y give the same square; only y >= 0 is enumerated
    r = [range(max(rg.start, 0), rg.stop) for rg in _ranges(spec)]
    for head in itertools.product(*r[:5]):
        sq_head = [y * y for y in head]
        partial = [sum(w[k] * sq_head[k] for k in range(5)) for w in weights]
        d5_head = _fifth_difference(sq_head + [0])
        for y6 in r[5]:
            s6 = y6 * y6
            if d5_head + s6 == 0:
                continue  # degree drops below 5
            ok = True
            for w, base in zip(weights, partial):
                if not is_square_int(base + w[5] * s6):
                    ok = False
                    break
            if not ok:
                continue
            cert = _degree5_certificate(spec, head + (y6,))
            if cert is not None:
                yield cert


def _degree5_certificate(spec: SearchSpec, ys6: Sequence[int]) -> APCertificate | None:
    xs = [spec.x0 + k * spec.step for k in range(6)]
    f = interpolate(xs, [y * y for y in ys6])
    if f.degree != 5 or not is_squarefree(f):
        return None
    ys = [Fraction(abs(y)) for y in ys6]
    for k in range(6, spec.target_length):
        v = f(Fraction(spec.x0 + k * spec.step))
        assert v.denominator == 1
        ys.append(Fraction(isqrt(v.numerator)))
    return APCertificate(f, Fraction(spec.x0), Fraction(spec.step), spec.target_length, tuple(ys),
                         {"strategy": "degree5", "seed": [str(y) for y in ys6]})


# --------------------------------------------------------------------------
# symmetric sextics, N = 19

_QR_TABLES = {m: np.isin(np.arange(m), [i * i % m for i in range(m)]) for m in (64, 63, 65, 11)}


def square_mask(v: np.ndarray) -> np.ndarray:
    """Boolean mask of perfect squares in an int64 array (|v| < 2**62)."""
    mask = v >= 0
    for m, table in _QR_TABLES.items():
        mask &= table[np.mod(v, m)]
    idx = np.nonzero(mask)[0]
    if idx.size:
        cand = v[idx]
        r = np.floor(np.sqrt(cand.astype(np.float64))).astype(np.int64)
        hit = (r * r == cand) | ((r + 1) * (r + 1) == cand) | ((r - 1) * (r - 1) == cand)
        mask[idx] = hit
    return mask


def _n19_value_bound(spec: SearchSpec) -> int:
    mag = {k: max(abs(lo), abs(hi)) for k, (lo, hi) in spec.bounds.items()}
    zmax = 90
    total = mag["c3"] * zmax ** 3 + mag["c2"] * zmax ** 2 + mag["c1"] * zmax
    if "c0" in mag:
        return total + mag["c0"]
    # c0 = y9^2 - (c3 z^3 + c2 z^2 + c1 z), then every value is bounded by
    return 2 * total + mag["y9"] ** 2


def _n19_exact_ok(c: Sequence[int], include_degenerate: bool) -> bool:
    c0, c1, c2, c3 = c
    for z in N19_Z:
        if not is_square_int(((c3 * z + c2) * z + c1) * z + c0):
            return False
    if include_degenerate:
        return True
    p = r5_template(c0, c1, c2, c3).poly
    return p.degree == 6 and is_squarefree(p)


def search_symmetric_n19(spec: SearchSpec, *, include_degenerate: bool = False) -> Iterator[tuple[int, int, int, int]]:
    """Yield (c0, c1, c2, c3) whose sextic takes square values at x = 1..18.

    Degenerate sextics (degree drop or repeated roots) are skipped unless
    ``include_degenerate`` is set.
    """
    if spec.strategy != "n19":
        raise ValueError("search_symmetric_n19 needs an n19 spec")
    solve_c0 = "y9" in spec.bounds
    r3, r2, r1, r0 = _ranges(spec)
    vectorized = _n19_value_bound(spec) < _INT64_SAFE
    if vectorized:
        c1_arr = np.arange(r1.start, r1.stop, dtype=np.int64)
        last_arr = np.arange(r0.start, r0.stop, dtype=np.int64)
    z9 = N19_Z[-1]
    for c3 in r3:
        for c2 in r2:
            if vectorized:
                hits = _n19_block(c3, c2, c1_arr, last_arr, solve_c0)
            else:
                hits = _n19_block_exact(c3, c2, r1, r0, solve_c0)
            for c1, last in hits:
                if solve_c0:
                    c0 = last * last - ((c3 * z9 + c2) * z9 + c1) * z9
                else:
                    c0 = last
                cand = (c0, c1, c2, c3)
                if _n19_exact_ok(cand, include_degenerate):
                    yield cand


def _n19_block(c3: int, c2: int, c1_arr: np.ndarray, last_arr: np.ndarray, solve_c0: bool):
    # rows: c1, columns: c0 (or y9); flattened row-major keeps lexicographic order
    n1, n0 = c1_arr.size, last_arr.size
    c1_flat = np.repeat(c1_arr, n0)
    last_flat = np.tile(last_arr, n1)
    z9 = N19_Z[-1]
    if solve_c0:
        c0_flat = last_flat * last_flat - ((c3 * z9 + c2) * z9 + c1_flat) * z9
        order = N19_Z[:-1]
    else:
        c0_flat = last_flat
        order = N19_Z[::-1]
    idx = np.arange(n1 * n0)
    for z in order:
        base = (c3 * z + c2) * z * z
        vals = base + c1_flat[idx] * z + c0_flat[idx]
        idx = idx[square_mask(vals)]
        if idx.size == 0:
            return []
    return [(int(c1_flat[i]), int(last_flat[i])) for i in idx]


def _n19_block_exact(c3: int, c2: int, r1: range, r0: range, solve_c0: bool):
    z9 = N19_Z[-1]
    out = []
    for c1 in r1:
        for last in r0:
            c0 = last * last - ((c3 * z9 + c2) * z9 + c1) * z9 if solve_c0 else last
            if all(is_square_int(((c3 * z + c2) * z + c1) * z + c0) for z in N19_Z):
                out.append((c1, last))
    return out


# --------------------------------------------------------------------------
# rational points of bounded height on y^2 = quartic


def scan_quartic_for_points(q: Poly, height_bound: int) -> list[tuple[Fraction, Fraction]]:
    """All (t, y), y >= 0, on y^2 = q(t) with t = a/b, |a| <= H, 1 <= b <= H, gcd(a, b) = 1.

    Ordered by denominator, then numerator.
    """
    if height_bound < 1:
        raise ValueError("height_bound must be at least 1")
    if q.degree > 4 or q.is_zero():
        raise ValueError("expected a nonzero polynomial of degree at most 4")
    L = 1
    for c in q.coeffs:
        L = L * c.denominator // gcd(L, c.denominator)
    # L^2 q has integer coefficients and the same square classes as q
    ints = [int(c * L * L) for c in q.coeffs] + [0] * (5 - len(q.coeffs))
    found = []
    H = height_bound
    for b in range(1, H + 1):
        bp = [b ** (4 - k) for k in range(5)]
        for a in range(-H, H + 1):
            if gcd(a, b) != 1:
                continue
            val = 0
            ap = 1
            for k in range(5):
                val += ints[k] * ap * bp[k]
                ap *= a
            if is_square_int(val):
                found.append((Fraction(a, b), Fraction(isqrt(val), L * b * b)))
    return found


# --------------------------------------------------------------------------
# driver: chunking, workers, JSON-lines output, checkpoints


def _result_record(spec: SearchSpec, item) -> dict:
    if spec.strategy == "degree5":
        return item.to_dict()
    c0, c1, c2, c3 = item
    return {"c0": str(c0), "c1": str(c1), "c2": str(c2), "c3": str(c3)}


def run_chunk(spec: SearchSpec) -> list[dict]:
    if spec.strategy == "degree5":
        items = search_degree5(spec)
    else:
        items = search_symmetric_n19(spec)
    return [_result_record(spec, it) for it in items]


@dataclass
class SearchRun:
    results: list = field(default_factory=list)
    chunks_done: int = 0
    chunks_total: int = 0


def run_search(spec: SearchSpec, *, workers: int = 1, output: str | None = None,
               checkpoint: str | None = None) -> SearchRun:
    """Run every chunk of ``spec``; append records to ``output`` (JSON lines).

    With ``checkpoint``, progress is recorded after each chunk and a rerun
    with the same spec skips the chunks already written.
    """
    chunks = spec.chunks()
    start = 0
    fp = spec.fingerprint()
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint) as fh:
            state = json.load(fh)
        if state.get("fingerprint") != fp:
            raise ValueError("checkpoint belongs to a different search spec")
        start = int(state["completed_chunks"])
        if output:
            with open(output, "a") as fh:
                fh.truncate(int(state.get("output_bytes", 0)))
        log.info("resuming after chunk %d of %d", start, len(chunks))
    elif output and os.path.exists(output) and checkpoint:
        open(output, "w").close()

    run = SearchRun(chunks_done=start, chunks_total=len(chunks))
    todo = chunks[start:]
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            _consume(pool.map(run_chunk, todo), run, output, checkpoint, fp)
    else:
        _consume(map(run_chunk, todo), run, output, checkpoint, fp)
    return run


def _consume(batches, run: SearchRun, output, checkpoint, fp) -> None:
    for records in batches:
        if output:
            with open(output, "a") as fh:
                for rec in records:
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
                size = fh.tell()
        run.results.extend(records)
        run.chunks_done += 1
        if checkpoint:
            tmp = checkpoint + ".tmp"
            with open(tmp, "w") as fh:
                json.dump({"fingerprint": fp, "completed_chunks": run.chunks_done,
                           "output_bytes": size if output else 0}, fh)
            os.replace(tmp, checkpoint)
