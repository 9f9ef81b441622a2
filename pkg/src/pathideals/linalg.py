"""Matrix rank over a prime field."""

from __future__ import annotations

import numpy as np

DENSE_COLUMN_LIMIT = 2000


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def rank_mod_p(matrix, p: int) -> int:
    """Rank of an integer matrix over GF(p).

    Accepts a 2-D array-like, or a list of sparse rows given as
    ``{column: value}`` dicts. Dense elimination is used for narrow matrices
    and sparse row reduction otherwise.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(matrix, list) and matrix and isinstance(matrix[0], dict):
        ncols = 1 + max((max(r) for r in matrix if r), default=-1)
        if ncols < DENSE_COLUMN_LIMIT:
            dense = np.zeros((len(matrix), max(ncols, 1)), dtype=np.int64)
            for i, row in enumerate(matrix):
                for j, v in row.items():
                    dense[i, j] = v
            return _dense_rank(dense, p)
        return _sparse_rank(matrix, p)
    a = np.asarray(matrix, dtype=np.int64)
    if a.size == 0:
        return 0
    if a.shape[1] >= DENSE_COLUMN_LIMIT:
        rows = [{j: int(v) for j, v in enumerate(r) if v % p} for r in a]
        return _sparse_rank(rows, p)
    return _dense_rank(a, p)


def _dense_rank(a: np.ndarray, p: int) -> int:
    a = np.mod(a, p)
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = a[rank + 1 :, col]
        nzb = np.nonzero(below)[0]
        if nzb.size:
            rows = rank + 1 + nzb
            a[rows] = (a[rows] - np.outer(a[rows, col], a[rank])) % p
        rank += 1
    return rank


def _sparse_rank(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {j: v % p for j, v in row.items() if v % p}
        while r:
            lead = min(r)
            prow = pivots.get(lead)
            if prow is None:
                inv = pow(r[lead], p - 2, p)
                pivots[lead] = {j: v * inv % p for j, v in r.items()}
                break
            f = r[lead]
            for j, v in prow.items():
                nv = (r.get(j, 0) - f * v) % p
                if nv:
                    r[j] = nv
                else:
                    r.pop(j, None)
    return len(pivots)
