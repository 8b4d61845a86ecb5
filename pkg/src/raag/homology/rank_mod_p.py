"""
Rank over the field with p elements.

Small matrices are copied into a numpy array and reduced by a compiled
dense kernel. Big ones, which are always very sparse here, are reduced
row by row with Markowitz-style pivoting: take the column with the
fewest entries, then the row in it with the fewest entries,
lowest index on ties. Both give the same answer; the choice is purely
about speed.
"""

import heapq

from numba import njit
import numpy as np

from raag.config import dense_rank_limit
from raag.homology.primes import require_prime

# Largest modulus for which products of residues still fit in an int64.
_max_dense_prime = 2**31


def rank_mod_p(matrix, p):
    require_prime(p)
    if matrix.is_zero():
        return 0
    if matrix.n_rows * matrix.n_cols <= dense_rank_limit and p < _max_dense_prime:
        return dense_rank_mod_p(matrix, p)
    return sparse_rank_mod_p(matrix, p)


def dense_rank_mod_p(matrix, p):
    a = np.zeros(matrix.shape, dtype=np.int64)
    for (row, col), value in matrix.entries.items():
        a[row, col] = value % p
    return int(_dense_rank_kernel(a, p))


@njit(cache=True)
def _inverse_mod(a, p):
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    return t % p


@njit(cache=True)
def _dense_rank_kernel(a, p):
    n_rows, n_cols = a.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = -1
        for row in range(rank, n_rows):
            if a[row, col] != 0:
                pivot = row
                break
        if pivot < 0:
            continue
        # Entries left of `col` are already zero below the pivot rows.
        if pivot != rank:
            for j in range(col, n_cols):
                tmp = a[rank, j]
                a[rank, j] = a[pivot, j]
                a[pivot, j] = tmp
        inverse = _inverse_mod(a[rank, col], p)
        for row in range(rank + 1, n_rows):
            factor = a[row, col]
            if factor != 0:
                factor = (factor * inverse) % p
                for j in range(col, n_cols):
                    a[row, j] = (a[row, j] - factor * a[rank, j]) % p
        rank += 1
    return rank


def sparse_rank_mod_p(matrix, p):
    rows = {}
    cols = {}
    for (row, col), value in matrix.entries.items():
        value %= p
        if value:
            rows.setdefault(row, {})[col] = value
            cols.setdefault(col, set()).add(row)

    heap = [(len(members), col) for col, members in cols.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        count, col = heapq.heappop(heap)
        if col not in cols:
            continue
        if len(cols[col]) != count:
            # Stale entry. Requeue with the current count.
            heapq.heappush(heap, (len(cols[col]), col))
            continue

        pivot_row = min(cols[col], key=lambda r: (len(rows[r]), r))
        pivot_entries = rows.pop(pivot_row)
        inverse = pow(pivot_entries[col], -1, p)
        touched = set(pivot_entries)

        for row in list(cols[col]):
            if row == pivot_row:
                continue
            target = rows[row]
            factor = (target[col] * inverse) % p
            for c, value in pivot_entries.items():
                new_value = (target.get(c, 0) - factor * value) % p
                if new_value:
                    if c not in target:
                        cols[c].add(row)
                    target[c] = new_value
                elif c in target:
                    del target[c]
                    cols[c].discard(row)
            if not target:
                del rows[row]

        for c in pivot_entries:
            cols[c].discard(pivot_row)
        del cols[col]
        touched.discard(col)
        for c in touched:
            if cols[c]:
                heapq.heappush(heap, (len(cols[c]), c))
            else:
                del cols[c]
        rank += 1
    return rank
