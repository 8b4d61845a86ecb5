"""
Smith normal form over the integers.

Boundary matrices are mostly +1/-1 entries, so the work is split in two.
First every unit entry that can serve as a pivot is eliminated sparsely,
each contributing a 1 to the diagonal. Whatever is left is usually tiny
and goes through a dense elimination that always pivots on the entry
of smallest absolute value, which keeps coefficient growth in check.
"""

from math import gcd


class SNFResult:
    """
    diagonal: the Smith diagonal d_1 | d_2 | ... padded with zeros
    to min(rows, cols) entries.
    rank: the number of nonzero diagonal entries.
    """

    def __init__(self, diagonal):
        self.diagonal = tuple(diagonal)
        self.rank = sum(1 for d in self.diagonal if d != 0)

    def __eq__(self, other):
        if not isinstance(other, SNFResult):
            return NotImplemented
        return self.diagonal == other.diagonal

    def __repr__(self):
        return f"SNFResult(diagonal={self.nonzero()}, rank={self.rank})"

    def nonzero(self):
        return self.diagonal[: self.rank]

    def torsion(self):
        """
        The diagonal entries bigger than one.
        """
        return tuple(d for d in self.diagonal if d > 1)


def smith_normal_form(matrix):
    rows = matrix.rows_as_dicts()
    cols = {}
    for row, entries in rows.items():
        for col in entries:
            cols.setdefault(col, set()).add(row)

    n_units = _eliminate_unit_pivots(rows, cols)
    remainder = _dense_remainder(rows, cols)
    factors = divisibility_chain(_dense_smith(remainder))

    nonzero = [1] * n_units + factors
    n_zeros = min(matrix.n_rows, matrix.n_cols) - len(nonzero)
    return SNFResult(nonzero + [0] * n_zeros)


def divisibility_chain(values):
    """
    Rearrange nonzero diagonal entries into d_1 | d_2 | ... without
    changing the abelian group they present.
    """
    values = [abs(v) for v in values if v != 0]
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            g = gcd(values[i], values[j])
            values[i], values[j] = g, values[i] * values[j] // g
    return sorted(values)


def invariant_factors(orders):
    """
    Canonical form for a direct sum of cyclic groups Z/t:
    the invariant factors, each bigger than one, in ascending order.
    """
    return tuple(t for t in divisibility_chain(orders) if t > 1)


def _eliminate_unit_pivots(rows, cols):
    n_pivots = 0
    progress = True
    while progress:
        progress = False
        for col in sorted(cols):
            if col not in cols:
                continue
            best = None
            for row in cols[col]:
                if abs(rows[row][col]) == 1:
                    # Sparsest row first to limit fill-in, lowest index on ties.
                    key = (len(rows[row]), row)
                    if best is None or key < best:
                        best = key
            if best is None:
                continue
            _unit_pivot(rows, cols, best[1], col)
            n_pivots += 1
            progress = True
    return n_pivots


def _unit_pivot(rows, cols, pivot_row, pivot_col):
    # Clear the pivot column with row operations. The pivot's own row
    # can then be cleared by column operations that touch nothing else,
    # so the row and column are simply dropped.
    pivot_entries = rows.pop(pivot_row)
    sign = pivot_entries[pivot_col]
    for row in list(cols[pivot_col]):
        if row == pivot_row:
            continue
        target = rows[row]
        factor = target[pivot_col] * sign
        for col, value in pivot_entries.items():
            new_value = target.get(col, 0) - factor * value
            if new_value:
                if col not in target:
                    cols[col].add(row)
                target[col] = new_value
            elif col in target:
                del target[col]
                cols[col].discard(row)
        if not target:
            del rows[row]

    for col in pivot_entries:
        cols[col].discard(pivot_row)
        if not cols[col]:
            del cols[col]
    cols.pop(pivot_col, None)


def _dense_remainder(rows, cols):
    row_ids = sorted(rows)
    col_ids = sorted(cols)
    col_position = {c: j for j, c in enumerate(col_ids)}
    dense = []
    for row in row_ids:
        line = [0] * len(col_ids)
        for col, value in rows[row].items():
            line[col_position[col]] = value
        dense.append(line)
    return dense


def _smallest_entry(a, candidates):
    best = None
    for i, j in candidates:
        v = a[i][j]
        if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
            best = (i, j)
    return best


def _dense_smith(a):
    factors = []
    while a and a[0]:
        n_rows, n_cols = len(a), len(a[0])
        pivot = _smallest_entry(
            a, ((i, j) for i in range(n_rows) for j in range(n_cols))
        )
        if pivot is None:
            break
        i, j = pivot

        while True:
            p = a[i][j]
            for k in range(n_rows):
                if k != i and a[k][j]:
                    q = a[k][j] // p
                    a[k] = [x - q * y for x, y in zip(a[k], a[i])]
            for col in range(n_cols):
                if col != j and a[i][col]:
                    q = a[i][col] // p
                    for k in range(n_rows):
                        a[k][col] -= q * a[k][j]

            leftovers = [(k, j) for k in range(n_rows) if k != i and a[k][j]]
            leftovers += [(i, col) for col in range(n_cols) if col != j and a[i][col]]
            if not leftovers:
                break
            # A remainder is smaller than the pivot. Pivot on it instead.
            i, j = _smallest_entry(a, leftovers)

        factors.append(abs(a[i][j]))
        a = [row[:j] + row[j + 1 :] for k, row in enumerate(a) if k != i]
    return factors
