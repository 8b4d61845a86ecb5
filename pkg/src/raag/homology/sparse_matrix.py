from raag.errors import MalformedInputError


class SparseIntMatrix:
    """
    An integer matrix stored as {(row, col): value}, zeros never stored.
    Values are Python ints, so there is no overflow.
    """

    def __init__(self, n_rows, n_cols, entries=None):
        self.n_rows = int(n_rows)
        self.n_cols = int(n_cols)
        self.entries = {}
        if entries is None:
            return
        for (row, col), value in entries.items():
            if not (0 <= row < self.n_rows and 0 <= col < self.n_cols):
                raise MalformedInputError(
                    f"Entry ({row}, {col}) is outside a "
                    f"{self.n_rows} x {self.n_cols} matrix."
                )
            value = int(value)
            if value != 0:
                self.entries[(row, col)] = value

    @classmethod
    def from_triples(cls, n_rows, n_cols, triples):
        """
        Repeated (row, col) pairs are summed.
        """
        entries = {}
        for row, col, value in triples:
            entries[(row, col)] = entries.get((row, col), 0) + int(value)
        return cls(n_rows, n_cols, entries)

    @classmethod
    def from_dense(cls, rows):
        rows = [list(r) for r in rows]
        n_rows = len(rows)
        n_cols = len(rows[0]) if rows else 0
        entries = {
            (i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v
        }
        return cls(n_rows, n_cols, entries)

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self):
        return (
            f"SparseIntMatrix({self.n_rows} x {self.n_cols}, "
            f"{len(self.entries)} nonzeros)"
        )

    def nnz(self):
        return len(self.entries)

    def is_zero(self):
        return not self.entries

    def rows_as_dicts(self):
        """
        {row: {col: value}} for every row with a nonzero entry.
        """
        rows = {}
        for (row, col), value in self.entries.items():
            rows.setdefault(row, {})[col] = value
        return rows

    def transpose(self):
        return SparseIntMatrix(
            self.n_cols,
            self.n_rows,
            {(col, row): v for (row, col), v in self.entries.items()},
        )

    def permuted(self, row_order, col_order):
        """
        Row i of the result is row row_order[i] of this matrix,
        and likewise for columns.
        """
        new_row = {old: new for new, old in enumerate(row_order)}
        new_col = {old: new for new, old in enumerate(col_order)}
        return SparseIntMatrix(
            self.n_rows,
            self.n_cols,
            {(new_row[r], new_col[c]): v for (r, c), v in self.entries.items()},
        )

    def matmul(self, other):
        if self.n_cols != other.n_rows:
            raise MalformedInputError(
                f"Cannot multiply {self.shape} by {other.shape} matrices."
            )
        other_rows = other.rows_as_dicts()
        product = {}
        for (row, k), value in self.entries.items():
            for col, other_value in other_rows.get(k, {}).items():
                product[(row, col)] = product.get((row, col), 0) + value * other_value
        return SparseIntMatrix(self.n_rows, other.n_cols, product)

    def dump_lines(self, degree):
        """
        Line-oriented text form: a header line "degree rows cols",
        then one "row col value" triple per nonzero entry.
        """
        yield f"{degree} {self.n_rows} {self.n_cols}"
        for (row, col), value in sorted(self.entries.items()):
            yield f"{row} {col} {value}"
