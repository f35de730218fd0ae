"""Sparse matrices over an exact scalar ring.

Entries are Laurent or Cyclo scalars; zeros are never stored.  Only the
handful of operations the rest of the package needs are implemented.
"""

from __future__ import annotations


class SMat:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @staticmethod
    def identity(n: int, one) -> SMat:
        return SMat(n, n, {(i, i): one for i in range(n)})

    @staticmethod
    def zero(rows: int, cols: int) -> SMat:
        return SMat(rows, cols)

    @staticmethod
    def from_rows(rows_data, zero_test=bool) -> SMat:
        entries = {}
        for i, row in enumerate(rows_data):
            for j, x in enumerate(row):
                if zero_test(x):
                    entries[i, j] = x
        return SMat(len(rows_data), len(rows_data[0]) if rows_data else 0, entries)

    def to_rows(self, zero):
        return [[self.entries.get((i, j), zero) for j in range(self.cols)] for i in range(self.rows)]

    def __add__(self, other: SMat) -> SMat:
        assert (self.rows, self.cols) == (other.rows, other.cols)
        out = dict(self.entries)
        for k, v in other.entries.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SMat(self.rows, self.cols, out)

    def __neg__(self) -> SMat:
        return SMat(self.rows, self.cols, {k: -v for k, v in self.entries.items()})

    def __sub__(self, other: SMat) -> SMat:
        return self + (-other)

    def scale(self, s) -> SMat:
        if not s:
            return SMat(self.rows, self.cols)
        return SMat(self.rows, self.cols, {k: v * s for k, v in self.entries.items()})

    def __matmul__(self, other: SMat) -> SMat:
        assert self.cols == other.rows, f"shape mismatch {self.cols} != {other.rows}"
        by_row: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], object] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                key = (i, j)
                s = out.get(key)
                p = a * b
                s = p if s is None else s + p
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return SMat(self.rows, other.cols, out)

    def kron(self, other: SMat) -> SMat:
        out = {}
        for (i1, j1), a in self.entries.items():
            for (i2, j2), b in other.entries.items():
                out[i1 * other.rows + i2, j1 * other.cols + j2] = a * b
        return SMat(self.rows * other.rows, self.cols * other.cols, out)

    def transpose(self) -> SMat:
        return SMat(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def map_entries(self, fn) -> SMat:
        return SMat(self.rows, self.cols, {k: fn(v) for k, v in self.entries.items()})

    def pow_int(self, k: int, one) -> SMat:
        assert self.rows == self.cols and k >= 0
        result = SMat.identity(self.rows, one)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, SMat):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def first_difference(self, other: SMat):
        """Lexicographically first (row, col) where the two matrices differ."""
        diff = self - other
        return min(diff.entries) if diff.entries else None

    def columns(self) -> dict[int, list]:
        by_col: dict[int, list] = {}
        for (i, j), v in self.entries.items():
            by_col.setdefault(j, []).append((i, v))
        return by_col

    def __repr__(self):
        return f"SMat({self.rows}x{self.cols}, {len(self.entries)} entries)"
