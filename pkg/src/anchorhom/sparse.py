"""Column-stored sparse integer matrices."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from .errors import InvalidParameterError


class SparseIntMatrix:
    """A ``rows x cols`` integer matrix holding only its nonzero entries.

    Storage is one ``{row: value}`` dict per column.  Instances are treated
    as immutable once built; the elimination routines copy before working.
    """

    __slots__ = ("rows", "cols", "_columns")

    def __init__(self, rows: int, cols: int, columns: Sequence[Dict[int, int]] = None):
        if rows < 0 or cols < 0:
            raise InvalidParameterError("matrix shape must be nonnegative")
        self.rows = rows
        self.cols = cols
        if columns is None:
            columns = [{} for _ in range(cols)]
        if len(columns) != cols:
            raise InvalidParameterError(f"expected {cols} columns, got {len(columns)}")
        clean = []
        for c, col in enumerate(columns):
            d = {}
            for r, v in col.items():
                if not 0 <= r < rows:
                    raise InvalidParameterError(f"row index {r} out of range in column {c}")
                if v:
                    d[r] = int(v)
            clean.append(d)
        self._columns = clean

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: Mapping[Tuple[int, int], int]):
        columns = [{} for _ in range(cols)]
        for (r, c), v in entries.items():
            if not 0 <= c < cols:
                raise InvalidParameterError(f"column index {c} out of range")
            if v:
                columns[c][r] = columns[c].get(r, 0) + v
        return cls(rows, cols, columns)

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], cols: int = None):
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        columns = [{} for _ in range(cols)]
        for r, row in enumerate(data):
            if len(row) != cols:
                raise InvalidParameterError("ragged dense matrix")
            for c, v in enumerate(row):
                if v:
                    columns[c][r] = v
        return cls(rows, cols, columns)

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def column(self, c: int) -> Dict[int, int]:
        return self._columns[c]

    def columns(self) -> List[Dict[int, int]]:
        """Copies of all columns."""
        return [dict(col) for col in self._columns]

    def entries(self) -> Dict[Tuple[int, int], int]:
        return {(r, c): v for c, col in enumerate(self._columns) for r, v in col.items()}

    def items(self) -> Iterator[Tuple[int, int, int]]:
        """Nonzero entries as ``(row, col, value)``, column-major, rows ascending."""
        for c, col in enumerate(self._columns):
            for r in sorted(col):
                yield r, c, col[r]

    @property
    def nnz(self) -> int:
        return sum(len(col) for col in self._columns)

    def __getitem__(self, rc: Tuple[int, int]) -> int:
        r, c = rc
        return self._columns[c].get(r, 0)

    def is_zero(self) -> bool:
        return not any(self._columns)

    def to_dense(self) -> List[List[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                out[r][c] = v
        return out

    def transpose(self) -> "SparseIntMatrix":
        columns = [{} for _ in range(self.rows)]
        for c, col in enumerate(self._columns):
            for r, v in col.items():
                columns[r][c] = v
        return SparseIntMatrix(self.cols, self.rows, columns)

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "SparseIntMatrix":
        """Matrix whose entry ``(row_perm[r], col_perm[c])`` is ``self[r, c]``."""
        columns = [None] * self.cols
        for c, col in enumerate(self._columns):
            columns[col_perm[c]] = {row_perm[r]: v for r, v in col.items()}
        return SparseIntMatrix(self.rows, self.cols, columns)

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.cols != other.rows:
            raise InvalidParameterError(f"shape mismatch {self.shape} @ {other.shape}")
        left = self._columns
        columns = []
        for col in other._columns:
            acc: Dict[int, int] = {}
            for mid, w in col.items():
                for r, v in left[mid].items():
                    acc[r] = acc.get(r, 0) + v * w
            columns.append({r: v for r, v in acc.items() if v})
        return SparseIntMatrix(self.rows, other.cols, columns)

    def __eq__(self, other):
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._columns == other._columns

    def __repr__(self):
        return f"SparseIntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    def dump_lines(self, d: int) -> Iterable[str]:
        """Text dump: a ``dim d: rows R cols C`` header, then ``d row col value`` lines."""
        yield f"dim {d}: rows {self.rows} cols {self.cols}"
        for r, c, v in self.items():
            yield f"{d} {r} {c} {v}"
