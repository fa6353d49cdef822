"""Sparse exact linear algebra over the rationals and prime fields.

Everything in this module is float-free and deterministic. Scalars are
``fractions.Fraction`` in characteristic 0 and plain ints reduced mod p in
characteristic p. Elimination always takes, within each row, the first
nonzero entry in column order as the pivot, so echelon forms, ranks and
kernel bases come out identical run to run.

Matrices are stored column-major as lists of ``{row_index: scalar}`` dicts,
which suits the resolution differentials (a handful of nonzeros per column).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (char 0) or a prime field F_p (char p).

    Scalar representations: Fraction for char 0, int in range(p) for char p.
    ``of`` coerces ints and Fractions into that canonical form.
    """

    def __init__(self, char: int):
        if char != 0 and not _is_prime(char):
            raise ValueError(f"field characteristic must be 0 or prime, got {char!r}")
        self.char = char

    def __repr__(self) -> str:
        return "Field(QQ)" if self.char == 0 else f"Field(F{self.char})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and other.char == self.char

    def __hash__(self) -> int:
        return hash(("Field", self.char))

    def of(self, value):
        if self.char == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.char == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} not invertible mod {self.char}"
                )
            return value.numerator * pow(value.denominator, -1, self.char) % self.char
        return value % self.char

    def zero(self):
        return Fraction(0) if self.char == 0 else 0

    def one(self):
        return Fraction(1) if self.char == 0 else 1

    def is_zero(self, a) -> bool:
        return a == 0

    def add(self, a, b):
        return a + b if self.char == 0 else (a + b) % self.char

    def sub(self, a, b):
        return a - b if self.char == 0 else (a - b) % self.char

    def mul(self, a, b):
        return a * b if self.char == 0 else (a * b) % self.char

    def neg(self, a):
        return -a if self.char == 0 else (-a) % self.char

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverting zero field element")
        if self.char == 0:
            return Fraction(1) / a
        return pow(a, -1, self.char)


def row_reduce(rows, field: Field, reduced: bool = True) -> dict:
    """Gaussian elimination on sparse rows.

    Args:
        rows: iterable of ``{column: scalar}`` dicts; consumed in order.
        field: scalar arithmetic to use.
        reduced: when True, back-substitute to reduced row echelon form.

    Returns:
        ``{pivot_column: row}`` where each row is normalized to leading
        coefficient 1. The pivot of each row is its first nonzero column
        after reduction against earlier rows.
    """
    pivots: dict[int, dict] = {}
    for incoming in rows:
        row = {c: v for c, v in incoming.items() if not field.is_zero(v)}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                scale = field.inv(row[lead])
                pivots[lead] = {c: field.mul(scale, v) for c, v in row.items()}
                break
            coeff = row.pop(lead)
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = field.sub(row.get(c, field.zero()), field.mul(coeff, v))
                if field.is_zero(nv):
                    row.pop(c, None)
                else:
                    row[c] = nv
    if reduced:
        # Clear each pivot column from every other row, largest pivot first,
        # so each row used for elimination is already fully reduced.
        for lead in sorted(pivots, reverse=True):
            src = pivots[lead]
            for other_lead, row in pivots.items():
                if other_lead == lead or lead not in row:
                    continue
                coeff = row.pop(lead)
                for c, v in src.items():
                    if c == lead:
                        continue
                    nv = field.sub(row.get(c, field.zero()), field.mul(coeff, v))
                    if field.is_zero(nv):
                        row.pop(c, None)
                    else:
                        row[c] = nv
    return pivots


def _integer_rank(rows) -> int:
    """Rank of integer rows by fraction-free elimination with gcd pruning."""
    pivots: dict[int, dict] = {}
    for incoming in rows:
        row = {c: v for c, v in incoming.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if g > 1:
                    row = {c: v // g for c, v in row.items()}
                pivots[lead] = row
                break
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            ma, mb = a // g, b // g
            merged = {}
            for c in row.keys() | piv.keys():
                v = ma * row.get(c, 0) - mb * piv.get(c, 0)
                if v:
                    merged[c] = v
            g = 0
            for v in merged.values():
                g = gcd(g, v)
            if g > 1:
                merged = {c: v // g for c, v in merged.items()}
            row = merged
    return len(pivots)


class SpanTracker:
    """Incremental row-space tracker.

    Vectors are fed one at a time; ``add`` reports whether the span grew.
    This is the workhorse for radical spans and projective cover tops, where
    we sift many candidate vectors against a growing subspace.
    """

    def __init__(self, field: Field):
        self.field = field
        self.pivots: dict[int, dict] = {}

    def residue(self, vec: dict) -> dict:
        """Reduce ``vec`` against the tracked span; {} means membership."""
        field = self.field
        row = {c: v for c, v in vec.items() if not field.is_zero(v)}
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            coeff = row.pop(lead)
            for c, v in piv.items():
                if c == lead:
                    continue
                nv = field.sub(row.get(c, field.zero()), field.mul(coeff, v))
                if field.is_zero(nv):
                    row.pop(c, None)
                else:
                    row[c] = nv
        return row

    def add(self, vec: dict) -> bool:
        row = self.residue(vec)
        if not row:
            return False
        lead = min(row)
        scale = self.field.inv(row[lead])
        self.pivots[lead] = {c: self.field.mul(scale, v) for c, v in row.items()}
        return True

    def contains(self, vec: dict) -> bool:
        return not self.residue(vec)

    @property
    def dim(self) -> int:
        return len(self.pivots)


class LinearMap:
    """A linear map between based spaces, stored as sparse columns.

    Column j is the image of the j-th domain basis vector, as a
    ``{row_index: scalar}`` dict. The represented matrix has shape
    (codomain_dim, domain_dim).
    """

    def __init__(self, field: Field, domain_dim: int, codomain_dim: int):
        self.field = field
        self.domain_dim = domain_dim
        self.codomain_dim = codomain_dim
        self.columns: list[dict] = [{} for _ in range(domain_dim)]
        self._rank: int | None = None

    @classmethod
    def from_rows(cls, field: Field, rows) -> "LinearMap":
        """Build from a dense list of row lists (test convenience)."""
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        m = cls(field, ncols, nrows)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                m.add_entry(i, j, v)
        return m

    def add_entry(self, i: int, j: int, value) -> None:
        """Accumulate ``value`` into entry (i, j), dropping exact zeros."""
        if not (0 <= i < self.codomain_dim and 0 <= j < self.domain_dim):
            raise IndexError(f"entry ({i}, {j}) outside matrix shape")
        col = self.columns[j]
        nv = self.field.add(col.get(i, self.field.zero()), self.field.of(value))
        if self.field.is_zero(nv):
            col.pop(i, None)
        else:
            col[i] = nv
        self._rank = None

    def entry(self, i: int, j: int):
        return self.columns[j].get(i, self.field.zero())

    def is_zero(self) -> bool:
        return all(not col for col in self.columns)

    def _rows(self) -> list[dict]:
        rows: list[dict] = [{} for _ in range(self.codomain_dim)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                rows[i][j] = v
        return rows

    def rank(self) -> int:
        if self._rank is None:
            rows = self._rows()
            if self.field.char == 0:
                ints = []
                for row in rows:
                    denom = 1
                    for v in row.values():
                        denom = denom * v.denominator // gcd(denom, v.denominator)
                    ints.append({c: int(v * denom) for c, v in row.items()})
                self._rank = _integer_rank(ints)
            else:
                self._rank = len(row_reduce(rows, self.field, reduced=False))
        return self._rank

    def kernel_basis(self) -> list[dict]:
        """Basis of the kernel, as sparse domain-coordinate dicts.

        One vector per free column of the reduced row echelon form, ordered
        by free column index, with a 1 in that coordinate. Asserts the
        rank-nullity identity before returning.
        """
        pivots = row_reduce(self._rows(), self.field, reduced=True)
        pivot_cols = sorted(pivots)
        basis = []
        for f in range(self.domain_dim):
            if f in pivots:
                continue
            vec = {f: self.field.one()}
            for p in pivot_cols:
                v = pivots[p].get(f)
                if v is not None:
                    vec[p] = self.field.neg(v)
            basis.append(vec)
        self._rank = len(pivot_cols)
        assert self._rank + len(basis) == self.domain_dim, "rank-nullity violated"
        return basis

    def apply(self, vec: dict) -> dict:
        """Image of a sparse domain vector."""
        field = self.field
        out: dict = {}
        for j, coeff in vec.items():
            for i, v in self.columns[j].items():
                nv = field.add(out.get(i, field.zero()), field.mul(coeff, v))
                if field.is_zero(nv):
                    out.pop(i, None)
                else:
                    out[i] = nv
        return out

    def compose(self, other: "LinearMap") -> "LinearMap":
        """self after other."""
        if other.codomain_dim != self.domain_dim or other.field != self.field:
            raise ValueError("maps not composable")
        result = LinearMap(self.field, other.domain_dim, self.codomain_dim)
        for j, col in enumerate(other.columns):
            image = self.apply(col)
            if image:
                result.columns[j] = image
        return result

    def to_dense(self) -> list[list]:
        zero = self.field.zero()
        dense = [[zero] * self.domain_dim for _ in range(self.codomain_dim)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                dense[i][j] = v
        return dense

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearMap)
            and other.field == self.field
            and other.domain_dim == self.domain_dim
            and other.codomain_dim == self.codomain_dim
            and other.columns == self.columns
        )

    def __repr__(self) -> str:
        nnz = sum(len(col) for col in self.columns)
        return (
            f"LinearMap({self.field!r}, {self.codomain_dim}x{self.domain_dim}, "
            f"{nnz} nonzero)"
        )
