"""Vanishing mask for products of cell classes and the Poincare pairing.

The product of the classes of two cells can only be non-zero when the first
triple precedes the dual of the second in the weight order for every
admissible lambda.  The mask records exactly that necessary condition; a
False entry certifies a vanishing product, a True entry promises nothing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .orders import check_lambda_weight
from .triples import Triple, UniversalCmp, basis, linear_extension_key, triple_leq_universal


def may_be_nonzero(t, u):
    """Necessary condition for the product of the classes of t and u.

    False proves the product vanishes; True only fails to obstruct it.
    """
    return triple_leq_universal(t, u.iota()) in (UniversalCmp.LESS, UniversalCmp.EQUAL)


@dataclass(frozen=True)
class PairingMask:
    """Boolean pairing grid over a degree basis and its dual.

    Row i and column j mask the product of rows[i] with cols[j], where
    cols[j] is the dual of rows[j]; rows are listed in a linear extension
    of the weight order.
    """

    rows: tuple
    cols: tuple
    allowed: tuple  # tuple of row tuples of bool

    @property
    def dim(self):
        return len(self.rows)

    def to_csv(self):
        # labels contain commas, so they are always quoted
        lines = ["," + ",".join(f'"{c.encode()}"' for c in self.cols)]
        for t, row in zip(self.rows, self.allowed):
            cells = ",".join("1" if x else "0" for x in row)
            lines.append(f'"{t.encode()}",{cells}')
        return "\n".join(lines)

    def to_json(self):
        return json.dumps(
            {
                "rows": [t.encode() for t in self.rows],
                "cols": [c.encode() for c in self.cols],
                "allowed": [[1 if x else 0 for x in row] for row in self.allowed],
            }
        )

    def to_ascii(self):
        """Grid of 1/. characters, one line per row."""
        return "\n".join(
            "".join("1" if x else "." for x in row) for row in self.allowed
        )

    def diagonal_blocks(self):
        """Sizes of the maximal diagonal blocks.

        A cut after position c is possible when no True entry couples the
        index ranges [0..c] and [c+1..]; blocks are the segments between
        consecutive cuts.
        """
        d = self.dim
        blocks = []
        start = 0
        for c in range(d):
            coupled = any(
                self.allowed[i][j] or self.allowed[j][i]
                for i in range(start, c + 1)
                for j in range(c + 1, d)
            )
            if not coupled:
                blocks.append(c + 1 - start)
                start = c + 1
        return blocks


def pairing_mask(n, k, lam):
    """Mask of the degree-k pairing grid for an n-point basis.

    Rows are the degree-k triples sorted by a linear extension of the
    weight order for lam (ties and incomparable pairs resolved by the sort
    key, with the text encoding as final tie-break); columns are their
    duals in the same index order.
    """
    check_lambda_weight(lam)
    rows = sorted(basis(n, k), key=lambda t: linear_extension_key(lam, t))
    cols = [t.iota() for t in rows]
    allowed = tuple(
        tuple(may_be_nonzero(t, c) for c in cols) for t in rows
    )
    return PairingMask(rows=tuple(rows), cols=tuple(cols), allowed=allowed)


@dataclass(frozen=True)
class TriangularVerdict:
    ok: bool
    blocks: tuple
    violation: tuple | None = None  # (i, j, row triple, col triple)

    def describe(self):
        if self.ok:
            sizes = ",".join(str(b) for b in self.blocks)
            return f"upper-triangular: ok; diagonal blocks: {sizes}"
        i, j, t, u = self.violation
        return f"upper-triangular: VIOLATED at ({i},{j}): {t} vs {u}"


def check_upper_triangular(mask):
    """Verify unit diagonal and vanishing below the diagonal.

    The verdict carries the offending index pair and both triples on
    failure, and the maximal diagonal block sizes on success.
    """
    for i in range(mask.dim):
        if not mask.allowed[i][i]:
            return TriangularVerdict(
                ok=False, blocks=(), violation=(i, i, mask.rows[i], mask.cols[i])
            )
        for j in range(i):
            if mask.allowed[i][j]:
                return TriangularVerdict(
                    ok=False, blocks=(), violation=(i, j, mask.rows[i], mask.cols[j])
                )
    return TriangularVerdict(ok=True, blocks=tuple(mask.diagonal_blocks()))
