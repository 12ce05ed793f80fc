"""Vectorized enumeration engine for finite twisted matrix rings.

Definition-level oracles (commutants, quasinilpotence as "1 + AX is always a
unit", spectral idempotents by exhaustive search) need millions of tiny
matrix products. A finite ring is packed into index tables once, matrices
become rows of four indices, and whole sweeps run as numpy table lookups.
The packing is built from the exact element arithmetic and nothing else, so
these oracles stay independent of the classification theory they check.
"""

from __future__ import annotations

import numpy as np

from .errors import MultiplierMismatch, NotEnumerable
from .genmat import GenMatrix
from .localring import Ring, RingElement

MAX_SPACE_ROWS = 2_000_000
MAX_TABLE_ROWS = 4_096


class PackedRing:
    """Add/mul/neg tables of a finite ring, elements indexed in canonical order."""

    def __init__(self, ring: Ring):
        if not ring.is_finite():
            raise NotEnumerable(f"{ring} is infinite")
        self.ring = ring
        self.elements = list(ring.elements())
        n = len(self.elements)
        self.n = n
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.add = np.empty((n, n), dtype=np.intp)
        self.mul = np.empty((n, n), dtype=np.intp)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                self.add[i, j] = self.index[a + b]
                self.mul[i, j] = self.index[a * b]
        self.neg = np.array([self.index[-a] for a in self.elements], dtype=np.intp)
        self.unit = np.array([a.is_unit() for a in self.elements], dtype=bool)
        self.inv = np.full(n, -1, dtype=np.intp)
        for i, a in enumerate(self.elements):
            v = a.try_inverse()
            if v is not None:
                self.inv[i] = self.index[v]
        self.zero_i = self.index[ring.zero]
        self.one_i = self.index[ring.one]


class PackedSpace:
    """All matrices of one finite twisted matrix ring, as rows of indices.

    Row order is lexicographic in (a11, a12, a21, a22) over the ring's
    canonical element order, so "first found" answers are reproducible.
    """

    def __init__(self, ring: Ring, s: RingElement, max_rows: int = MAX_SPACE_ROWS):
        self.pr = get_packed_ring(ring)
        self.ring = ring
        if s.ring != ring:
            raise MultiplierMismatch(f"multiplier lives in {s.ring}, not {ring}")
        self.s = s
        self.s_i = self.pr.index[s]
        n = self.pr.n
        count = n**4
        if count > max_rows:
            raise NotEnumerable(
                f"{count} matrices over {ring} exceed the exhaustive budget of {max_rows}"
            )
        self.count = count
        self.M = np.stack(
            np.unravel_index(np.arange(count), (n, n, n, n)), axis=1
        ).astype(np.intp)
        zero_i, one_i = self.pr.zero_i, self.pr.one_i
        self.zero4 = np.array([zero_i] * 4, dtype=np.intp)
        self.id4 = np.array([one_i, zero_i, zero_i, one_i], dtype=np.intp)
        self._idem: np.ndarray | None = None
        self._mul_table: np.ndarray | None = None
        self._add_table: np.ndarray | None = None
        self._comm_cache: dict[tuple, np.ndarray] = {}
        self._qnil_cache: dict[tuple, bool] = {}

    # -- conversions -------------------------------------------------------

    def row_of(self, m: GenMatrix) -> np.ndarray:
        if m.ring != self.ring or m.s != self.s:
            raise MultiplierMismatch("matrix belongs to a different packed space")
        ix = self.pr.index
        return np.array([ix[m.a11], ix[m.a12], ix[m.a21], ix[m.a22]], dtype=np.intp)

    def matrix_of(self, row) -> GenMatrix:
        e = self.pr.elements
        return GenMatrix(e[int(row[0])], e[int(row[1])], e[int(row[2])], e[int(row[3])], self.s)

    def encode(self, rows: np.ndarray) -> np.ndarray:
        n = self.pr.n
        return ((rows[..., 0] * n + rows[..., 1]) * n + rows[..., 2]) * n + rows[..., 3]

    # -- vectorized arithmetic over (m, 4) index rows ------------------------

    def mul_rows(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """Twisted product, elementwise over aligned (or broadcast) rows."""
        add, mul, s = self.pr.add, self.pr.mul, self.s_i
        X = np.atleast_2d(X)
        Y = np.atleast_2d(Y)
        xa, xb, xc, xd = X[:, 0], X[:, 1], X[:, 2], X[:, 3]
        ya, yb, yc, yd = Y[:, 0], Y[:, 1], Y[:, 2], Y[:, 3]
        e11 = add[mul[xa, ya], mul[s, mul[xb, yc]]]
        e12 = add[mul[xa, yb], mul[xb, yd]]
        e21 = add[mul[xc, ya], mul[xd, yc]]
        e22 = add[mul[s, mul[xc, yb]], mul[xd, yd]]
        return np.stack([e11, e12, e21, e22], axis=1)

    def add_rows(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        return self.pr.add[np.atleast_2d(X), np.atleast_2d(Y)]

    def neg_rows(self, X: np.ndarray) -> np.ndarray:
        return self.pr.neg[np.atleast_2d(X)]

    def det_rows(self, X: np.ndarray) -> np.ndarray:
        add, mul, neg, s = self.pr.add, self.pr.mul, self.pr.neg, self.s_i
        X = np.atleast_2d(X)
        return add[mul[X[:, 0], X[:, 3]], neg[mul[s, mul[X[:, 1], X[:, 2]]]]]

    def tr_rows(self, X: np.ndarray) -> np.ndarray:
        X = np.atleast_2d(X)
        return self.pr.add[X[:, 0], X[:, 3]]

    def unit_rows_mask(self, X: np.ndarray) -> np.ndarray:
        return self.pr.unit[self.det_rows(X)]

    def add_identity(self, X: np.ndarray) -> np.ndarray:
        add, one = self.pr.add, self.pr.one_i
        X = np.atleast_2d(X)
        return np.stack([add[X[:, 0], one], X[:, 1], X[:, 2], add[X[:, 3], one]], axis=1)

    def inverse_rows(self, X: np.ndarray) -> np.ndarray:
        """Inverses of unit rows (undefined garbage on non-units)."""
        mul, neg, inv = self.pr.mul, self.pr.neg, self.pr.inv
        X = np.atleast_2d(X)
        d_inv = inv[self.det_rows(X)]
        return np.stack(
            [
                mul[d_inv, X[:, 3]],
                mul[d_inv, neg[X[:, 1]]],
                mul[d_inv, neg[X[:, 2]]],
                mul[d_inv, X[:, 0]],
            ],
            axis=1,
        )

    # -- enumeration-level oracles ------------------------------------------

    def idempotent_rows(self) -> np.ndarray:
        if self._idem is None:
            sq = self.mul_rows(self.M, self.M)
            self._idem = self.M[(sq == self.M).all(axis=1)]
        return self._idem

    def commutant_mask(self, a4: np.ndarray) -> np.ndarray:
        a4 = np.asarray(a4).reshape(1, 4)
        xa = self.mul_rows(self.M, a4)
        ax = self.mul_rows(a4, self.M)
        return (xa == ax).all(axis=1)

    def commutant_rows(self, a4: np.ndarray) -> np.ndarray:
        key = tuple(int(v) for v in np.asarray(a4).reshape(4))
        rows = self._comm_cache.get(key)
        if rows is None:
            rows = self.M[self.commutant_mask(a4)]
            if len(self._comm_cache) >= 16:
                self._comm_cache.clear()
            self._comm_cache[key] = rows
        return rows

    def commutes_with_all(self, e4: np.ndarray, rows: np.ndarray) -> bool:
        e4 = np.asarray(e4).reshape(1, 4)
        return bool((self.mul_rows(e4, rows) == self.mul_rows(rows, e4)).all())

    def qnil_brute(self, a4: np.ndarray) -> bool:
        """1 + A X is a unit for every X commuting with A (the definition)."""
        key = tuple(int(v) for v in np.asarray(a4).reshape(4))
        hit = self._qnil_cache.get(key)
        if hit is not None:
            return hit
        comm = self.commutant_rows(a4)
        ax = self.mul_rows(np.asarray(a4).reshape(1, 4), comm)
        result = bool(self.unit_rows_mask(self.add_identity(ax)).all())
        if len(self._qnil_cache) >= 65536:
            self._qnil_cache.clear()
        self._qnil_cache[key] = result
        return result

    def spectral_idempotent_brute(self, a4: np.ndarray) -> np.ndarray | None:
        """First idempotent E (in row order) witnessing a quasipolar split:
        E in the double commutant of A, A + E a unit, A E quasinilpotent."""
        a4 = np.asarray(a4).reshape(4)
        idem = self.idempotent_rows()
        ea = self.mul_rows(idem, a4.reshape(1, 4))
        ae = self.mul_rows(a4.reshape(1, 4), idem)
        commute = (ea == ae).all(axis=1)
        w_unit = self.unit_rows_mask(self.add_rows(idem, a4.reshape(1, 4)))
        comm_rows = None
        for i in np.nonzero(commute & w_unit)[0]:
            e4 = idem[i]
            central = (e4 == self.zero4).all() or (e4 == self.id4).all()
            if not central:
                if comm_rows is None:
                    comm_rows = self.commutant_rows(a4)
                if not self.commutes_with_all(e4, comm_rows):
                    continue
            ae4 = self.mul_rows(a4.reshape(1, 4), e4.reshape(1, 4))[0]
            if self.qnil_brute(ae4):
                return e4
        return None

    def strongly_clean_brute(self, a4: np.ndarray) -> bool:
        """Some idempotent E commutes with A and leaves A - E a unit."""
        a4 = np.asarray(a4).reshape(1, 4)
        idem = self.idempotent_rows()
        commute = (self.mul_rows(idem, a4) == self.mul_rows(a4, idem)).all(axis=1)
        diff_unit = self.unit_rows_mask(self.add_rows(a4, self.neg_rows(idem)))
        return bool((commute & diff_unit).any())

    def unit_row_indices(self) -> np.ndarray:
        return np.nonzero(self.unit_rows_mask(self.M))[0]

    # -- full composition tables (small spaces only) --------------------------

    def full_mul_table(self) -> np.ndarray:
        if self._mul_table is None:
            self._ensure_small("multiplication table")
            T = np.empty((self.count, self.count), dtype=np.intp)
            for i in range(self.count):
                T[i] = self.encode(self.mul_rows(self.M[i].reshape(1, 4), self.M))
            self._mul_table = T
        return self._mul_table

    def full_add_table(self) -> np.ndarray:
        if self._add_table is None:
            self._ensure_small("addition table")
            T = np.empty((self.count, self.count), dtype=np.intp)
            for i in range(self.count):
                T[i] = self.encode(self.add_rows(self.M[i].reshape(1, 4), self.M))
            self._add_table = T
        return self._add_table

    def _ensure_small(self, what: str):
        if self.count > MAX_TABLE_ROWS:
            raise NotEnumerable(f"{what} needs {self.count}^2 entries; refusing")


_PACKED_RINGS: dict[Ring, PackedRing] = {}
_SPACES: dict[tuple[Ring, RingElement], PackedSpace] = {}


def get_packed_ring(ring: Ring) -> PackedRing:
    pr = _PACKED_RINGS.get(ring)
    if pr is None:
        pr = PackedRing(ring)
        _PACKED_RINGS[ring] = pr
    return pr


def get_space(ring: Ring, s: RingElement) -> PackedSpace:
    key = (ring, s)
    sp = _SPACES.get(key)
    if sp is None:
        sp = PackedSpace(ring, s)
        _SPACES[key] = sp
    return sp


def space_of(m: GenMatrix) -> PackedSpace:
    return get_space(m.ring, m.s)
