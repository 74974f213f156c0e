"""Incremental exact row reduction of sparse vectors.

Vectors are dicts ``key -> coefficient``; keys are words (tuples) and the
pivot of a row is its deg-lex smallest key.  Rows are kept in reduced
row-echelon form: every pivot coefficient is 1 and no row contains another
row's pivot, so the coordinate of a member vector on row ``p`` is simply
its entry at ``p``.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping

from cyclinv.free_algebra import deglex_key


def _axpy(target: dict, c, source: Mapping) -> None:
    """target += c * source, dropping zeros."""
    for k, v in source.items():
        if k in target:
            s = target[k] + c * v
            if s == 0:
                del target[k]
            else:
                target[k] = s
        else:
            target[k] = c * v


class EchelonBasis:
    """Growing RREF basis of a subspace.

    With ``track=True`` every row also records the combination of inserted
    vectors (by insertion label) that produces it, which is what membership
    certificates are built from.
    """

    def __init__(self, key: Callable = deglex_key, track: bool = False):
        self.key = key
        self.track = track
        self.rows: dict[Hashable, dict] = {}
        self.combos: dict[Hashable, dict] = {}
        self._containing: dict[Hashable, set] = {}  # column -> pivots of rows having it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def pivots(self) -> list:
        return sorted(self.rows, key=self.key)

    def reduce(self, vector: Mapping) -> tuple[dict, dict]:
        """Return ``(remainder, coords)`` with ``vector = remainder + sum coords[p] * row_p``."""
        rem = dict(vector)
        coords = {p: rem[p] for p in rem if p in self.rows}
        for p, c in coords.items():
            _axpy(rem, -c, self.rows[p])
        return rem, coords

    def contains(self, vector: Mapping) -> bool:
        return not self.reduce(vector)[0]

    def add(self, vector: Mapping, label: Hashable = None) -> bool:
        """Insert a vector; True if it increased the rank."""
        rem, coords = self.reduce(vector)
        if not rem:
            return False
        pivot = min(rem, key=self.key)
        inv = 1 / rem[pivot]
        row = {k: v * inv for k, v in rem.items()}
        combo = {}
        if self.track:
            combo = {label: inv}
            for p, c in coords.items():
                _axpy(combo, -c * inv, self.combos[p])
        # clear the new pivot column from existing rows
        for q in list(self._containing.get(pivot, ())):
            other = self.rows[q]
            c = other[pivot]
            self._unindex(q, other)
            _axpy(other, -c, row)
            self._index(q, other)
            if self.track:
                _axpy(self.combos[q], -c, combo)
        self.rows[pivot] = row
        self._index(pivot, row)
        if self.track:
            self.combos[pivot] = combo
        return True

    def extend(self, vectors: Iterable[Mapping]) -> int:
        return sum(self.add(v) for v in vectors)

    def express(self, vector: Mapping) -> dict | None:
        """Combination of inserted labels equal to ``vector``, or None if outside the span."""
        if not self.track:
            raise ValueError("basis was built without tracking")
        rem, coords = self.reduce(vector)
        if rem:
            return None
        out: dict = {}
        for p, c in coords.items():
            _axpy(out, c, self.combos[p])
        return out

    def _index(self, pivot, row):
        for k in row:
            if k != pivot:
                self._containing.setdefault(k, set()).add(pivot)

    def _unindex(self, pivot, row):
        for k in row:
            if k != pivot:
                s = self._containing.get(k)
                if s is not None:
                    s.discard(pivot)


def rank(vectors: Iterable[Mapping], key: Callable = deglex_key) -> int:
    basis = EchelonBasis(key=key)
    basis.extend(vectors)
    return basis.rank
