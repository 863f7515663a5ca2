"""Integral positive definite lattices with exact rational arithmetic.

A lattice is Z^l equipped with an integer Gram matrix; vectors of the ambient
rational span are coordinate tuples of Fraction relative to that fixed basis.
"""

from __future__ import annotations

import json
from fractions import Fraction as Q
from typing import Sequence

from .linalg import Mat, Vec, det, dot, invert, mat_vec, qvec


class InputError(ValueError):
    """Malformed or out-of-contract input (maps to CLI exit code 2)."""


def parse_rational(s) -> Q:
    """Parse 'p/q' or 'n' into an exact rational; reject anything else."""
    if isinstance(s, int):
        return Q(s)
    if not isinstance(s, str):
        raise InputError(f"expected a rational string, got {type(s).__name__}")
    try:
        return Q(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {s!r}: {exc}") from None


def format_rational(x: Q) -> str:
    """Canonical 'p/q' in lowest terms, plain 'n' for integers."""
    x = Q(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_vector(entries: Sequence) -> Vec:
    return tuple(parse_rational(e) for e in entries)


def format_vector(v: Sequence) -> list[str]:
    return [format_rational(x) for x in v]


class Lattice:
    """Z^l with an integer symmetric positive definite Gram matrix."""

    def __init__(self, gram: Sequence[Sequence[int]]):
        rows = []
        n = len(gram)
        if n == 0:
            raise InputError("empty Gram matrix")
        for i, row in enumerate(gram):
            if len(row) != n:
                raise InputError(f"Gram row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise InputError(f"Gram entry {x!r} is not an integer")
            rows.append(tuple(Q(x) for x in row))
        self.gram: Mat = tuple(rows)
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InputError(f"Gram matrix is not symmetric at ({i},{j})")
        # Positive definiteness: leading principal minors all positive.
        for k in range(1, n + 1):
            minor = det([row[:k] for row in self.gram[:k]])
            if minor <= 0:
                raise InputError(f"Gram matrix is not positive definite "
                                 f"(leading {k}x{k} minor {minor})")
        self.rank = n
        self._dual_gram: Mat | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self) -> int:
        return hash(self.gram)

    def __repr__(self) -> str:
        rows = [[int(x) for x in row] for row in self.gram]
        return f"Lattice({rows})"

    def inner(self, x: Sequence, y: Sequence) -> Q:
        """(x, y) = x^T gram y."""
        return dot(qvec(x), mat_vec(self.gram, qvec(y)))

    def dual_gram(self) -> Mat:
        """Exact inverse of the Gram matrix (Gram of the dual basis)."""
        if self._dual_gram is None:
            inv = invert(self.gram)
            assert inv is not None  # positive definite, hence invertible
            self._dual_gram = inv
        return self._dual_gram

    def pairings(self, x: Sequence) -> Vec:
        """gram @ x: the pairings of x with the basis vectors."""
        return mat_vec(self.gram, qvec(x))

    def is_in_dual(self, x: Sequence) -> bool:
        """x is in the dual lattice iff all basis pairings are integers."""
        return all(p.denominator == 1 for p in self.pairings(x))

    def is_in_shadow(self, x: Sequence) -> bool:
        """Shadow membership: (x, y) - (y, y)/2 in Z for every lattice y.

        y -> (x, y) - (y, y)/2 is additive mod Z (the cross term (y, y') is an
        integer on an integral lattice), so checking the basis vectors suffices:
        (gram x)_i - gram_ii / 2 in Z for all i.
        """
        px = self.pairings(x)
        return all((px[i] - Q(self.gram[i][i], 2)).denominator == 1
                   for i in range(self.rank))

    def to_json_dict(self) -> dict:
        return {"gram": [[int(x) for x in row] for row in self.gram]}


def lattice_from_json_dict(data) -> Lattice:
    if not isinstance(data, dict) or "gram" not in data:
        raise InputError('lattice JSON must be an object with a "gram" key')
    gram = data["gram"]
    if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
        raise InputError('"gram" must be a list of rows')
    return Lattice(gram)


def load_lattice(path: str) -> Lattice:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read lattice file {path}: {exc}") from None
    return lattice_from_json_dict(data)


def dump_lattice(lat: Lattice) -> str:
    return json.dumps(lat.to_json_dict(), sort_keys=True)
