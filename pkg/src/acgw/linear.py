"""Finite-dimensional vector spaces over a prime field.

Objects are :class:`VectObj` values recording a dimension and the prime.
A horizontal morphism ``A -> B`` is backed by a full-column-rank matrix
``B x A`` (a mono); a vertical morphism ``A => B`` is backed by a
full-row-rank matrix ``A x B``, the underlying surjection ``B ->> A``.
Matrices are stored as tuples of row tuples with entries reduced mod p;
all arithmetic happens in numpy int64 arrays.

Because kernels and complements are produced in fresh coordinates, this
instance does not expose canonical subobjects
(``has_canonical_subobjects`` is false), which rules out the
constructions that splice literal subsets — everything else works.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable

import numpy as np

from .core import (
    AcgwInstance,
    CompositionError,
    FactorizationError,
    HorMor,
    PullbackSquare,
    SquareClass,
    VerMor,
)

__all__ = [
    "VectObj",
    "LinearInstance",
    "mat_of",
    "tuple_of",
    "rref",
    "mat_rank",
    "solve",
    "nullspace",
    "colbasis",
]

Mat = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class VectObj:
    """A vector space ``F_p^dim``."""

    dim: int
    p: int


# ---------------------------------------------------------------------------
# Matrix arithmetic mod p.
# ---------------------------------------------------------------------------


def mat_of(data: Mat, rows: int, cols: int) -> np.ndarray:
    """Decode stored row tuples into a ``rows x cols`` int64 array."""
    return np.asarray(data, dtype=np.int64).reshape(rows, cols)


def tuple_of(arr: np.ndarray, p: int) -> Mat:
    arr = np.mod(np.asarray(arr, dtype=np.int64), p)
    return tuple(tuple(int(v) for v in row) for row in arr)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p, with the pivot column indices."""
    r = np.mod(a.astype(np.int64), p).copy()
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row == rows:
            break
        hit = next((i for i in range(row, rows) if r[i, col]), None)
        if hit is None:
            continue
        if hit != row:
            r[[row, hit]] = r[[hit, row]]
        r[row] = (r[row] * pow(int(r[row, col]), p - 2, p)) % p
        for i in range(rows):
            if i != row and r[i, col]:
                r[i] = (r[i] - r[i, col] * r[row]) % p
        pivots.append(col)
        row += 1
    return r, pivots


def mat_rank(a: np.ndarray, p: int) -> int:
    return len(rref(a, p)[1])


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Some ``x`` with ``a @ x == b`` mod p (free variables zero), or None."""
    m, n = a.shape
    k = b.shape[1]
    r, pivots = rref(np.hstack([a, b]), p)
    if any(c >= n for c in pivots):
        return None
    x = np.zeros((n, k), dtype=np.int64)
    for j, col in enumerate(pivots):
        x[col] = r[j, n:]
    return x


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical kernel basis (one column per free variable of the rref)."""
    _, n = a.shape
    r, pivots = rref(a, p)
    free = [c for c in range(n) if c not in pivots]
    out = np.zeros((n, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        out[fc, k] = 1
        for j, pc in enumerate(pivots):
            out[pc, k] = (-r[j, fc]) % p
    return out


def colbasis(a: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis of the column space (rref rows of the transpose)."""
    r, pivots = rref(a.T, p)
    return r[: len(pivots)].T.copy()


class LinearInstance(AcgwInstance):
    """The prime-field model ``F_p``."""

    kind = "linear"
    has_canonical_subobjects = False

    def __init__(self, p: int = 2):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise ValueError(f"field order must be prime, got {p}")
        self.p = p

    # ----- objects -------------------------------------------------
    def obj(self, dim: int) -> VectObj:
        return VectObj(dim, self.p)

    def initial(self) -> VectObj:
        return VectObj(0, self.p)

    def is_initial(self, obj: VectObj) -> bool:
        return obj.dim == 0

    def obj_eq(self, a: VectObj, b: VectObj) -> bool:
        return a == b

    def obj_size(self, obj: VectObj) -> int:
        return obj.dim

    def obj_label(self, obj: VectObj) -> str:
        return f"F{obj.p}^{obj.dim}"

    def validate_obj(self, obj: Any) -> list[str]:
        if not isinstance(obj, VectObj):
            return [f"object is not a vector space: {obj!r}"]
        if obj.p != self.p:
            return [f"object lives over F{obj.p}, instance over F{self.p}"]
        if obj.dim < 0:
            return [f"negative dimension: {obj.dim}"]
        return []

    # ----- matrix access --------------------------------------------
    def hor_matrix(self, f: HorMor) -> np.ndarray:
        """The mono ``source -> target`` as a ``target.dim x source.dim``
        array."""
        return mat_of(f.data, f.target.dim, f.source.dim)

    def ver_matrix(self, f: VerMor) -> np.ndarray:
        """The underlying surjection ``target ->> source`` as a
        ``source.dim x target.dim`` array."""
        return mat_of(f.data, f.source.dim, f.target.dim)

    def hor(self, source: VectObj, target: VectObj, arr) -> HorMor:
        return HorMor(source, target, tuple_of(np.asarray(arr), self.p))

    def ver(self, source: VectObj, target: VectObj, arr) -> VerMor:
        return VerMor(source, target, tuple_of(np.asarray(arr), self.p))

    # ----- identities and zeros ---------------------------------------
    def id_hor(self, obj: VectObj) -> HorMor:
        return self.hor(obj, obj, np.eye(obj.dim, dtype=np.int64))

    def id_ver(self, obj: VectObj) -> VerMor:
        return self.ver(obj, obj, np.eye(obj.dim, dtype=np.int64))

    def zero_hor(self, obj: VectObj) -> HorMor:
        return self.hor(self.initial(), obj, np.zeros((obj.dim, 0), np.int64))

    def zero_ver(self, obj: VectObj) -> VerMor:
        return self.ver(self.initial(), obj, np.zeros((0, obj.dim), np.int64))

    # ----- validation --------------------------------------------------
    def _validate_mat(self, f, rows: int, cols: int) -> list[str]:
        problems = self.validate_obj(f.source) + self.validate_obj(f.target)
        if problems:
            return problems
        data = f.data
        if not isinstance(data, tuple) or len(data) != rows:
            return [f"matrix must have {rows} rows, got {data!r}"]
        for row in data:
            if not isinstance(row, tuple) or len(row) != cols:
                return [f"matrix rows must have {cols} entries, got {row!r}"]
            for v in row:
                if not isinstance(v, int) or not 0 <= v < self.p:
                    return [f"matrix entry out of F{self.p}: {v!r}"]
        return []

    def validate_hor(self, f: HorMor) -> list[str]:
        problems = self._validate_mat(f, f.target.dim, f.source.dim)
        if problems:
            return problems
        if mat_rank(self.hor_matrix(f), self.p) != f.source.dim:
            problems.append("horizontal matrix is not injective")
        return problems

    def validate_ver(self, f: VerMor) -> list[str]:
        problems = self._validate_mat(f, f.source.dim, f.target.dim)
        if problems:
            return problems
        if mat_rank(self.ver_matrix(f), self.p) != f.source.dim:
            problems.append("vertical matrix is not surjective")
        return problems

    # ----- composition ----------------------------------------------------
    def compose_hor(self, f: HorMor, g: HorMor) -> HorMor:
        if f.target != g.source:
            raise CompositionError("horizontal composition mismatch")
        return self.hor(f.source, g.target, self.hor_matrix(g) @ self.hor_matrix(f))

    def compose_ver(self, f: VerMor, g: VerMor) -> VerMor:
        if f.target != g.source:
            raise CompositionError("vertical composition mismatch")
        return self.ver(f.source, g.target, self.ver_matrix(f) @ self.ver_matrix(g))

    def is_iso_hor(self, f: HorMor) -> bool:
        return f.source.dim == f.target.dim and mat_rank(
            self.hor_matrix(f), self.p
        ) == f.source.dim

    def is_iso_ver(self, f: VerMor) -> bool:
        return f.source.dim == f.target.dim and mat_rank(
            self.ver_matrix(f), self.p
        ) == f.source.dim

    # ----- complement structure ---------------------------------------------
    def coker(self, m: HorMor) -> tuple[VectObj, VerMor]:
        n = self.hor_matrix(m)
        b = m.target.dim
        r, pivots = rref(n.T, self.p)
        nonpiv = [i for i in range(b) if i not in pivots]
        e = np.zeros((len(nonpiv), b), dtype=np.int64)
        for i, ni in enumerate(nonpiv):
            e[i, ni] = 1
            for j, pj in enumerate(pivots):
                e[i, pj] = (-r[j, ni]) % self.p
        obj = self.obj(len(nonpiv))
        return obj, self.ver(obj, m.target, e)

    def ker(self, e: VerMor) -> tuple[VectObj, HorMor]:
        n = nullspace(self.ver_matrix(e), self.p)
        obj = self.obj(n.shape[1])
        return obj, self.hor(obj, e.target, n)

    def is_complement_pair(self, m: HorMor, e: VerMor) -> bool:
        if m.target != e.target:
            return False
        if m.source.dim + e.source.dim != m.target.dim:
            return False
        prod = np.mod(self.ver_matrix(e) @ self.hor_matrix(m), self.p)
        return not prod.any()

    def mixed_pullback(self, m: HorMor, e: VerMor) -> PullbackSquare:
        if m.target != e.target:
            raise FactorizationError("mixed pullback needs a shared target")
        t = np.mod(self.ver_matrix(e) @ self.hor_matrix(m), self.p)
        basis = colbasis(t, self.p)
        corner = self.obj(basis.shape[1])
        onto = solve(basis, t, self.p)
        assert onto is not None
        return PullbackSquare(
            corner,
            self.hor(corner, e.source, basis),
            self.ver(corner, m.source, onto),
            m,
            e,
        )

    def classify_mixed(
        self, top: HorMor, left: VerMor, right: VerMor, bottom: HorMor
    ) -> SquareClass:
        if self.validate_hor(top) or self.validate_hor(bottom):
            return SquareClass.NOT_SQUARE
        if self.validate_ver(left) or self.validate_ver(right):
            return SquareClass.NOT_SQUARE
        if (
            top.source != left.source
            or top.target != right.source
            or left.target != bottom.source
            or right.target != bottom.target
        ):
            return SquareClass.NOT_SQUARE
        lhs = self.hor_matrix(top) @ self.ver_matrix(left)
        rhs = self.ver_matrix(right) @ self.hor_matrix(bottom)
        if np.mod(lhs - rhs, self.p).any():
            return SquareClass.NOT_SQUARE
        # Compare against the canonical pullback of the outer cospan.
        sq = self.mixed_pullback(bottom, right)
        if sq.corner != top.source:
            return SquareClass.COMMUTING
        u = solve(self.hor_matrix(sq.to_epi_source), self.hor_matrix(top), self.p)
        if u is None or mat_rank(u, self.p) != top.source.dim:
            return SquareClass.COMMUTING
        cmp_left = np.mod(u @ self.ver_matrix(left), self.p)
        if np.mod(cmp_left - self.ver_matrix(sq.to_mono_source), self.p).any():
            return SquareClass.COMMUTING
        return SquareClass.CARTESIAN

    def hor_square_commutes(
        self, top: HorMor, left: HorMor, right: HorMor, bottom: HorMor
    ) -> bool:
        if (
            top.source != left.source
            or top.target != right.source
            or left.target != bottom.source
            or right.target != bottom.target
        ):
            return False
        lhs = self.hor_matrix(right) @ self.hor_matrix(top)
        rhs = self.hor_matrix(bottom) @ self.hor_matrix(left)
        return not np.mod(lhs - rhs, self.p).any()

    def ver_square_commutes(
        self, top: VerMor, left: VerMor, right: VerMor, bottom: VerMor
    ) -> bool:
        if (
            top.source != left.source
            or top.target != right.source
            or left.target != bottom.source
            or right.target != bottom.target
        ):
            return False
        lhs = self.ver_matrix(top) @ self.ver_matrix(right)
        rhs = self.ver_matrix(left) @ self.ver_matrix(bottom)
        return not np.mod(lhs - rhs, self.p).any()

    # ----- factorization -----------------------------------------------------
    def factor_hor(self, f: HorMor, through: HorMor) -> HorMor:
        if f.target != through.target:
            raise FactorizationError("factorization targets differ")
        h = solve(self.hor_matrix(through), self.hor_matrix(f), self.p)
        if h is None:
            raise FactorizationError(
                "image does not lie inside the given horizontal morphism"
            )
        return self.hor(f.source, through.source, h)

    def factor_ver(self, f: VerMor, through: VerMor) -> VerMor:
        if f.target != through.target:
            raise FactorizationError("factorization targets differ")
        e_f, e_g = self.ver_matrix(f), self.ver_matrix(through)
        section = solve(e_g, np.eye(through.source.dim, dtype=np.int64), self.p)
        assert section is not None  # valid vertical morphisms are surjective
        h = np.mod(e_f @ section, self.p)
        if np.mod(h @ e_g - e_f, self.p).any():
            raise FactorizationError(
                "vertical morphism does not factor: kernels are incompatible"
            )
        return self.ver(f.source, through.source, h)

    def hor_between_cokers(self, m: HorMor, cp: VerMor, cq: VerMor) -> HorMor:
        if cp.target != m.source or cq.target != m.target:
            raise FactorizationError("complement presentations do not match m")
        e_cp, e_cq = self.ver_matrix(cp), self.ver_matrix(cq)
        reach = np.mod(e_cq @ self.hor_matrix(m), self.p)
        if np.mod(reach @ nullspace(e_cp, self.p), self.p).any():
            raise FactorizationError("morphism does not descend to complements")
        section = solve(e_cp, np.eye(cp.source.dim, dtype=np.int64), self.p)
        assert section is not None
        n = np.mod(reach @ section, self.p)
        if mat_rank(n, self.p) != cp.source.dim:
            raise FactorizationError("induced complement morphism is not injective")
        return self.hor(cp.source, cq.source, n)

    def ver_between_kernels(self, e: VerMor, kp: HorMor, kq: HorMor) -> VerMor:
        if kp.target != e.source or kq.target != e.target:
            raise FactorizationError("complement presentations do not match e")
        reach = np.mod(self.ver_matrix(e) @ self.hor_matrix(kq), self.p)
        f = solve(self.hor_matrix(kp), reach, self.p)
        if f is None:
            raise FactorizationError("morphism does not restrict to complements")
        if mat_rank(f, self.p) != kp.source.dim:
            raise FactorizationError("induced complement morphism is not surjective")
        return self.ver(kp.source, kq.source, f)

    # ----- spans ---------------------------------------------------------------
    def flat_key(self, back: VerMor, front: HorMor) -> Hashable:
        composite = np.mod(self.hor_matrix(front) @ self.ver_matrix(back), self.p)
        return (composite.shape, tuple_of(composite, self.p))
