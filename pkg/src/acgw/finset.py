"""Finite sets with injections as both horizontal and vertical morphisms.

Objects are finite sets of string identifiers, canonically stored as
sorted tuples.  A horizontal morphism is an injection recorded as sorted
``(source_id, target_id)`` pairs; a vertical morphism ``A => B`` is also
backed by an injection of ``A`` into ``B`` — the two classes differ only
in the role they play.  Complements are literal set differences, which
makes every canonical construction a genuine subset of its ambient object
(``has_canonical_subobjects`` is true).
"""

from __future__ import annotations

from typing import Any, Hashable

from .core import (
    AcgwInstance,
    CompositionError,
    FactorizationError,
    HorMor,
    PullbackSquare,
    SquareClass,
    VerMor,
)

__all__ = ["FinSetObj", "finset_obj", "FinSetInstance", "mapping_of", "apply_to"]

FinSetObj = tuple[str, ...]


def finset_obj(ids: Any) -> FinSetObj:
    """Build the canonical object on the given ids (sorted, deduplicated)."""
    out = tuple(sorted(set(map(str, ids))))
    return out


def mapping_of(f: HorMor | VerMor) -> dict[str, str]:
    """The underlying injection of a finite-set morphism as a dict."""
    return dict(f.data)


def apply_to(f: HorMor | VerMor, x: str) -> str:
    return mapping_of(f)[x]


def _pairs(mapping: dict[str, str]) -> tuple[tuple[str, str], ...]:
    return tuple(sorted(mapping.items()))


def _image(f: HorMor | VerMor) -> frozenset[str]:
    return frozenset(t for _, t in f.data)


def _inverse(f: HorMor | VerMor) -> dict[str, str]:
    return {t: s for s, t in f.data}


class FinSetInstance(AcgwInstance):
    """The finite-set model.  All canonical constructions return literal
    subsets of the ambient object with inclusion legs."""

    kind = "set"
    has_canonical_subobjects = True

    # ----- objects -------------------------------------------------
    def initial(self) -> FinSetObj:
        return ()

    def is_initial(self, obj: FinSetObj) -> bool:
        return obj == ()

    def obj_eq(self, a: FinSetObj, b: FinSetObj) -> bool:
        return a == b

    def obj_size(self, obj: FinSetObj) -> int:
        return len(obj)

    def obj_label(self, obj: FinSetObj) -> str:
        return "{" + " ".join(obj) + "}" if obj else "{}"

    def validate_obj(self, obj: Any) -> list[str]:
        if not isinstance(obj, tuple):
            return [f"object is not a tuple: {obj!r}"]
        if not all(isinstance(x, str) for x in obj):
            return [f"object has non-string ids: {obj!r}"]
        if tuple(sorted(set(obj))) != obj:
            return [f"object ids are not sorted and unique: {obj!r}"]
        return []

    # ----- morphism helpers -----------------------------------------
    def _inclusion_pairs(self, sub: FinSetObj) -> tuple[tuple[str, str], ...]:
        return tuple((x, x) for x in sub)

    def inclusion_hor(self, sub: FinSetObj, ambient: FinSetObj) -> HorMor:
        """Literal inclusion of a subset as a horizontal morphism."""
        return HorMor(sub, ambient, self._inclusion_pairs(sub))

    def inclusion_ver(self, sub: FinSetObj, ambient: FinSetObj) -> VerMor:
        """Literal inclusion of a subset as a vertical morphism."""
        return VerMor(sub, ambient, self._inclusion_pairs(sub))

    def hor(self, source, target, mapping: dict[str, str]) -> HorMor:
        return HorMor(finset_obj(source), finset_obj(target), _pairs(mapping))

    def ver(self, source, target, mapping: dict[str, str]) -> VerMor:
        return VerMor(finset_obj(source), finset_obj(target), _pairs(mapping))

    # ----- identities and zeros -------------------------------------
    def id_hor(self, obj: FinSetObj) -> HorMor:
        return HorMor(obj, obj, self._inclusion_pairs(obj))

    def id_ver(self, obj: FinSetObj) -> VerMor:
        return VerMor(obj, obj, self._inclusion_pairs(obj))

    def zero_hor(self, obj: FinSetObj) -> HorMor:
        return HorMor((), obj, ())

    def zero_ver(self, obj: FinSetObj) -> VerMor:
        return VerMor((), obj, ())

    # ----- validation ------------------------------------------------
    def _validate_injection(self, f: HorMor | VerMor) -> list[str]:
        problems = self.validate_obj(f.source) + self.validate_obj(f.target)
        if problems:
            return problems
        if not isinstance(f.data, tuple):
            return [f"morphism data is not a tuple: {f.data!r}"]
        try:
            mapping = dict(f.data)
        except (TypeError, ValueError):
            return [f"morphism data is not a pair list: {f.data!r}"]
        if _pairs(mapping) != f.data:
            problems.append("morphism pairs are not sorted by source id")
        if set(mapping) != set(f.source):
            problems.append(
                f"morphism is not total on its source: defined on "
                f"{sorted(mapping)}, source is {list(f.source)}"
            )
        values = list(mapping.values())
        if len(set(values)) != len(values):
            problems.append("morphism is not injective")
        stray = set(values) - set(f.target)
        if stray:
            problems.append(f"morphism maps outside its target: {sorted(stray)}")
        return problems

    def validate_hor(self, f: HorMor) -> list[str]:
        return self._validate_injection(f)

    def validate_ver(self, f: VerMor) -> list[str]:
        return self._validate_injection(f)

    # ----- composition -----------------------------------------------
    def _compose(self, f, g):
        gm = mapping_of(g)
        return _pairs({x: gm[y] for x, y in f.data})

    def compose_hor(self, f: HorMor, g: HorMor) -> HorMor:
        if f.target != g.source:
            raise CompositionError(
                f"cannot compose: {self.obj_label(f.target)} != "
                f"{self.obj_label(g.source)}"
            )
        return HorMor(f.source, g.target, self._compose(f, g))

    def compose_ver(self, f: VerMor, g: VerMor) -> VerMor:
        if f.target != g.source:
            raise CompositionError(
                f"cannot compose: {self.obj_label(f.target)} != "
                f"{self.obj_label(g.source)}"
            )
        return VerMor(f.source, g.target, self._compose(f, g))

    def is_iso_hor(self, f: HorMor) -> bool:
        return len(f.source) == len(f.target)

    def is_iso_ver(self, f: VerMor) -> bool:
        return len(f.source) == len(f.target)

    # ----- complement structure ---------------------------------------
    def coker(self, m: HorMor) -> tuple[FinSetObj, VerMor]:
        rest = finset_obj(set(m.target) - _image(m))
        return rest, self.inclusion_ver(rest, m.target)

    def ker(self, e: VerMor) -> tuple[FinSetObj, HorMor]:
        rest = finset_obj(set(e.target) - _image(e))
        return rest, self.inclusion_hor(rest, e.target)

    def is_complement_pair(self, m: HorMor, e: VerMor) -> bool:
        if m.target != e.target:
            return False
        im_m, im_e = _image(m), _image(e)
        return not (im_m & im_e) and (im_m | im_e) == set(m.target)

    def mixed_pullback(self, m: HorMor, e: VerMor) -> PullbackSquare:
        if m.target != e.target:
            raise FactorizationError(
                "mixed pullback needs a shared target: "
                f"{self.obj_label(m.target)} vs {self.obj_label(e.target)}"
            )
        m_inv = _inverse(m)
        corner_ids = [b for b, y in e.data if y in m_inv]
        corner = finset_obj(corner_ids)
        em = mapping_of(e)
        hor_leg = self.inclusion_hor(corner, e.source)
        ver_leg = VerMor(corner, m.source, _pairs({b: m_inv[em[b]] for b in corner}))
        return PullbackSquare(corner, hor_leg, ver_leg, m, e)

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
        tm, lm, rm, bm = (mapping_of(x) for x in (top, left, right, bottom))
        if any(rm[tm[x]] != bm[lm[x]] for x in top.source):
            return SquareClass.NOT_SQUARE
        # Cartesian: the top picks out exactly the part of the right source
        # sitting over the bottom image.
        over = {b for b in right.source if rm[b] in set(bm.values())}
        if _image(top) == over:
            return SquareClass.CARTESIAN
        return SquareClass.COMMUTING

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
        tm, lm, rm, bm = (mapping_of(x) for x in (top, left, right, bottom))
        return all(rm[tm[x]] == bm[lm[x]] for x in top.source)

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
        tm, lm, rm, bm = (mapping_of(x) for x in (top, left, right, bottom))
        return all(rm[tm[x]] == bm[lm[x]] for x in top.source)

    # ----- factorization -----------------------------------------------
    def _factor(self, f, through):
        if f.target != through.target:
            raise FactorizationError(
                "factorization targets differ: "
                f"{self.obj_label(f.target)} vs {self.obj_label(through.target)}"
            )
        t_inv = _inverse(through)
        out: dict[str, str] = {}
        for x, y in f.data:
            if y not in t_inv:
                raise FactorizationError(
                    f"no factorization: {x} lands at {y}, outside "
                    f"the image of the given morphism"
                )
            out[x] = t_inv[y]
        return _pairs(out)

    def factor_hor(self, f: HorMor, through: HorMor) -> HorMor:
        return HorMor(f.source, through.source, self._factor(f, through))

    def factor_ver(self, f: VerMor, through: VerMor) -> VerMor:
        return VerMor(f.source, through.source, self._factor(f, through))

    def hor_between_cokers(self, m: HorMor, cp: VerMor, cq: VerMor) -> HorMor:
        """Chase ``m: P -> Q`` along complement presentations ``cp: CP => P``
        and ``cq: CQ => Q``."""
        if cp.target != m.source or cq.target != m.target:
            raise FactorizationError("complement presentations do not match m")
        mm, cqi = mapping_of(m), _inverse(cq)
        out: dict[str, str] = {}
        for x, p in cp.data:
            q = mm[p]
            if q not in cqi:
                raise FactorizationError(
                    f"morphism does not descend to complements: image of {x} "
                    f"is {q}, not in the target complement"
                )
            out[x] = cqi[q]
        return HorMor(cp.source, cq.source, _pairs(out))

    def ver_between_kernels(self, e: VerMor, kp: HorMor, kq: HorMor) -> VerMor:
        """Chase ``e: P => Q`` along complement presentations ``kp: KP -> P``
        and ``kq: KQ -> Q``."""
        if kp.target != e.source or kq.target != e.target:
            raise FactorizationError("complement presentations do not match e")
        em, kqi = mapping_of(e), _inverse(kq)
        out: dict[str, str] = {}
        for x, p in kp.data:
            q = em[p]
            if q not in kqi:
                raise FactorizationError(
                    f"morphism does not restrict to complements: image of {x} "
                    f"is {q}, not in the target complement"
                )
            out[x] = kqi[q]
        return VerMor(kp.source, kq.source, _pairs(out))

    # ----- spans ---------------------------------------------------------
    def flat_key(self, back: VerMor, front: HorMor) -> Hashable:
        fm = mapping_of(front)
        return frozenset((y, fm[x]) for x, y in back.data)
