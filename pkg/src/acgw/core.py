"""Core interfaces for categories with two interlocking morphism classes.

The library works inside categories that carry two distinguished classes of
morphisms — *horizontal* arrows (inclusion-like monics, written ``A -> B``)
and *vertical* arrows (projection-like, written ``A => B``) — sharing a
single initial object.  Horizontal and vertical morphisms into a fixed
object correspond to each other through a pair of mutually inverse
complement operations (:meth:`AcgwInstance.coker` and
:meth:`AcgwInstance.ker`), and mixed cospans complete to canonical pullback
squares (:meth:`AcgwInstance.mixed_pullback`).

Everything downstream — chain complexes, homology, snake constructions,
long exact sequences — is written against the abstract primitive inventory
declared here, so adding an instance only requires implementing
:class:`AcgwInstance`.  Two instances ship with the library: finite sets
with injections on both sides (:mod:`acgw.finset`) and finite-dimensional
vector spaces over a prime field (:mod:`acgw.linear`).
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import IntEnum
from typing import Any, Hashable, Iterable

__all__ = [
    "AcgwError",
    "ValidationError",
    "CompositionError",
    "FactorizationError",
    "CapabilityError",
    "SquareClass",
    "HorMor",
    "VerMor",
    "PullbackSquare",
    "FlatMor",
    "AcgwInstance",
    "id_flat",
    "zero_flat",
    "flat_of_hor",
    "flat_of_ver",
    "flat_is_zero",
    "flat_is_iso",
    "compose_flat",
    "span_equiv",
    "validate_flat",
]


class AcgwError(Exception):
    """Base class for all errors raised by this library."""


class ValidationError(AcgwError):
    """A structure failed validation.

    Attributes:
        problems: human-readable descriptions of every violation found.
    """

    def __init__(self, problems: Iterable[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems) or "invalid structure")


class CompositionError(AcgwError):
    """A composite could not be assembled into a valid structure."""


class FactorizationError(AcgwError):
    """A required (unique) factorization does not exist."""


class CapabilityError(AcgwError):
    """The requested construction is not available for this instance."""


class SquareClass(IntEnum):
    """Classification of a mixed square, ordered by strength.

    ``NOT_SQUARE`` covers shape mismatches and non-commuting diagrams; a
    square is *distinguished* exactly when its class is at least
    ``PSEUDO_COMMUTATIVE``.
    """

    NOT_SQUARE = 0
    COMMUTING = 1
    PSEUDO_COMMUTATIVE = 2
    CARTESIAN = 3

    @property
    def is_distinguished(self) -> bool:
        return self >= SquareClass.PSEUDO_COMMUTATIVE


@dataclass(frozen=True)
class HorMor:
    """A horizontal (inclusion-like) morphism ``source -> target``.

    The ``data`` payload is instance-specific but always hashable: sorted
    ``(source_id, target_id)`` pairs for finite sets, a full-column-rank
    matrix as a tuple of rows for the linear instance.
    """

    source: Any
    target: Any
    data: Hashable


@dataclass(frozen=True)
class VerMor:
    """A vertical (projection-like) morphism ``source => target``.

    For finite sets the payload is again an injection of ids; for the
    linear instance it is the matrix of the underlying surjection
    ``target ->> source`` (shape ``source.dim x target.dim``).
    """

    source: Any
    target: Any
    data: Hashable


@dataclass(frozen=True)
class PullbackSquare:
    """The canonical square completing ``mono: A -> C  <=  epi: B => C``.

    Attributes:
        corner: the pullback object ``P``.
        to_epi_source: horizontal leg ``P -> B``.
        to_mono_source: vertical leg ``P => A``.
        mono: the original bottom horizontal morphism ``A -> C``.
        epi: the original right vertical morphism ``B => C``.
    """

    corner: Any
    to_epi_source: HorMor
    to_mono_source: VerMor
    mono: HorMor
    epi: VerMor


@dataclass(frozen=True)
class FlatMor:
    """A span ``source <= middle -> target`` acting as a single morphism.

    ``back`` is vertical with ``back.source == middle`` and
    ``back.target == source``; ``front`` is horizontal from ``middle`` to
    ``target``.  In finite sets these are exactly partial injections from
    ``source`` to ``target``.
    """

    source: Any
    middle: Any
    target: Any
    back: VerMor
    front: HorMor


class AcgwInstance(ABC):
    """Primitive inventory one concrete category must provide.

    Implementations must be pure: every method returns fresh immutable
    values and never mutates its arguments.
    """

    #: short tag used by documents and the CLI ("set" or "linear")
    kind: str = "abstract"
    #: whether canonical constructions return literal subobjects whose
    #: identity is stable across independent runs (true for finite sets,
    #: false for coordinate-based instances)
    has_canonical_subobjects: bool = False

    # ----- objects -------------------------------------------------
    @abstractmethod
    def initial(self) -> Any:
        """The shared initial object of both morphism classes."""

    @abstractmethod
    def is_initial(self, obj: Any) -> bool: ...

    @abstractmethod
    def obj_eq(self, a: Any, b: Any) -> bool: ...

    @abstractmethod
    def obj_size(self, obj: Any) -> int:
        """Cardinality (sets) or dimension (linear) of ``obj``."""

    @abstractmethod
    def obj_label(self, obj: Any) -> str:
        """Short human-readable rendering of ``obj``."""

    @abstractmethod
    def validate_obj(self, obj: Any) -> list[str]: ...

    # ----- morphisms ------------------------------------------------
    @abstractmethod
    def id_hor(self, obj: Any) -> HorMor: ...

    @abstractmethod
    def id_ver(self, obj: Any) -> VerMor: ...

    @abstractmethod
    def zero_hor(self, obj: Any) -> HorMor:
        """The unique horizontal morphism from the initial object."""

    @abstractmethod
    def zero_ver(self, obj: Any) -> VerMor:
        """The unique vertical morphism from the initial object."""

    @abstractmethod
    def validate_hor(self, f: HorMor) -> list[str]: ...

    @abstractmethod
    def validate_ver(self, f: VerMor) -> list[str]: ...

    @abstractmethod
    def compose_hor(self, f: HorMor, g: HorMor) -> HorMor:
        """``f: A -> B`` then ``g: B -> C``, giving ``A -> C``."""

    @abstractmethod
    def compose_ver(self, f: VerMor, g: VerMor) -> VerMor:
        """``f: A => B`` then ``g: B => C``, giving ``A => C``."""

    @abstractmethod
    def is_iso_hor(self, f: HorMor) -> bool: ...

    @abstractmethod
    def is_iso_ver(self, f: VerMor) -> bool: ...

    # ----- complement structure ------------------------------------
    @abstractmethod
    def coker(self, m: HorMor) -> tuple[Any, VerMor]:
        """Complement of ``m: A -> B``: object ``B // A`` with its
        canonical vertical morphism into ``B``."""

    @abstractmethod
    def ker(self, e: VerMor) -> tuple[Any, HorMor]:
        """Complement of ``e: A => B``: object ``B \\ A`` with its
        canonical horizontal morphism into ``B``."""

    @abstractmethod
    def is_complement_pair(self, m: HorMor, e: VerMor) -> bool:
        """Whether ``m: A -> B`` and ``e: C => B`` are complements of each
        other in ``B`` (the two-sided exactness condition)."""

    @abstractmethod
    def mixed_pullback(self, m: HorMor, e: VerMor) -> PullbackSquare:
        """Complete ``m: A -> C`` and ``e: B => C`` to the canonical
        distinguished square with corner ``P``, horizontal leg
        ``P -> B`` and vertical leg ``P => A``."""

    @abstractmethod
    def classify_mixed(
        self, top: HorMor, left: VerMor, right: VerMor, bottom: HorMor
    ) -> SquareClass:
        """Classify a mixed square.

        Orientation: ``top: P -> B``, ``left: P => A``, ``right: B => C``,
        ``bottom: A -> C``.  Returns ``NOT_SQUARE`` when the shape is
        wrong or the square fails to commute.
        """

    @abstractmethod
    def hor_square_commutes(
        self, top: HorMor, left: HorMor, right: HorMor, bottom: HorMor
    ) -> bool:
        """All-horizontal square: ``top: P -> B``, ``left: P -> A``,
        ``right: B -> C``, ``bottom: A -> C``; commutes iff
        ``right . top == bottom . left``."""

    @abstractmethod
    def ver_square_commutes(
        self, top: VerMor, left: VerMor, right: VerMor, bottom: VerMor
    ) -> bool:
        """All-vertical square with the same orientation convention."""

    # ----- factorization and induced morphisms ---------------------
    @abstractmethod
    def factor_hor(self, f: HorMor, through: HorMor) -> HorMor:
        """Unique ``h`` with ``through . h == f`` for ``f: A -> C`` and
        ``through: B -> C``; raises :class:`FactorizationError` if the
        image of ``f`` does not lie inside ``through``."""

    @abstractmethod
    def factor_ver(self, f: VerMor, through: VerMor) -> VerMor:
        """Unique ``h`` with ``through . h == f`` for ``f: A => C`` and
        ``through: B => C``."""

    @abstractmethod
    def hor_between_cokers(self, m: HorMor, cp: VerMor, cq: VerMor) -> HorMor:
        """Horizontal morphism induced by ``m: P -> Q`` between complement
        presentations ``cp: CP => P`` and ``cq: CQ => Q``; raises
        :class:`FactorizationError` when ``m`` does not descend."""

    @abstractmethod
    def ver_between_kernels(self, e: VerMor, kp: HorMor, kq: HorMor) -> VerMor:
        """Vertical morphism induced by ``e: P => Q`` between complement
        presentations ``kp: KP -> P`` and ``kq: KQ -> Q``."""

    # ----- spans ----------------------------------------------------
    @abstractmethod
    def flat_key(self, back: VerMor, front: HorMor) -> Hashable:
        """Canonical invariant of the span ``back.target <= middle ->
        front.target``; two spans between the same endpoints are
        equivalent iff their keys agree."""


# ---------------------------------------------------------------------------
# Span (flat morphism) calculus, generic over the instance.
# ---------------------------------------------------------------------------


def id_flat(inst: AcgwInstance, obj: Any) -> FlatMor:
    """Identity span on ``obj``."""
    return FlatMor(obj, obj, obj, inst.id_ver(obj), inst.id_hor(obj))


def zero_flat(inst: AcgwInstance, source: Any, target: Any) -> FlatMor:
    """The zero span ``source <= initial -> target``."""
    return FlatMor(
        source, inst.initial(), target, inst.zero_ver(source), inst.zero_hor(target)
    )


def flat_of_hor(inst: AcgwInstance, f: HorMor) -> FlatMor:
    """View a horizontal morphism as the span with identity back leg."""
    return FlatMor(f.source, f.source, f.target, inst.id_ver(f.source), f)


def flat_of_ver(inst: AcgwInstance, v: VerMor) -> FlatMor:
    """View a vertical morphism ``Z => Y`` as a span from ``Y`` to ``Z``.

    Note the direction flip: vertical morphisms act like projections, so
    the induced span runs from the vertical target to the vertical source.
    """
    return FlatMor(v.target, v.source, v.source, v, inst.id_hor(v.source))


def validate_flat(inst: AcgwInstance, fl: FlatMor) -> list[str]:
    problems: list[str] = []
    problems += [f"back: {p}" for p in inst.validate_ver(fl.back)]
    problems += [f"front: {p}" for p in inst.validate_hor(fl.front)]
    if problems:
        return problems
    if not inst.obj_eq(fl.back.source, fl.middle):
        problems.append("back leg does not start at the middle object")
    if not inst.obj_eq(fl.front.source, fl.middle):
        problems.append("front leg does not start at the middle object")
    if not inst.obj_eq(fl.back.target, fl.source):
        problems.append("back leg does not land in the source object")
    if not inst.obj_eq(fl.front.target, fl.target):
        problems.append("front leg does not land in the target object")
    return problems


def flat_is_zero(inst: AcgwInstance, fl: FlatMor) -> bool:
    return inst.is_initial(fl.middle)


def flat_is_iso(inst: AcgwInstance, fl: FlatMor) -> bool:
    """A span is invertible exactly when both of its legs are."""
    return inst.is_iso_ver(fl.back) and inst.is_iso_hor(fl.front)


def compose_flat(inst: AcgwInstance, f: FlatMor, g: FlatMor) -> FlatMor:
    """Compose spans ``f: X -> Y`` and ``g: Y -> Z`` via the mixed pullback
    of ``f.front`` against ``g.back``."""
    if not inst.obj_eq(f.target, g.source):
        raise CompositionError(
            f"span composition mismatch: {inst.obj_label(f.target)} vs "
            f"{inst.obj_label(g.source)}"
        )
    sq = inst.mixed_pullback(f.front, g.back)
    back = inst.compose_ver(sq.to_mono_source, f.back)
    front = inst.compose_hor(sq.to_epi_source, g.front)
    return FlatMor(f.source, sq.corner, g.target, back, front)


def span_equiv(inst: AcgwInstance, f: FlatMor, g: FlatMor) -> bool:
    """Whether two spans between the same endpoints are equivalent (equal up
    to unique isomorphism of middles)."""
    if not (inst.obj_eq(f.source, g.source) and inst.obj_eq(f.target, g.target)):
        return False
    return inst.flat_key(f.back, f.front) == inst.flat_key(g.back, g.front)
