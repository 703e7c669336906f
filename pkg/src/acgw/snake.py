"""Snake constructions: six-term zigzags and long exact sequences.

The input of the weak snake is a three-by-three arrangement: a top and a
bottom complement pair, a middle pair whose mixed pullback is trivial,
vertical comparison morphisms into the top row, horizontal ones into the
bottom row, two distinguished mixed squares on the corners and two
commuting squares on the straight sides.  The output is a six-object
zigzag (kernel complements of the three columns, then cokernel
complements) connected by five transitions, exact everywhere.

The strong variant relaxes the outer rows: the top mono and the bottom
epi only exist after restricting along an intermediate object on each
side.  Its zigzag is exact at the four interior positions.  Splicing the
strong snakes of one short exact sequence of complexes, degree by degree,
yields the long exact homology sequence (:func:`les_of_ses`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .chains import ChainSES, Transition, is_inclusion_mor
from .core import (
    AcgwError,
    AcgwInstance,
    CapabilityError,
    FlatMor,
    HorMor,
    VerMor,
)
from .finset import mapping_of

__all__ = [
    "ExactZigzag",
    "validate_zigzag",
    "zigzag_exactness",
    "zigzag_is_exact",
    "flat_morphism",
    "SnakeInputWeak",
    "SnakeInputStrong",
    "validate_snake_weak",
    "validate_snake_strong",
    "snake_weak",
    "snake_strong",
    "les_of_ses",
]


@dataclass(frozen=True)
class ExactZigzag:
    """A row of objects joined by transitions, with exactness bookkeeping.

    ``transitions[j]`` sits between ``objects[j]`` (via its vertical leg)
    and ``objects[j + 1]`` (via its horizontal leg).
    ``non_exact_positions`` marks object positions where exactness is not
    claimed.
    """

    inst: AcgwInstance = field(compare=False)
    objects: tuple = ()
    transitions: tuple[Transition, ...] = ()
    labels: tuple[str, ...] = ()
    transition_labels: tuple[str, ...] = ()
    non_exact_positions: frozenset[int] = frozenset()


def validate_zigzag(zz: ExactZigzag) -> list[str]:
    inst = zz.inst
    problems: list[str] = []
    if len(zz.transitions) != max(len(zz.objects) - 1, 0):
        problems.append("wrong number of transitions")
    if len(zz.labels) != len(zz.objects):
        problems.append("wrong number of labels")
    if len(zz.transition_labels) != len(zz.transitions):
        problems.append("wrong number of transition labels")
    if problems:
        return problems
    for j, t in enumerate(zz.transitions):
        problems += [f"transition {j} upper leg: {p}" for p in inst.validate_ver(t.into_upper)]
        problems += [f"transition {j} lower leg: {p}" for p in inst.validate_hor(t.into_lower)]
        if problems:
            continue
        if not inst.obj_eq(t.into_upper.source, t.obj) or not inst.obj_eq(
            t.into_lower.source, t.obj
        ):
            problems.append(f"transition {j} legs do not start at its object")
        if not inst.obj_eq(t.into_upper.target, zz.objects[j]):
            problems.append(f"transition {j} upper leg misses object {j}")
        if not inst.obj_eq(t.into_lower.target, zz.objects[j + 1]):
            problems.append(f"transition {j} lower leg misses object {j + 1}")
    return problems


def zigzag_exactness(zz: ExactZigzag) -> list[bool]:
    """Exactness verdict at every object position."""
    inst = zz.inst
    out = []
    last = len(zz.objects) - 1
    for j, obj in enumerate(zz.objects):
        incoming = zz.transitions[j - 1].into_lower if j > 0 else inst.zero_hor(obj)
        outgoing = zz.transitions[j].into_upper if j < last else inst.zero_ver(obj)
        out.append(inst.is_complement_pair(incoming, outgoing))
    return out


def zigzag_is_exact(zz: ExactZigzag) -> bool:
    """Exact at every position not explicitly exempted."""
    return all(
        ok
        for j, ok in enumerate(zigzag_exactness(zz))
        if j not in zz.non_exact_positions
    )


def flat_morphism(zz: ExactZigzag, j: int) -> FlatMor:
    """The span ``objects[j] <= T_j -> objects[j + 1]``."""
    t = zz.transitions[j]
    return FlatMor(zz.objects[j], t.obj, zz.objects[j + 1], t.into_upper, t.into_lower)


# ---------------------------------------------------------------------------
# Weak snake.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnakeInputWeak:
    """Input of the weak snake construction.

    Rows (objects named for orientation only)::

        A  >->  B  <<=  C        top complement pair
        X  >->  Y  <<=  Z        middle pair, trivial mixed pullback
        A' >->  B' <<=  C'       bottom complement pair

    Columns go up vertically (``X => A`` etc.) and down horizontally
    (``X -> A'`` etc.).  The two corner squares (upper-left mixed on the
    mono side, lower-right mixed on the epi side) must be distinguished;
    the remaining two squares must commute.
    """

    inst: AcgwInstance = field(compare=False)
    top_mono: HorMor = None  # A -> B
    top_epi: VerMor = None  # C => B
    mid_mono: HorMor = None  # X -> Y
    mid_epi: VerMor = None  # Z => Y
    bot_mono: HorMor = None  # A' -> B'
    bot_epi: VerMor = None  # C' => B'
    left_up: VerMor = None  # X => A
    left_down: HorMor = None  # X -> A'
    mid_up: VerMor = None  # Y => B
    mid_down: HorMor = None  # Y -> B'
    right_up: VerMor = None  # Z => C
    right_down: HorMor = None  # Z -> C'


def validate_snake_weak(inp: SnakeInputWeak) -> list[str]:
    inst = inp.inst
    problems: list[str] = []
    named = {
        "top_mono": inp.top_mono,
        "mid_mono": inp.mid_mono,
        "bot_mono": inp.bot_mono,
        "left_down": inp.left_down,
        "mid_down": inp.mid_down,
        "right_down": inp.right_down,
    }
    for name, mor in named.items():
        problems += [f"{name}: {p}" for p in inst.validate_hor(mor)]
    for name, mor in {
        "top_epi": inp.top_epi,
        "mid_epi": inp.mid_epi,
        "bot_epi": inp.bot_epi,
        "left_up": inp.left_up,
        "mid_up": inp.mid_up,
        "right_up": inp.right_up,
    }.items():
        problems += [f"{name}: {p}" for p in inst.validate_ver(mor)]
    if problems:
        return problems
    if not inst.is_complement_pair(inp.top_mono, inp.top_epi):
        problems.append("top row is not a complement pair")
    if not inst.is_complement_pair(inp.bot_mono, inp.bot_epi):
        problems.append("bottom row is not a complement pair")
    if inst.obj_eq(inp.mid_mono.target, inp.mid_epi.target):
        if not inst.is_initial(
            inst.mixed_pullback(inp.mid_mono, inp.mid_epi).corner
        ):
            problems.append("middle row has a nontrivial mixed pullback")
    else:
        problems.append("middle row morphisms do not share a target")
    cls = inst.classify_mixed(inp.mid_mono, inp.left_up, inp.mid_up, inp.top_mono)
    if not cls.is_distinguished:
        problems.append(f"upper-left square is not distinguished ({cls.name})")
    cls = inst.classify_mixed(inp.right_down, inp.mid_epi, inp.bot_epi, inp.mid_down)
    if not cls.is_distinguished:
        problems.append(f"lower-right square is not distinguished ({cls.name})")
    if not inst.ver_square_commutes(
        inp.mid_epi, inp.right_up, inp.mid_up, inp.top_epi
    ):
        problems.append("upper-right square does not commute")
    if not inst.hor_square_commutes(
        inp.mid_mono, inp.left_down, inp.mid_down, inp.bot_mono
    ):
        problems.append("lower-left square does not commute")
    return problems


_WEAK_LABELS = (
    "ker of left column",
    "ker of middle column",
    "ker of right column",
    "coker of left column",
    "coker of middle column",
    "coker of right column",
)
_WEAK_TRANSITION_LABELS = (
    "kernel-side step",
    "kernel pullback",
    "connecting step",
    "cokernel pullback",
    "cokernel-side step",
)


def snake_weak(inp: SnakeInputWeak) -> ExactZigzag:
    """The six-term exact zigzag of a weak snake input."""
    inst = inp.inst

    o1, kleg1 = inst.ker(inp.left_up)
    o2, kleg2 = inst.ker(inp.mid_up)
    o3, kleg3 = inst.ker(inp.right_up)
    o4, cleg4 = inst.coker(inp.left_down)
    o5, cleg5 = inst.coker(inp.mid_down)
    o6, cleg6 = inst.coker(inp.right_down)

    t1 = Transition(
        o1,
        inst.id_ver(o1),
        inst.factor_hor(inst.compose_hor(kleg1, inp.top_mono), kleg2),
    )

    sq = inst.mixed_pullback(kleg2, inp.top_epi)
    t2 = Transition(
        sq.corner,
        sq.to_mono_source,
        inst.factor_hor(sq.to_epi_source, kleg3),
    )

    rest, cleg_rest = inst.coker(inp.mid_mono)
    lifted_epi = inst.factor_ver(inp.mid_epi, cleg_rest)  # Z => rest
    conn, conn_hor = inst.ker(lifted_epi)  # conn -> rest
    ker_mid, kleg_mid = inst.ker(inp.mid_epi)  # ker g -> Y
    lifted_mono = inst.factor_hor(inp.mid_mono, kleg_mid)  # X -> ker g
    conn_dual, _ = inst.coker(lifted_mono)
    if not inst.obj_eq(conn, conn_dual):
        raise AcgwError(
            "connecting object differs between its two constructions: "
            f"{inst.obj_label(conn)} vs {inst.obj_label(conn_dual)}"
        )
    rest_to_top = inst.factor_ver(
        inst.compose_ver(cleg_rest, inp.mid_up), inp.top_epi
    )  # rest => C
    conn_up = inst.ver_between_kernels(rest_to_top, conn_hor, kleg3)  # conn => O3
    conn_in_ker = inst.ver_between_kernels(cleg_rest, conn_hor, kleg_mid)  # conn => ker g
    ker_to_bot = inst.factor_hor(
        inst.compose_hor(kleg_mid, inp.mid_down), inp.bot_mono
    )  # ker g -> A'
    conn_low = inst.hor_between_cokers(ker_to_bot, conn_in_ker, cleg4)  # conn -> O4
    t3 = Transition(conn, conn_up, conn_low)

    sq2 = inst.mixed_pullback(inp.bot_mono, cleg5)
    t4 = Transition(
        sq2.corner,
        inst.factor_ver(sq2.to_mono_source, cleg4),
        sq2.to_epi_source,
    )

    t5 = Transition(
        o6,
        inst.factor_ver(inst.compose_ver(cleg6, inp.bot_epi), cleg5),
        inst.id_hor(o6),
    )

    if inst.kind == "set":
        _assert_weak_closed_forms(inp, t2.obj, t3.obj, t4.obj)

    return ExactZigzag(
        inst,
        (o1, o2, o3, o4, o5, o6),
        (t1, t2, t3, t4, t5),
        _WEAK_LABELS,
        _WEAK_TRANSITION_LABELS,
        frozenset(),
    )


def _assert_weak_closed_forms(inp: SnakeInputWeak, d_obj, w_obj, d2_obj) -> None:
    """Independent element chases for the three middle transition objects."""
    im_mid_up = {b for _, b in inp.mid_up.data}
    im_mid_mono = {b for _, b in inp.mid_mono.data}
    im_mid_epi = {b for _, b in inp.mid_epi.data}
    im_bot_mono = {b for _, b in inp.bot_mono.data}
    im_mid_down = {b for _, b in inp.mid_down.data}
    c_map = mapping_of(inp.top_epi)
    expected_d = {gamma for gamma in inp.top_epi.source if c_map[gamma] not in im_mid_up}
    expected_w = (set(inp.mid_mono.target) - im_mid_mono) - im_mid_epi
    o5_ids = set(inp.mid_down.target) - im_mid_down
    expected_d2 = {y for y in o5_ids if y in im_bot_mono}
    if set(d_obj) != expected_d:
        raise AcgwError("kernel pullback object disagrees with its element chase")
    if set(w_obj) != expected_w:
        raise AcgwError("connecting object disagrees with its element chase")
    if set(d2_obj) != expected_d2:
        raise AcgwError("cokernel pullback object disagrees with its element chase")


# ---------------------------------------------------------------------------
# Strong snake.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnakeInputStrong:
    """Input of the strong snake construction.

    Compared to the weak input, the top mono only exists on a restriction
    ``top_restricted`` of its source (``restrict_to_top`` projects it back
    to the full left-top object) and the bottom epi only exists from an
    extension ``bot_restricted`` (``extend_to_bot`` embeds it into the
    full right-bottom object)::

        A  <<=  Abar >-> B  <<=  C
        X  >->  Y    <<= Z
        A' >->  B'   <<= Cbar' >-> C'
    """

    inst: AcgwInstance = field(compare=False)
    left_up: VerMor = None  # X => A
    restrict_to_top: VerMor = None  # Abar => A
    top_mono: HorMor = None  # Abar -> B
    left_up_restricted: VerMor = None  # X => Abar
    mid_up: VerMor = None  # Y => B
    top_epi: VerMor = None  # C => B
    right_up: VerMor = None  # Z => C
    mid_mono: HorMor = None  # X -> Y
    mid_epi: VerMor = None  # Z => Y
    bot_mono: HorMor = None  # A' -> B'
    left_down: HorMor = None  # X -> A'
    mid_down: HorMor = None  # Y -> B'
    bot_epi_restricted: VerMor = None  # Cbar' => B'
    right_down_restricted: HorMor = None  # Z -> Cbar'
    extend_to_bot: HorMor = None  # Cbar' -> C'

    def right_down(self) -> HorMor:
        """Derived composite ``Z -> C'``."""
        return self.inst.compose_hor(self.right_down_restricted, self.extend_to_bot)

    def inner_weak(self) -> SnakeInputWeak:
        """The weak input obtained by using the restricted rows as rows."""
        return SnakeInputWeak(
            self.inst,
            top_mono=self.top_mono,
            top_epi=self.top_epi,
            mid_mono=self.mid_mono,
            mid_epi=self.mid_epi,
            bot_mono=self.bot_mono,
            bot_epi=self.bot_epi_restricted,
            left_up=self.left_up_restricted,
            left_down=self.left_down,
            mid_up=self.mid_up,
            mid_down=self.mid_down,
            right_up=self.right_up,
            right_down=self.right_down_restricted,
        )


def validate_snake_strong(inp: SnakeInputStrong) -> list[str]:
    inst = inp.inst
    problems = [f"restrict_to_top: {p}" for p in inst.validate_ver(inp.restrict_to_top)]
    problems += [f"left_up: {p}" for p in inst.validate_ver(inp.left_up)]
    problems += [f"extend_to_bot: {p}" for p in inst.validate_hor(inp.extend_to_bot)]
    problems += [f"inner: {p}" for p in validate_snake_weak(inp.inner_weak())]
    if problems:
        return problems
    if inst.compose_ver(inp.left_up_restricted, inp.restrict_to_top) != inp.left_up:
        problems.append("left column does not factor through the top restriction")
    if not inst.obj_eq(inp.extend_to_bot.source, inp.bot_epi_restricted.source):
        problems.append("bottom extension does not start at the restricted object")
    return problems


_STRONG_LABELS = _WEAK_LABELS
_STRONG_TRANSITION_LABELS = _WEAK_TRANSITION_LABELS


def snake_strong(inp: SnakeInputStrong) -> ExactZigzag:
    """The six-term zigzag of a strong input, exact at the interior."""
    inst = inp.inst
    inner = snake_weak(inp.inner_weak())

    o1, kleg1 = inst.ker(inp.left_up)
    o6, cleg6 = inst.coker(inp.right_down())
    _, inner_kleg1 = inst.ker(inp.left_up_restricted)
    _, inner_cleg6 = inst.coker(inp.right_down_restricted)

    t1 = Transition(
        inner.objects[0],
        inst.ver_between_kernels(inp.restrict_to_top, inner_kleg1, kleg1),
        inner.transitions[0].into_lower,
    )
    t5 = Transition(
        inner.objects[5],
        inner.transitions[4].into_upper,
        inst.hor_between_cokers(inp.extend_to_bot, inner_cleg6, cleg6),
    )
    return ExactZigzag(
        inst,
        (o1,) + inner.objects[1:5] + (o6,),
        (t1,) + inner.transitions[1:4] + (t5,),
        _STRONG_LABELS,
        _STRONG_TRANSITION_LABELS,
        frozenset({0, 5}),
    )


# ---------------------------------------------------------------------------
# The long exact sequence of a short exact sequence of complexes.
# ---------------------------------------------------------------------------


def _require_inclusion_ses(ses: ChainSES) -> None:
    inst = ses.sub.source.inst
    if not inst.has_canonical_subobjects:
        raise CapabilityError(
            "long exact sequences need an instance with canonical subobjects"
        )
    mors = list(ses.sub.levels) + list(ses.quot.levels)
    if not all(is_inclusion_mor(m) for m in mors):
        raise CapabilityError(
            "long exact sequences need literal inclusion levels; "
            "rename the sub- and quotient complexes into the total complex first"
        )


def _strong_input_at(ses: ChainSES, i: int) -> SnakeInputStrong:
    """Assemble the strong snake input for one degree of a short exact
    sequence of complexes (all morphisms literal inclusions)."""
    inst = ses.sub.source.inst
    x, y, z = ses.sub.source, ses.sub.target, ses.quot.source

    _, cleg_a = inst.coker(x.transition(i + 1).into_lower)
    _, cleg_b = inst.coker(y.transition(i + 1).into_lower)
    _, cleg_c = inst.coker(z.transition(i + 1).into_lower)

    _, k_bar = inst.ker(ses.quot.bar_level(i + 1))
    into_level = inst.compose_hor(k_bar, y.transition(i + 1).into_lower)
    k_in_x = inst.factor_hor(into_level, ses.sub.level(i))
    _, cleg_abar = inst.coker(k_in_x)

    restrict_to_top = inst.factor_ver(cleg_abar, cleg_a)
    left_up_restricted = inst.factor_ver(x.transition(i).into_upper, cleg_abar)
    top_mono = inst.hor_between_cokers(ses.sub.level(i), cleg_abar, cleg_b)
    mid_up = inst.factor_ver(y.transition(i).into_upper, cleg_b)
    top_epi = inst.factor_ver(
        inst.compose_ver(cleg_c, ses.quot.level(i)), cleg_b
    )
    right_up = inst.factor_ver(z.transition(i).into_upper, cleg_c)
    left_up = inst.factor_ver(x.transition(i).into_upper, cleg_a)

    _, kleg_a2 = inst.ker(x.transition(i - 1).into_upper)
    _, kleg_b2 = inst.ker(y.transition(i - 1).into_upper)
    _, kleg_c2 = inst.ker(z.transition(i - 1).into_upper)
    bot_mono = inst.factor_hor(
        inst.compose_hor(kleg_a2, ses.sub.level(i - 1)), kleg_b2
    )
    left_down = inst.factor_hor(x.transition(i).into_lower, kleg_a2)
    mid_down = inst.factor_hor(y.transition(i).into_lower, kleg_b2)

    _, cleg_rest = inst.coker(ses.sub.bar_level(i - 1))
    onto_quot = inst.factor_ver(
        inst.compose_ver(cleg_rest, y.transition(i - 1).into_upper),
        ses.quot.level(i - 1),
    )
    _, kleg_cbar = inst.ker(onto_quot)
    bot_epi_restricted = inst.ver_between_kernels(
        ses.quot.level(i - 1), kleg_cbar, kleg_b2
    )
    right_down_restricted = inst.factor_hor(z.transition(i).into_lower, kleg_cbar)
    extend_to_bot = inst.factor_hor(kleg_cbar, kleg_c2)

    return SnakeInputStrong(
        inst,
        left_up=left_up,
        restrict_to_top=restrict_to_top,
        top_mono=top_mono,
        left_up_restricted=left_up_restricted,
        mid_up=mid_up,
        top_epi=top_epi,
        right_up=right_up,
        mid_mono=ses.sub.bar_level(i),
        mid_epi=ses.quot.bar_level(i),
        bot_mono=bot_mono,
        left_down=left_down,
        mid_down=mid_down,
        bot_epi_restricted=bot_epi_restricted,
        right_down_restricted=right_down_restricted,
        extend_to_bot=extend_to_bot,
    )


def les_of_ses(ses: ChainSES) -> ExactZigzag:
    """The long exact homology sequence of a short exact sequence.

    Runs the strong snake at every degree from one above the top of the
    range down to its bottom and splices the results: consecutive blocks
    must overlap in their last and first three objects (and two
    transitions), which is checked.  The result is exact everywhere.

    Only available for instances with canonical subobjects, and only when
    both chain morphisms of the sequence are literal inclusions.
    """
    _require_inclusion_ses(ses)
    inst = ses.sub.source.inst
    x = ses.sub.source
    lo, hi = x.lo, x.hi

    blocks: list[tuple[int, ExactZigzag]] = []
    for i in range(hi + 1, lo - 1, -1):
        blocks.append((i, snake_strong(_strong_input_at(ses, i))))

    for (i, zz), (_, nxt) in zip(blocks, blocks[1:]):
        if zz.objects[3:6] != nxt.objects[0:3]:
            raise AcgwError(f"degree {i} block does not splice onto the next objects")
        if zz.transitions[3:5] != nxt.transitions[0:2]:
            raise AcgwError(
                f"degree {i} block does not splice onto the next transitions"
            )

    objects: list[Any] = []
    transitions: list[Transition] = []
    labels: list[str] = []
    transition_labels: list[str] = []
    for i, zz in blocks:
        objects += list(zz.objects[:3])
        transitions += list(zz.transitions[:3])
        labels += [f"H_{i}(sub)", f"H_{i}(total)", f"H_{i}(quot)"]
        transition_labels += [
            f"H_{i} into total",
            f"H_{i} onto quotient",
            f"connecting {i} to {i - 1}",
        ]
    last_i, last = blocks[-1]
    objects += list(last.objects[3:])
    transitions += list(last.transitions[3:])
    labels += [
        f"H_{last_i - 1}(sub)",
        f"H_{last_i - 1}(total)",
        f"H_{last_i - 1}(quot)",
    ]
    transition_labels += [
        f"H_{last_i - 1} into total",
        f"H_{last_i - 1} onto quotient",
    ]
    return ExactZigzag(
        inst,
        tuple(objects),
        tuple(transitions),
        tuple(labels),
        tuple(transition_labels),
        frozenset(),
    )
