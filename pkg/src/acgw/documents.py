"""A line-oriented text format for complexes and their morphisms.

A document holds one instance declaration and any number of named
sections::

    instance set                    # or: instance linear  (+ "prime P")

    complex X:
      object 2: a b                 # linear: object 2: dim 3
      transition 2: t0 t1           # linear: transition 2: dim 1
        up: t0->a t1->b             # optional; identity when omitted
        down: t0->c t1->d           # linear: up/down take JSON matrices

    hor f: X -> Y                   # levelwise morphism, bars derived
      level 2: a->a b->b

    ver g: Z -> Y
      level 2: p->p

    map F: X <- Z -> Y              # span: back levels into X, front into Y
      back 2: p->p
      front 2: p->p

    ses S: f                        # short exact sequence generated by f

    snake weak W:                   # finite sets only, literal subsets
      top: a | a b c | c
      middle:  | a b  | b
      bottom: a | a b | b

``#`` starts a comment.  Indentation is cosmetic; content lines attach to
the most recent section header.  Ids match ``[A-Za-z0-9_.+-]+``.  The
serializer emits a canonical form that parses back to an equal document.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

import numpy as np

from .chains import (
    ChainComplex,
    ChainMap,
    ChainSES,
    HorChainMor,
    Transition,
    VerChainMor,
    ses_from_injection,
    validate_chain_map,
    validate_chain_ses,
    validate_complex,
    validate_hor_chain_mor,
    validate_ver_chain_mor,
)
from .core import AcgwError, AcgwInstance, HorMor, VerMor
from .finset import FinSetInstance, finset_obj, mapping_of
from .linear import LinearInstance, solve
from .snake import (
    SnakeInputStrong,
    SnakeInputWeak,
    validate_snake_strong,
    validate_snake_weak,
)

__all__ = [
    "ParseError",
    "Document",
    "parse",
    "serialize",
    "validate_document",
]

_ID_RE = re.compile(r"[A-Za-z0-9_.+-]+\Z")
_NAME_RE = _ID_RE


class ParseError(AcgwError):
    """A document could not be read; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Document:
    """A parsed document: named complexes, morphisms and snake inputs."""

    inst: AcgwInstance = field(compare=False)
    kind: str = "set"
    prime: int = 2
    complexes: tuple[tuple[str, ChainComplex], ...] = ()
    hors: tuple[tuple[str, HorChainMor], ...] = ()
    vers: tuple[tuple[str, VerChainMor], ...] = ()
    maps: tuple[tuple[str, ChainMap], ...] = ()
    seses: tuple[tuple[str, str], ...] = ()  # ses name -> hor name
    snakes_weak: tuple[tuple[str, SnakeInputWeak], ...] = ()
    snakes_strong: tuple[tuple[str, SnakeInputStrong], ...] = ()

    def _named(self, pairs, name: str, what: str):
        for n, value in pairs:
            if n == name:
                return value
        raise AcgwError(f"document has no {what} named {name!r}")

    def complex_named(self, name: str) -> ChainComplex:
        return self._named(self.complexes, name, "complex")

    def hor_named(self, name: str) -> HorChainMor:
        return self._named(self.hors, name, "horizontal morphism")

    def ver_named(self, name: str) -> VerChainMor:
        return self._named(self.vers, name, "vertical morphism")

    def map_named(self, name: str) -> ChainMap:
        return self._named(self.maps, name, "chain map")

    def ses_named(self, name: str) -> ChainSES:
        hor = self._named(self.seses, name, "short exact sequence")
        return ses_from_injection(self.hor_named(hor))

    def snake_weak_named(self, name: str) -> SnakeInputWeak:
        return self._named(self.snakes_weak, name, "weak snake input")

    def snake_strong_named(self, name: str) -> SnakeInputStrong:
        return self._named(self.snakes_strong, name, "strong snake input")


# ---------------------------------------------------------------------------
# Pass 1: raw line structure.
# ---------------------------------------------------------------------------


def _split_ids(line: int, text: str) -> list[str]:
    ids = text.split()
    for x in ids:
        if not _ID_RE.match(x):
            raise ParseError(line, f"bad id {x!r}")
    return ids


def _split_pairs(line: int, text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for chunk in text.split():
        src, sep, tgt = chunk.partition("->")
        if not sep or not _ID_RE.match(src) or not _ID_RE.match(tgt):
            raise ParseError(line, f"bad pair {chunk!r} (want src->tgt)")
        if src in out:
            raise ParseError(line, f"repeated pair source {src!r}")
        out[src] = tgt
    return out


def _parse_matrix(line: int, text: str):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(line, f"bad matrix: {exc}") from None
    if not isinstance(rows, list) or not all(
        isinstance(r, list) and all(isinstance(v, int) for v in r) for r in rows
    ):
        raise ParseError(line, "matrix must be a JSON list of integer rows")
    return rows


def _parse_degree(line: int, token: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(line, f"bad degree {token!r}") from None


def _content(line: int, text: str, key: str) -> str:
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError(line, f"missing ':' in {key} line")
    return rest.strip()


@dataclass
class _RawTransition:
    line: int
    obj: object  # list[str] (set) or int (linear dim)
    up: object = None
    down: object = None


@dataclass
class _RawComplex:
    line: int
    name: str
    objects: dict = None
    transitions: dict = None
    last: _RawTransition = None

    def __post_init__(self):
        self.objects = {}
        self.transitions = {}


@dataclass
class _RawMor:
    line: int
    name: str
    src: str
    tgt: str
    levels: dict = None

    def __post_init__(self):
        self.levels = {}


@dataclass
class _RawMap:
    line: int
    name: str
    src: str
    mid: str
    tgt: str
    back: dict = None
    front: dict = None

    def __post_init__(self):
        self.back = {}
        self.front = {}


@dataclass
class _RawSnake:
    line: int
    name: str
    strong: bool
    rows: dict = None

    def __post_init__(self):
        self.rows = {}


def _scan(text: str):
    """First pass: cut the document into raw named sections."""
    kind = None
    prime = None
    complexes: list[_RawComplex] = []
    mors: list[tuple[str, _RawMor]] = []
    maps: list[_RawMap] = []
    seses: list[tuple[int, str, str]] = []
    snakes: list[_RawSnake] = []
    names: set[str] = set()
    current = None  # the section open for content lines
    is_set = lambda: kind == "set"  # noqa: E731

    def new_name(no: int, name: str) -> str:
        if not _NAME_RE.match(name):
            raise ParseError(no, f"bad name {name!r}")
        if name in names:
            raise ParseError(no, f"duplicate name {name!r}")
        names.add(name)
        return name

    for no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        head, _, rest = stripped.partition(" ")
        rest = rest.strip()

        if head == "instance":
            if kind is not None:
                raise ParseError(no, "repeated instance line")
            if rest not in ("set", "linear"):
                raise ParseError(no, f"unknown instance {rest!r}")
            kind = rest
            continue
        if kind is None:
            raise ParseError(no, "the document must start with an instance line")

        if head == "prime":
            if kind != "linear":
                raise ParseError(no, "prime is only meaningful for linear instances")
            if prime is not None:
                raise ParseError(no, "repeated prime line")
            prime = _parse_degree(no, rest)
            continue

        if head == "complex":
            m = re.match(r"(\S+):\Z", rest)
            if not m:
                raise ParseError(no, "want: complex NAME:")
            current = _RawComplex(no, new_name(no, m.group(1)))
            complexes.append(current)
            continue
        if head in ("hor", "ver"):
            m = re.match(r"(\S+):\s*(\S+)\s*->\s*(\S+)\Z", rest)
            if not m:
                raise ParseError(no, f"want: {head} NAME: SRC -> TGT")
            current = _RawMor(no, new_name(no, m.group(1)), m.group(2), m.group(3))
            mors.append((head, current))
            continue
        if head == "map":
            m = re.match(r"(\S+):\s*(\S+)\s*<-\s*(\S+)\s*->\s*(\S+)\Z", rest)
            if not m:
                raise ParseError(no, "want: map NAME: SRC <- MID -> TGT")
            current = _RawMap(no, new_name(no, m.group(1)), *m.group(2, 3, 4))
            maps.append(current)
            continue
        if head == "ses":
            m = re.match(r"(\S+):\s*(\S+)\Z", rest)
            if not m:
                raise ParseError(no, "want: ses NAME: HORNAME")
            seses.append((no, new_name(no, m.group(1)), m.group(2)))
            current = None
            continue
        if head == "snake":
            m = re.match(r"(weak|strong)\s+(\S+):\Z", rest)
            if not m:
                raise ParseError(no, "want: snake weak NAME: (or strong)")
            if kind != "set":
                raise ParseError(no, "snake sections need a set instance")
            current = _RawSnake(no, new_name(no, m.group(2)), m.group(1) == "strong")
            snakes.append(current)
            continue

        # ---- content lines ------------------------------------------
        if isinstance(current, _RawComplex):
            if head in ("object", "transition"):
                deg_tok, sep, payload = rest.partition(":")
                if not sep:
                    raise ParseError(no, f"missing ':' in {head} line")
                deg = _parse_degree(no, deg_tok.strip())
                payload = payload.strip()
                if is_set():
                    value: object = _split_ids(no, payload)
                else:
                    m = re.match(r"dim\s+(\d+)\Z", payload)
                    if not m:
                        raise ParseError(no, f"want: {head} {deg}: dim N")
                    value = int(m.group(1))
                store = current.objects if head == "object" else current.transitions
                if deg in store:
                    raise ParseError(no, f"repeated {head} degree {deg}")
                if head == "object":
                    store[deg] = value
                else:
                    store[deg] = current.last = _RawTransition(no, value)
                continue
            if head in ("up:", "down:", "up", "down"):
                key = head.rstrip(":")
                payload = _content(no, stripped, key)
                if current.last is None:
                    raise ParseError(no, f"{key} line before any transition")
                data = _split_pairs(no, payload) if is_set() else _parse_matrix(no, payload)
                if getattr(current.last, key) is not None:
                    raise ParseError(no, f"repeated {key} line for one transition")
                setattr(current.last, key, data)
                continue
            raise ParseError(no, f"unexpected {head!r} inside a complex")
        if isinstance(current, _RawMor):
            if head == "level":
                deg_tok, _, payload = rest.partition(":")
                deg = _parse_degree(no, deg_tok.strip())
                payload = payload.strip()
                if deg in current.levels:
                    raise ParseError(no, f"repeated level degree {deg}")
                current.levels[deg] = (
                    _split_pairs(no, payload) if is_set() else _parse_matrix(no, payload)
                )
                continue
            raise ParseError(no, f"unexpected {head!r} inside a morphism")
        if isinstance(current, _RawMap):
            if head in ("back", "front"):
                deg_tok, _, payload = rest.partition(":")
                deg = _parse_degree(no, deg_tok.strip())
                payload = payload.strip()
                store = current.back if head == "back" else current.front
                if deg in store:
                    raise ParseError(no, f"repeated {head} degree {deg}")
                store[deg] = (
                    _split_pairs(no, payload) if is_set() else _parse_matrix(no, payload)
                )
                continue
            raise ParseError(no, f"unexpected {head!r} inside a map")
        if isinstance(current, _RawSnake):
            key = head.rstrip(":")
            if key in ("top", "middle", "bottom"):
                payload = _content(no, stripped, key)
                parts = payload.split("|")
                if len(parts) != 3:
                    raise ParseError(no, f"{key} row wants three id lists separated by '|'")
                if key in current.rows:
                    raise ParseError(no, f"repeated {key} row")
                current.rows[key] = [_split_ids(no, part) for part in parts]
                continue
            if key in ("abar", "cbar"):
                if not current.strong:
                    raise ParseError(no, f"{key} is only meaningful for strong snakes")
                if key in current.rows:
                    raise ParseError(no, f"repeated {key} row")
                current.rows[key] = _split_ids(no, _content(no, stripped, key))
                continue
            raise ParseError(no, f"unexpected {head!r} inside a snake")
        raise ParseError(no, f"unexpected {head!r} outside any section")

    if kind is None:
        raise ParseError(1, "empty document (no instance line)")
    if kind == "set" and prime is not None:
        raise ParseError(1, "prime is only meaningful for linear instances")
    return kind, (2 if prime is None else prime), complexes, mors, maps, seses, snakes


# ---------------------------------------------------------------------------
# Pass 2: build real objects.
# ---------------------------------------------------------------------------


def _build_complex(inst: AcgwInstance, raw: _RawComplex) -> ChainComplex:
    if not raw.objects:
        raise ParseError(raw.line, f"complex {raw.name!r} has no objects")
    lo, hi = min(raw.objects), max(raw.objects)
    if inst.kind == "set":
        objects = tuple(finset_obj(raw.objects.get(i, [])) for i in range(lo, hi + 1))
    else:
        objects = tuple(inst.obj(int(raw.objects.get(i, 0))) for i in range(lo, hi + 1))
    transitions = []
    for i in range(lo + 1, hi + 1):
        t = raw.transitions.get(i)
        upper, lower = objects[i - lo], objects[i - 1 - lo]
        if t is None:
            transitions.append(
                Transition(inst.initial(), inst.zero_ver(upper), inst.zero_hor(lower))
            )
            continue
        if inst.kind == "set":
            obj = finset_obj(t.obj)
            up = t.up if t.up is not None else {x: x for x in obj}
            down = t.down if t.down is not None else {x: x for x in obj}
            transitions.append(
                Transition(obj, inst.ver(obj, upper, up), inst.hor(obj, lower, down))
            )
        else:
            obj = inst.obj(int(t.obj))
            import numpy as np

            up = t.up if t.up is not None else np.zeros((obj.dim, upper.dim), np.int64)
            down = (
                t.down if t.down is not None else np.zeros((lower.dim, obj.dim), np.int64)
            )
            try:
                transitions.append(
                    Transition(
                        obj, inst.ver(obj, upper, up), inst.hor(obj, lower, down)
                    )
                )
            except ValueError as exc:
                raise ParseError(t.line, f"bad matrix shape: {exc}") from None
    for deg in raw.transitions:
        if not lo + 1 <= deg <= hi:
            raise ParseError(
                raw.transitions[deg].line,
                f"transition degree {deg} outside object range {lo}..{hi}",
            )
    return ChainComplex(inst, lo, hi, objects, tuple(transitions))


def _level_mors(
    inst: AcgwInstance,
    raw: _RawMor | _RawMap,
    levels: dict,
    src: ChainComplex,
    tgt: ChainComplex,
    cls,
):
    """Levelwise morphisms `src -> tgt` (or `src => tgt`) from raw data."""
    import numpy as np

    build = inst.hor if cls is HorMor else inst.ver
    out = []
    for i in range(src.lo, src.hi + 1):
        data = levels.get(i)
        a, b = src.obj(i), tgt.obj(i)
        if inst.kind == "set":
            out.append(build(a, b, data or {}))
        else:
            if data is None:
                shape = (b.dim, a.dim) if cls is HorMor else (a.dim, b.dim)
                data = np.zeros(shape, np.int64)
            try:
                out.append(build(a, b, data))
            except ValueError as exc:
                raise ParseError(raw.line, f"bad matrix shape at level {i}: {exc}") from None
    for deg in levels:
        if not src.lo <= deg <= src.hi:
            raise ParseError(raw.line, f"level degree {deg} outside range")
    return tuple(out)


def _derive_hor_bars(
    line: int, levels: tuple[HorMor, ...], x: ChainComplex, y: ChainComplex
) -> tuple[HorMor, ...]:
    """Bar levels of a horizontal chain morphism, forced by the upper legs."""
    inst = x.inst
    bars = []
    for i in x.transition_degrees():
        tx, ty = x.transition(i), y.transition(i)
        f = levels[i - x.lo]
        if inst.kind == "set":
            upx, upy = mapping_of(tx.into_upper), mapping_of(ty.into_upper)
            fmap = mapping_of(f)
            above = {v: k for k, v in upy.items()}
            m = {}
            for t in tx.obj:
                img = fmap.get(upx.get(t))
                if img is None:
                    raise ParseError(
                        line, f"level {i} is undefined on the image of {t!r}"
                    )
                if img not in above:
                    raise ParseError(
                        line, f"no transition element above {img!r} at degree {i}"
                    )
                m[t] = above[img]
            bars.append(inst.hor(tx.obj, ty.obj, m))
        else:
            rhs = (inst.ver_matrix(ty.into_upper) @ inst.hor_matrix(f)) % inst.p
            sol = solve(inst.ver_matrix(tx.into_upper).T, rhs.T, inst.p)
            if sol is None:
                raise ParseError(line, f"no compatible bar level at degree {i}")
            bars.append(inst.hor(tx.obj, ty.obj, sol.T))
    return tuple(bars)


def _derive_ver_bars(
    line: int, levels: tuple[VerMor, ...], z: ChainComplex, y: ChainComplex
) -> tuple[VerMor, ...]:
    """Bar levels of a vertical chain morphism, forced by the lower legs."""
    inst = z.inst
    bars = []
    for i in z.transition_degrees():
        tz, ty = z.transition(i), y.transition(i)
        g = levels[i - 1 - z.lo]
        if inst.kind == "set":
            lowz, lowy = mapping_of(tz.into_lower), mapping_of(ty.into_lower)
            gmap = mapping_of(g)
            below = {v: k for k, v in lowy.items()}
            m = {}
            for t in tz.obj:
                img = gmap.get(lowz.get(t))
                if img is None:
                    raise ParseError(
                        line, f"level {i - 1} is undefined on the image of {t!r}"
                    )
                if img not in below:
                    raise ParseError(
                        line, f"no transition element below {img!r} at degree {i}"
                    )
                m[t] = below[img]
            bars.append(inst.ver(tz.obj, ty.obj, m))
        else:
            rhs = (inst.ver_matrix(g) @ inst.hor_matrix(ty.into_lower)) % inst.p
            sol = solve(inst.hor_matrix(tz.into_lower), rhs, inst.p)
            if sol is None:
                raise ParseError(line, f"no compatible bar level at degree {i}")
            bars.append(inst.ver(tz.obj, ty.obj, sol))
    return tuple(bars)


def _snake_rows(raw: _RawSnake) -> None:
    for key in ("top", "middle", "bottom"):
        if key not in raw.rows:
            raise ParseError(raw.line, f"snake {raw.name!r} is missing its {key} row")
    if raw.strong:
        for key in ("abar", "cbar"):
            if key not in raw.rows:
                raise ParseError(raw.line, f"snake {raw.name!r} is missing {key}")


def parse(text: str) -> Document:
    """Parse a document; raises :class:`ParseError` with a line number."""
    kind, prime, raw_cx, raw_mors, raw_maps, raw_seses, raw_snakes = _scan(text)
    if kind == "set":
        inst: AcgwInstance = FinSetInstance()
    else:
        try:
            inst = LinearInstance(prime)
        except AcgwError as exc:
            raise ParseError(1, str(exc)) from None

    complexes: list[tuple[str, ChainComplex]] = []
    for raw in raw_cx:
        complexes.append((raw.name, _build_complex(inst, raw)))

    def lookup(line: int, name: str) -> ChainComplex:
        for n, cx in complexes:
            if n == name:
                return cx
        raise ParseError(line, f"unknown complex {name!r}")

    hors: list[tuple[str, HorChainMor]] = []
    vers: list[tuple[str, VerChainMor]] = []
    for flavor, raw in raw_mors:
        src, tgt = lookup(raw.line, raw.src), lookup(raw.line, raw.tgt)
        if flavor == "hor":
            levels = _level_mors(inst, raw, raw.levels, src, tgt, HorMor)
            bars = _derive_hor_bars(raw.line, levels, src, tgt)
            hors.append((raw.name, HorChainMor(src, tgt, levels, bars)))
        else:
            levels = _level_mors(inst, raw, raw.levels, src, tgt, VerMor)
            bars = _derive_ver_bars(raw.line, levels, src, tgt)
            vers.append((raw.name, VerChainMor(src, tgt, levels, bars)))

    maps: list[tuple[str, ChainMap]] = []
    for raw in raw_maps:
        src = lookup(raw.line, raw.src)
        mid = lookup(raw.line, raw.mid)
        tgt = lookup(raw.line, raw.tgt)
        back_levels = _level_mors(inst, raw, raw.back, mid, src, VerMor)
        front_levels = _level_mors(inst, raw, raw.front, mid, tgt, HorMor)
        back = VerChainMor(
            mid, src, back_levels, _derive_ver_bars(raw.line, back_levels, mid, src)
        )
        front = HorChainMor(
            mid, tgt, front_levels, _derive_hor_bars(raw.line, front_levels, mid, tgt)
        )
        maps.append((raw.name, ChainMap(src, mid, tgt, back, front)))

    seses: list[tuple[str, str]] = []
    known_hors = {n for n, _ in hors}
    for line, name, hor_name in raw_seses:
        if hor_name not in known_hors:
            raise ParseError(line, f"unknown horizontal morphism {hor_name!r}")
        seses.append((name, hor_name))

    weaks: list[tuple[str, SnakeInputWeak]] = []
    strongs: list[tuple[str, SnakeInputStrong]] = []
    fin = inst  # set instance guaranteed by _scan for snake sections
    for raw in raw_snakes:
        _snake_rows(raw)
        top = [finset_obj(part) for part in raw.rows["top"]]
        midrow = [finset_obj(part) for part in raw.rows["middle"]]
        bottom = [finset_obj(part) for part in raw.rows["bottom"]]
        x, y, z = midrow
        if not raw.strong:
            a, b, c = top
            a2, b2, c2 = bottom
            weaks.append(
                (
                    raw.name,
                    SnakeInputWeak(
                        fin,
                        top_mono=fin.inclusion_hor(a, b),
                        top_epi=fin.inclusion_ver(c, b),
                        mid_mono=fin.inclusion_hor(x, y),
                        mid_epi=fin.inclusion_ver(z, y),
                        bot_mono=fin.inclusion_hor(a2, b2),
                        bot_epi=fin.inclusion_ver(c2, b2),
                        left_up=fin.inclusion_ver(x, a),
                        left_down=fin.inclusion_hor(x, a2),
                        mid_up=fin.inclusion_ver(y, b),
                        mid_down=fin.inclusion_hor(y, b2),
                        right_up=fin.inclusion_ver(z, c),
                        right_down=fin.inclusion_hor(z, c2),
                    ),
                )
            )
        else:
            a, b, c = top
            a2, b2, c2 = bottom
            abar = finset_obj(raw.rows["abar"])
            cbar2 = finset_obj(raw.rows["cbar"])
            strongs.append(
                (
                    raw.name,
                    SnakeInputStrong(
                        fin,
                        left_up=fin.inclusion_ver(x, a),
                        restrict_to_top=fin.inclusion_ver(abar, a),
                        top_mono=fin.inclusion_hor(abar, b),
                        left_up_restricted=fin.inclusion_ver(x, abar),
                        mid_up=fin.inclusion_ver(y, b),
                        top_epi=fin.inclusion_ver(c, b),
                        right_up=fin.inclusion_ver(z, c),
                        mid_mono=fin.inclusion_hor(x, y),
                        mid_epi=fin.inclusion_ver(z, y),
                        bot_mono=fin.inclusion_hor(a2, b2),
                        left_down=fin.inclusion_hor(x, a2),
                        mid_down=fin.inclusion_hor(y, b2),
                        bot_epi_restricted=fin.inclusion_ver(cbar2, b2),
                        right_down_restricted=fin.inclusion_hor(z, cbar2),
                        extend_to_bot=fin.inclusion_hor(cbar2, c2),
                    ),
                )
            )

    return Document(
        inst,
        kind,
        inst.p if kind == "linear" else 2,
        tuple(complexes),
        tuple(hors),
        tuple(vers),
        tuple(maps),
        tuple(seses),
        tuple(weaks),
        tuple(strongs),
    )


# ---------------------------------------------------------------------------
# Serialization.
# ---------------------------------------------------------------------------


def _fmt_pairs(mor: HorMor | VerMor) -> str:
    return " ".join(f"{a}->{b}" for a, b in mor.data)


def _fmt_matrix(doc: Document, mor: HorMor | VerMor) -> str:
    inst = doc.inst
    arr = inst.hor_matrix(mor) if isinstance(mor, HorMor) else inst.ver_matrix(mor)
    return json.dumps(arr.tolist())


def _name_of(doc: Document, cx: ChainComplex, what: str) -> str:
    for name, known in doc.complexes:
        if known == cx:
            return name
    raise AcgwError(f"{what} refers to a complex that is not in the document")


def _emit_complex(doc: Document, name: str, cx: ChainComplex, out: list[str]) -> None:
    out.append(f"complex {name}:")
    for i in cx.degrees():
        if doc.kind == "set":
            ids = " ".join(cx.obj(i))
            out.append(f"  object {i}:" + (f" {ids}" if ids else ""))
        else:
            out.append(f"  object {i}: dim {cx.obj(i).dim}")
    for i in cx.transition_degrees():
        t = cx.transition(i)
        if doc.kind == "set":
            ids = " ".join(t.obj)
            out.append(f"  transition {i}:" + (f" {ids}" if ids else ""))
            if any(a != b for a, b in t.into_upper.data):
                out.append(f"    up: {_fmt_pairs(t.into_upper)}")
            if any(a != b for a, b in t.into_lower.data):
                out.append(f"    down: {_fmt_pairs(t.into_lower)}")
        else:
            out.append(f"  transition {i}: dim {t.obj.dim}")
            out.append(f"    up: {_fmt_matrix(doc, t.into_upper)}")
            out.append(f"    down: {_fmt_matrix(doc, t.into_lower)}")
    out.append("")


def _emit_levels(
    doc: Document, key: str, levels, lo: int, out: list[str]
) -> None:
    for offset, mor in enumerate(levels):
        if doc.kind == "set":
            if mor.data:
                out.append(f"  {key} {lo + offset}: {_fmt_pairs(mor)}")
        else:
            out.append(f"  {key} {lo + offset}: {_fmt_matrix(doc, mor)}")


def _emit_row3(key: str, parts: tuple, out: list[str]) -> None:
    out.append((f"  {key}: " + " | ".join(" ".join(part) for part in parts)).rstrip())


def _emit_row1(key: str, obj, out: list[str]) -> None:
    out.append((f"  {key}: " + " ".join(obj)).rstrip())


def serialize(doc: Document) -> str:
    """Canonical text form; ``parse(serialize(doc)) == doc``."""
    out: list[str] = [f"instance {doc.kind}"]
    if doc.kind == "linear":
        out.append(f"prime {doc.prime}")
    out.append("")
    for name, cx in doc.complexes:
        _emit_complex(doc, name, cx, out)
    for name, f in doc.hors:
        src = _name_of(doc, f.source, f"hor {name}")
        tgt = _name_of(doc, f.target, f"hor {name}")
        out.append(f"hor {name}: {src} -> {tgt}")
        _emit_levels(doc, "level", f.levels, f.source.lo, out)
        out.append("")
    for name, g in doc.vers:
        src = _name_of(doc, g.source, f"ver {name}")
        tgt = _name_of(doc, g.target, f"ver {name}")
        out.append(f"ver {name}: {src} -> {tgt}")
        _emit_levels(doc, "level", g.levels, g.source.lo, out)
        out.append("")
    for name, f in doc.maps:
        src = _name_of(doc, f.source, f"map {name}")
        mid = _name_of(doc, f.middle, f"map {name}")
        tgt = _name_of(doc, f.target, f"map {name}")
        out.append(f"map {name}: {src} <- {mid} -> {tgt}")
        _emit_levels(doc, "back", f.back.levels, f.middle.lo, out)
        _emit_levels(doc, "front", f.front.levels, f.middle.lo, out)
        out.append("")
    for name, hor_name in doc.seses:
        out.append(f"ses {name}: {hor_name}")
        out.append("")
    for name, s in doc.snakes_weak:
        out.append(f"snake weak {name}:")
        _emit_row3("top", (s.top_mono.source, s.top_mono.target, s.top_epi.source), out)
        _emit_row3("middle", (s.mid_mono.source, s.mid_mono.target, s.mid_epi.source), out)
        _emit_row3("bottom", (s.bot_mono.source, s.bot_mono.target, s.bot_epi.source), out)
        out.append("")
    for name, s in doc.snakes_strong:
        out.append(f"snake strong {name}:")
        _emit_row3("top", (s.left_up.target, s.top_mono.target, s.top_epi.source), out)
        _emit_row1("abar", s.top_mono.source, out)
        _emit_row3("middle", (s.mid_mono.source, s.mid_mono.target, s.mid_epi.source), out)
        _emit_row1("cbar", s.extend_to_bot.source, out)
        _emit_row3(
            "bottom", (s.bot_mono.source, s.bot_mono.target, s.extend_to_bot.target), out
        )
        out.append("")
    while out and out[-1] == "":
        out.pop()
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Validation.
# ---------------------------------------------------------------------------


def validate_document(doc: Document) -> list[str]:
    """Collect all structural problems of every section of a document."""
    problems: list[str] = []
    for name, cx in doc.complexes:
        problems += [f"complex {name}: {p}" for p in validate_complex(cx)]
    for name, f in doc.hors:
        problems += [f"hor {name}: {p}" for p in validate_hor_chain_mor(f)]
    for name, g in doc.vers:
        problems += [f"ver {name}: {p}" for p in validate_ver_chain_mor(g)]
    for name, f in doc.maps:
        problems += [f"map {name}: {p}" for p in validate_chain_map(f)]
    for name, _ in doc.seses:
        try:
            ses = doc.ses_named(name)
        except AcgwError as exc:
            problems.append(f"ses {name}: cannot build the quotient ({exc})")
            continue
        problems += [f"ses {name}: {p}" for p in validate_chain_ses(ses)]
    for name, s in doc.snakes_weak:
        problems += [f"snake weak {name}: {p}" for p in validate_snake_weak(s)]
    for name, s in doc.snakes_strong:
        problems += [f"snake strong {name}: {p}" for p in validate_snake_strong(s)]
    return problems
