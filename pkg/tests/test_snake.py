"""Weak and strong snake constructions and long exact sequences."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from acgw import (
    AcgwError,
    CapabilityError,
    GenConfig,
    LinearInstance,
    gen_ses,
    gen_snake_strong,
    gen_snake_weak,
    les_of_ses,
    ses_from_injection,
    snake_strong,
    snake_weak,
    validate_snake_strong,
    validate_snake_weak,
    validate_zigzag,
    zigzag_exactness,
    zigzag_is_exact,
)

from conftest import corpus_doc


def closed_form_middles(inp):
    """The three middle transition objects of a weak snake output,
    recomputed directly from the input rows by set arithmetic."""
    x, y, z = set(inp.mid_mono.source), set(inp.mid_mono.target), set(inp.mid_epi.source)
    c = set(inp.top_epi.source)
    a_prime = set(inp.bot_mono.source)
    d = c - (y - x)
    w = (y - x) - z
    d_prime = a_prime - (y - z)
    return d, w, d_prime


# ---------------------------------------------------------------------------
# Corpus instances.
# ---------------------------------------------------------------------------


def test_corpus_weak_snake_zigzag():
    doc = corpus_doc("snake_weak_small")
    inp = doc.snake_weak_named("S")
    assert validate_snake_weak(inp) == []
    zz = snake_weak(inp)
    assert validate_zigzag(zz) == []
    assert zz.objects == (
        ("a2",), ("a2", "c1"), ("c1",), (), ("b1",), ("b1",),
    )
    assert tuple(t.obj for t in zz.transitions) == (
        ("a2",), ("c1",), (), (), ("b1",),
    )
    assert zigzag_exactness(zz) == [True] * 6
    assert zigzag_is_exact(zz)
    assert zz.labels[0] == "ker of left column"
    assert zz.labels[-1] == "coker of right column"
    d, w, d_prime = closed_form_middles(inp)
    assert set(zz.transitions[1].obj) == d
    assert set(zz.transitions[2].obj) == w
    assert set(zz.transitions[3].obj) == d_prime


def test_corpus_les_three_term():
    doc = corpus_doc("three_term_ses")
    ses = doc.ses_named("S")
    zz = les_of_ses(ses)
    assert zigzag_is_exact(zz)
    by_label = dict(zip(zz.labels, zz.objects))
    assert by_label["H_2(quot)"] == ("c",)
    assert by_label["H_1(sub)"] == ("c",)
    assert by_label["H_1(total)"] == ("d",)
    assert by_label["H_1(quot)"] == ("d",)
    # The connecting transition between them carries the class of c.
    idx = zz.labels.index("H_2(quot)")
    conn = zz.transitions[idx]
    assert conn.obj == ("c",)
    assert zz.transition_labels[idx] == "connecting 2 to 1"


def test_corpus_les_inclusion_pair():
    doc = corpus_doc("inclusion_pair")
    zz = les_of_ses(doc.ses_named("S"))
    assert zigzag_is_exact(zz)
    by_label = dict(zip(zz.labels, zz.objects))
    assert by_label["H_3(quot)"] == ("a",)
    assert by_label["H_2(sub)"] == ("a",)
    assert by_label["H_2(total)"] == ()


# ---------------------------------------------------------------------------
# Generated snake inputs.
# ---------------------------------------------------------------------------


@settings(deadline=None, max_examples=80)
@given(st.integers(0, 10**6))
def test_weak_snake_property(seed):
    inp = gen_snake_weak(GenConfig(seed=seed, max_size=6))
    assert validate_snake_weak(inp) == []
    zz = snake_weak(inp)
    assert validate_zigzag(zz) == []
    assert zigzag_is_exact(zz)
    d, w, d_prime = closed_form_middles(inp)
    assert set(zz.transitions[1].obj) == d
    assert set(zz.transitions[2].obj) == w
    assert set(zz.transitions[3].obj) == d_prime


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 10**6))
def test_strong_snake_property(seed):
    inp = gen_snake_strong(GenConfig(seed=seed, max_size=6))
    assert validate_snake_strong(inp) == []
    zz = snake_strong(inp)
    assert validate_zigzag(zz) == []
    assert zigzag_is_exact(zz)
    # Ends are not claimed exact, interior positions are.
    assert zz.non_exact_positions == frozenset({0, 5})
    inner = inp.inner_weak()
    d, w, d_prime = closed_form_middles(inner)
    assert set(zz.transitions[1].obj) == d
    assert set(zz.transitions[2].obj) == w
    assert set(zz.transitions[3].obj) == d_prime


def test_strong_end_positions_can_fail_exactness():
    # The exactness list may be False at the unclaimed end positions, and
    # zigzag_is_exact must ignore exactly those.
    for seed in range(40):
        zz = snake_strong(gen_snake_strong(GenConfig(seed=seed, max_size=6)))
        flags = zigzag_exactness(zz)
        assert all(
            flags[j] for j in range(len(flags)) if j not in zz.non_exact_positions
        )


# ---------------------------------------------------------------------------
# Long exact sequences from generated short exact sequences.
# ---------------------------------------------------------------------------


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 10**6))
def test_les_property(seed):
    ses = gen_ses(GenConfig(seed=seed))
    zz = les_of_ses(ses)
    assert validate_zigzag(zz) == []
    assert zigzag_is_exact(zz)
    lo, hi = ses.sub.source.lo, ses.sub.source.hi
    blocks = (hi + 1) - lo + 1
    assert len(zz.objects) == 3 * blocks + 3
    assert zz.labels[0] == f"H_{hi + 1}(sub)"
    assert zz.labels[-1] == f"H_{lo - 1}(quot)"


def test_les_rejects_instances_without_canonical_subobjects():
    L = LinearInstance(p=2)
    from acgw import ChainComplex, HorChainMor, Transition

    v1 = L.obj(1)
    x = ChainComplex(L, 0, 0, (L.obj(0),), ())
    y = ChainComplex(L, 0, 0, (v1,), ())
    f = HorChainMor(x, y, (L.zero_hor(v1),), ())
    with pytest.raises(CapabilityError):
        les_of_ses(ses_from_injection(f))


def test_les_rejects_non_inclusion_levels():
    ses = gen_ses(GenConfig(seed=5))
    inst = ses.sub.source.inst
    # Rename one sub level away from a literal inclusion.
    i = next(
        d for d in ses.sub.source.degrees() if ses.sub.level(d).data
    )
    lvl = ses.sub.level(i)
    twisted_source = tuple(f"renamed.{v}" for v in lvl.source)
    mapping = {f"renamed.{a}": b for a, b in lvl.data}
    bad_level = inst.hor(twisted_source, lvl.target, mapping)
    levels = tuple(
        bad_level if d == i else ses.sub.level(d) for d in ses.sub.source.degrees()
    )
    sub = type(ses.sub)(ses.sub.source, ses.sub.target, levels, ses.sub.bar_levels)
    with pytest.raises(CapabilityError):
        les_of_ses(type(ses)(sub, ses.quot))
