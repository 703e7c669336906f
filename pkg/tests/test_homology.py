"""Homology via double complements, induced spans, quasi-isomorphisms."""

from hypothesis import given, settings
from hypothesis import strategies as st

from acgw import (
    ChainMap,
    GenConfig,
    chain_map_of_hor,
    chain_map_of_ver,
    check_functoriality,
    compose_chain_maps,
    flat_is_iso,
    gen_complex,
    gen_composable_chain_maps,
    gen_exact_complex,
    gen_hor_mor,
    gen_ver_mor,
    h_on_map,
    homology,
    homology_complex,
    homology_obj,
    homology_size,
    is_exact,
    is_quasi_iso,
    qiso_iff_complement_exact,
    span_equiv,
    validate_hor_chain_mor,
    validate_ver_chain_mor,
)

from conftest import corpus_doc


# ---------------------------------------------------------------------------
# Worked values on the bundled corpus.
# ---------------------------------------------------------------------------


def test_inclusion_pair_homology_values():
    doc = corpus_doc("inclusion_pair")
    X = doc.complex_named("X")
    Y = doc.complex_named("Y")
    assert homology_obj(X, 2) == ("a",)
    assert {i: homology_size(X, i) for i in X.degrees()} == {1: 0, 2: 1, 3: 0}
    assert homology_obj(Y, 2) == ()
    assert is_exact(Y)
    assert not is_exact(X)


def test_homology_grid_legs_consistent():
    doc = corpus_doc("inclusion_pair")
    X = doc.complex_named("X")
    g = homology(X, 2)
    assert g.degree == 2
    assert g.h == ("a",)
    inst = X.inst
    assert inst.obj_size(g.cycles) >= inst.obj_size(g.h)
    assert not inst.validate_hor(g.cycles_hor)
    assert not inst.validate_ver(g.quot_ver)


def test_span_legs_quasi_iso_verdicts():
    doc = corpus_doc("span_legs")
    m = doc.map_named("F")
    assert is_quasi_iso(m)
    assert not is_quasi_iso(chain_map_of_ver(m.back))
    assert not is_quasi_iso(chain_map_of_hor(m.front))


def test_h_on_map_cross_validation_matches_fast_path():
    doc = corpus_doc("span_legs")
    m = doc.map_named("F")
    inst = m.source.inst
    degrees = set(m.source.degrees()) | set(m.target.degrees()) | set(m.middle.degrees())
    for i in sorted(degrees):
        fast = h_on_map(m, i)
        checked = h_on_map(m, i, cross_validate=True)
        assert span_equiv(inst, fast, checked)


def test_qiso_iff_on_corpus_inclusion():
    doc = corpus_doc("inclusion_pair")
    f = doc.hor_named("f")
    qiso, complement_exact = qiso_iff_complement_exact(f)
    assert (qiso, complement_exact) == (False, False)


def test_homology_complex_concentrated_in_one_degree():
    doc = corpus_doc("inclusion_pair")
    X = doc.complex_named("X")
    h, hor, ver = homology_complex(X)
    assert h.obj(2) == ("a",)
    assert all(not h.transition(i).obj for i in h.transition_degrees())
    assert validate_hor_chain_mor(hor) == []
    assert validate_ver_chain_mor(ver) == []
    assert (hor.source, hor.target) == (h, X)
    assert (ver.source, ver.target) == (h, X)
    assert is_quasi_iso(chain_map_of_hor(hor))
    assert is_quasi_iso(chain_map_of_ver(ver))


def test_linear_corpus_homology_dimensions():
    doc = corpus_doc("linear_small")
    X = doc.complex_named("X")
    assert {i: homology_size(X, i) for i in X.degrees()} == {0: 1, 1: 0, 2: 1}


# ---------------------------------------------------------------------------
# Properties over generated complexes.
# ---------------------------------------------------------------------------


@settings(deadline=None, max_examples=120)
@given(st.integers(0, 10**6))
def test_size_law_and_order_independence(seed):
    cx, expected = gen_complex(GenConfig(seed=seed))
    n = cx.inst.obj_size
    for i in cx.degrees():
        # homology() raises if the two complement orders disagree.
        g = homology(cx, i)
        assert n(g.h) == expected[i]
        assert n(g.h) == n(cx.obj(i)) - n(cx.transition(i).obj) - n(
            cx.transition(i + 1).obj
        )


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 10**6))
def test_exact_generator_yields_exact(seed):
    assert is_exact(gen_exact_complex(GenConfig(seed=seed)))


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_identity_map_is_quasi_iso(seed):
    from acgw import id_chain_map

    cx, _ = gen_complex(GenConfig(seed=seed))
    assert is_quasi_iso(id_chain_map(cx))


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_functoriality_property(seed):
    f, g = gen_composable_chain_maps(GenConfig(seed=seed))
    assert check_functoriality(f, g)


@settings(deadline=None, max_examples=60)
@given(st.integers(0, 10**6))
def test_qiso_iff_complement_exact_agrees(seed):
    a, b = qiso_iff_complement_exact(gen_hor_mor(GenConfig(seed=seed)))
    assert a == b
    a, b = qiso_iff_complement_exact(gen_ver_mor(GenConfig(seed=seed)))
    assert a == b


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_h_on_map_double_route(seed):
    m = gen_chain_map_for(seed)
    inst = m.source.inst
    for i in sorted(set(m.source.degrees()) | set(m.target.degrees())):
        assert span_equiv(inst, h_on_map(m, i), h_on_map(m, i, cross_validate=True))


def gen_chain_map_for(seed):
    from acgw import gen_chain_map

    return gen_chain_map(GenConfig(seed=seed))


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_homology_complex_property(seed):
    cx, _ = gen_complex(GenConfig(seed=seed))
    h, hor, ver = homology_complex(cx)
    assert validate_hor_chain_mor(hor) == []
    assert validate_ver_chain_mor(ver) == []
    assert is_quasi_iso(chain_map_of_hor(hor))
    assert is_quasi_iso(chain_map_of_ver(ver))
    # The homology complex has no transitions, so it equals its own homology.
    for i in h.degrees():
        assert homology_obj(h, i) == h.obj(i)


def test_quasi_iso_composition_with_homology_inclusion():
    from acgw import id_hor_chain, validate_chain_map

    cx, _ = gen_complex(GenConfig(seed=77))
    h, hor, ver = homology_complex(cx)
    # The span cx <= h -> h collapses cx onto its homology.
    m = ChainMap(source=cx, middle=h, target=h, back=ver, front=id_hor_chain(h))
    assert validate_chain_map(m) == []
    assert is_quasi_iso(m)
