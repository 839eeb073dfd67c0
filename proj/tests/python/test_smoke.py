"""Smoke tests for the python bindings: every bound operation is touched once
with a value pinned by the C++ suites."""

import pytest

import lieforge as lf


def test_builders_and_jacobi():
    L = lf.build_Iu(3)
    assert L.dim == 12
    assert L.n == 3
    assert L.verify_jacobi()
    assert lf.build_glpluseps(4).verify_jacobi()
    assert lf.build_un(3).verify_jacobi()
    assert lf.build_gln(2).verify_jacobi()
    assert lf.build_ln_eps(3).verify_jacobi()


def test_bracket_rendering():
    L = lf.build_Iu(3)
    assert L.bracket("x[1,2]", "x[2,3]") == "x[1,3]"
    assert L.bracket("x[1,2]", "x[2,1]") == "1/2*b[1] - 1/2*b[2]"
    assert L.bracket("x[1,3]", "x[3,2]") == "0"
    G = lf.build_glpluseps(3)
    assert G.bracket("x[1,3]", "x[3,2]") == "eps*x[1,2]"


def test_oracles_agree():
    direct = lf.build_Iu(3)
    assert lf.coadjoint_semidirect(lf.build_un(3)).same_structure(direct)
    double = lf.manin_double(lf.build_un(3), lf.build_ln_eps(3))
    assert double.same_structure(lf.build_glpluseps(3))


def test_specialize_truncate_solvable():
    G = lf.build_glpluseps(3)
    assert G.specialize("0").same_structure(lf.build_Iu(3))
    assert lf.is_solvable(G.truncated(2))
    assert not lf.is_solvable(G.specialize("1"))
    assert lf.is_solvable(lf.build_Iu(4))
    with pytest.raises(lf.LieforgeError):
        lf.is_solvable(G)  # symbolic eps must be specialized or truncated


def test_series_and_center():
    # the honest layer recursion: x-layers plus b-differences
    assert lf.layer_series_dims(lf.build_Iu(3)) == [12, 8, 5, 2, 0]
    assert lf.derived_series_dims(lf.build_Iu(2)) == [6, 3, 1, 0]
    assert lf.center_dim(lf.build_Iu(3)) == 4


def test_symmetries():
    L = lf.build_Iu(3)
    assert lf.is_automorphism(L, [2, 3, 1])
    assert not lf.is_automorphism(L, [2, 1, 3])
    assert lf.is_automorphism(L, [3, 2, 1], anti=True)
    autos, antis, closed = lf.enumerate_symmetries(L, 3)
    assert autos == ["123", "231", "312"]
    assert len(antis) == 3
    assert closed


def test_layers_and_metric():
    assert lf.length_of("x[3,1]", 3) == 1
    assert lf.layer_of("b[2]", 4) == 4
    assert lf.psi_preserves_length(5)
    report = lf.verify_layer_table(3)
    assert report["grading"] == []
    assert report["vanishing"] == []
    assert report["membership"] == []
    assert report["psi_shift"] == []
    # the two table bullets that the bracket recursion cannot satisfy
    assert len(report["filtration"]) == 3
    assert len(report["generation"]) == 3
    metric = lf.verify_metric_layers(3)
    assert metric["layer_pairing"] == []
    assert metric["invariance"] == []


def test_sl_and_diamond():
    sl = lf.sl_restrict(lf.build_Iu(2))
    assert sl.dim == 4
    d = lf.diamond()
    assert d.bracket("x", "y") == "b"
    assert d.bracket("a", "x") == "x"


def test_emit_roundtrip():
    G = lf.build_glpluseps(2)
    text = lf.emit_sc(G, "glplus")
    assert text == lf.emit_sc(lf.build_glpluseps(2), "glplus")
    assert "[x[1,2],x[2,1]] = 1/2*b[1] - 1/2*b[2] + 1/2*eps*a[1] - 1/2*eps*a[2]" in text
    assert lf.parse_sc(text).same_structure(G)
