import afkit
import pytest


def test_stable_extensions():
    f = afkit.AF(["a", "b"], [("a", "b")])
    assert afkit.extensions(f, "stb") == [["a"]]


def test_apx_round_trip():
    f = afkit.parse_apx("arg(a). arg(b). att(a,b).")
    assert afkit.parse_apx(afkit.emit_apx(f)) == f
    assert f.attacks == [("a", "b")]


def test_kernel_equivalence():
    f = afkit.AF(["a", "b"], [("a", "a"), ("a", "b")])
    g = afkit.AF(["a", "b"], [("a", "a")])
    v = afkit.equivalent(f, g, "E", "stb")
    assert v["answer"] == "equivalent"
    assert v["kernel"] == "k_stb"


def test_realize_nav():
    sets = [["a", "b"], ["b", "c"]]
    assert afkit.realizable(sets, "nav")
    f = afkit.realize(sets, "nav")
    assert afkit.extensions(f, "nav") == sets


def test_reconstruct_from_exact_class():
    f = afkit.AF(["a", "b", "c"], [("a", "b"), ("b", "c")])
    cls = afkit.exact_class("prf")
    assert afkit.reconstruct(f, "prf", cls) == afkit.extensions(f, "prf")


def test_rho_logic():
    assert afkit.rho_logic_holds(["a"], "stb") == (True, True)


def test_errors():
    with pytest.raises(ValueError):
        afkit.parse_apx("arg(a). att(a,b).")
    with pytest.raises(ValueError):
        afkit.extensions(afkit.AF(["a"]), "nope")
