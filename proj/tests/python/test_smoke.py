import pytest

import scord


def test_parse_roundtrip():
    t = scord.parse("w*[w,1;w]")
    assert str(t) == "w*[w,1;w]"
    assert t.arity == 1
    assert scord.parse("1+w+1").parts == ["1", "w", "1"]


def test_parse_errors_are_python_exceptions():
    try:
        scord.parse("w[[")
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_embeds_and_mirror_duality():
    w, w1 = scord.parse("w"), scord.parse("w+1")
    assert scord.embeds(w, w1)
    assert not scord.embeds(w1, w)
    s, t = scord.parse("w+1"), scord.parse("w[w]")
    assert scord.embeds(s, t) == scord.embeds(s.mirror(), t.mirror())


def test_strings_convert_to_terms():
    assert scord.embeds("w", "w[w]")
    assert scord.ord_value("w^2+w") == "w^2+w"
    with pytest.raises(ValueError):
        scord.Term("w[[")
    # A bad string in Term position fails overload resolution: the implicit
    # conversion machinery swallows the parse error.
    with pytest.raises(TypeError):
        scord.embeds("w[[", "w")


def test_ord_value():
    assert scord.ord_value(scord.parse("w[w]")) == "w^2"
    assert scord.ord_value(scord.parse("w+1")) == "w+1"
    assert scord.ord_value(scord.parse("w*")) is None


def test_witness_addresses_increase():
    pairs = scord.witness(scord.parse("w"), scord.parse("w[w]"), depth=2)
    assert pairs
    targets = [tuple(b) for _, b in pairs]
    assert targets == sorted(targets)
    assert scord.witness(scord.parse("w[w]"), scord.parse("w"), depth=2) is None


def test_mdecomp_and_blocks():
    d = scord.mdecomp(scord.parse("1+w"))
    assert d["m"] == 1
    b = scord.blocks(scord.parse("w*+w"))
    assert b["bar"] == "w*w"
    assert b["blocks"][0]["kind"] == "D"


def test_sq():
    assert scord.sq(scord.parse("w")) == "(P(w)/Fin)+"
    assert scord.sq(scord.parse("w[w]")) == "(P(wxw)/(FinxFin))+"
    rep = scord.sq_report(scord.parse("w+w"))
    assert rep["overall_text"] == "(P(w)/Fin)+ x (P(w)/Fin)+"
    o = scord.ordinal_sq("w^2.3")
    assert o["sq_text"].count("FinxFin") == 3


def test_copies_calculus():
    w = scord.parse("w")
    evens = {"explicit": {}, "tail": {"periodic": ["full", "empty"]}}
    assert scord.contains_copy(w, "full")
    assert not scord.contains_copy(w, "empty")
    assert scord.le_star(w, evens, "full") == "true"
    assert scord.le_star(w, "full", evens) == "false"
    assert str(scord.restrict(w, evens)) == "w"
    assert scord.restrict(w, "empty") is None

    d = scord.disjoint(w)
    assert d["found"]
    assert d["first_image"] != d["second_image"]


def test_shape_errors_name_the_path():
    try:
        scord.contains_copy(scord.parse("w"), {"parts": ["full", "empty"]})
    except ValueError as e:
        assert "path" in str(e)
    else:
        raise AssertionError("expected ValueError")
