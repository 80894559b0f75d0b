from pathlib import Path

import pytest

import catcolim

DATA = Path(__file__).resolve().parent.parent / "data"


def read(name):
    return (DATA / name).read_text()


def test_round_trip():
    text = read("golden/coproduct_pair.cat")
    assert catcolim.Document(text).text() == text


def test_hom_and_normal_forms():
    d = catcolim.Document(read("test_cats.cat"))
    assert d.hom("TIso", "U", "V") == ["u"]
    assert d.hom("TIso", "U", "U") == ["id(U)"]
    assert d.normalize("TIdem", "e;e;e") == "e"
    assert d.equal("TIso", "u;v", "id(U)") == "Equal"


def test_coproduct_counts():
    d = catcolim.Document(read("pair.cat"))
    assert d.construct("coproduct", ["A", "B"]) == "C"
    assert d.num_objects("A+B") == 3
    assert d.num_arrows("A+B") == 2
    assert d.pi0("A+B") == [["A:X", "A:Y"], ["B:Z"]]
    assert d.text() == read("golden/coproduct_pair.cat")


def test_tensor_coinserter_is_universal():
    d = catcolim.Document(read("z2.cat"))
    d.construct("coinserter", ["Id", "Id"], tensor=True)
    reports = d.check_universal("C", catcolim.Document(read("tensor_tests.cat")))
    assert [r["test"] for r in reports] == ["TZ2", "TSVect", "TRot"]
    assert all(r["verdict"] == "Equal" for r in reports)


def test_components_of_a_coproduct():
    d = catcolim.Document(read("z2.cat") + "\n" + read("z2.cat").replace("Z2", "B").replace("Id", "IdB").replace("Triv", "TrivB"))
    d.construct("coproduct", ["Z2", "B"], tensor=True)
    target = [n for t, n in d.blocks() if t == "tensor category"][-1]
    names, unit, table = d.tensor_pi0(target)
    assert len(names) == 4
    assert all(table[a][a] == unit for a in range(4))


def test_errors_carry_codes():
    with pytest.raises(catcolim.CatcolimError) as info:
        catcolim.Document("category A {\n  objects: X, Y\n  arrows:\n    f: X -> Y\n  relations:\n    f = id(Y)\n}\n")
    assert catcolim.error_code(info.value) == "NonParallelRelation"


def test_cli_exit_codes():
    code, out, _ = catcolim.run(["pi0", "--in", str(DATA / "pair.cat")])
    assert code == 0
    assert out == "A: 1 components {X, Y}\nB: 1 components {Z}\n"
    assert catcolim.run(["no-such-command"])[0] == 3
