import os
import pathlib

import pytest

import supercoh

DATA = pathlib.Path(os.environ.get("SUPERCOH_DATA", pathlib.Path(__file__).resolve().parents[1] / "data"))


def text(name):
    return (DATA / name).read_text()


def test_schema_version():
    assert supercoh.schema_version == 1


def test_validate_ok():
    report = supercoh.validate(text("a1.json"))
    assert report["ok"]


def test_validate_broken_jacobi():
    assert not supercoh.validate(text("broken_jacobi.json"))["ok"]
    with pytest.raises(supercoh.ValidationError):
        supercoh.sixterm(text("broken_jacobi.json"))


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        supercoh.validate(text("p2.json"))


def test_cohomology_dims_a3():
    assert supercoh.cohomology_dim(text("a3.json"), "k", 2, "restricted") == 1
    assert supercoh.cohomology_dim(text("a3.json"), "k", 1, "lie") == 0


def test_sixterm_a4():
    r = supercoh.sixterm(text("a4.json"), "k")
    assert [r["dims"][k] for k in ("H1_star", "H1", "S_invariants", "H2_star", "H2")] == [0, 1, 2, 1, 0]
    assert r["all_exact"]


def test_catalog():
    ids = supercoh.catalog_ids()
    assert len(ids) >= 8
    for i in ids:
        assert supercoh.catalog_sixterm(i)["all_exact"], i
    assert "even" in supercoh.catalog_file(ids[0])


def test_selftest():
    suites = supercoh.selftest(1)
    assert all(ok for _, ok, _ in suites)
