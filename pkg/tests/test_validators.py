import pandera as pa
import pandas as pd

from .context import mvtwin, pytest
import mvtwin as mv


def sample_report():
    return {
        "task": "rep verify",
        "ctx": {"n": 3, "k": 2, "group": "mvt"},
        "family": "z2",
        "params": {"y": ["1/1", "-2/3"]},
        "results": [
            {"item": "a", "pass": True, "detail": ""},
            {"item": "b", "pass": False, "detail": "x"},
        ],
        "pass": False,
        "seed": 0,
        "tool_version": mv.VERSION,
    }


def test_errors():
    e = mv.ParseError("Malformed token", 2, "q1")
    assert e.position == 2
    assert e.token == "q1"
    assert isinstance(e, ValueError)
    assert issubclass(mv.ScaleError, mv.DomainError)
    assert issubclass(mv.ParameterError, mv.DomainError)
    assert issubclass(mv.KernelError, mv.MvtwinError)


def test_check_ctx():
    mv.check_ctx(2, 1)
    mv.check_ctx(5, 3, "mvht")
    for args in [(1, 1), (3, 0), (3, 1, "bingo")]:
        with pytest.raises(mv.DomainError):
            mv.check_ctx(*args)


def test_check_family_and_scale():
    mv.check_family("z8")
    with pytest.raises(mv.DomainError):
        mv.check_family("z0")

    mv.check_scale(5, 5, "Thing")
    with pytest.raises(mv.ScaleError):
        mv.check_scale(6, 5, "Thing")


def test_check_results():
    f = pd.DataFrame({"item": ["a", "b"], "pass": [True, False], "detail": ["", ""]})
    assert mv.check_results(f).shape[0] == 2

    with pytest.raises(ValueError):
        mv.check_results(None)

    g = pd.concat([f, f.iloc[:1]])
    with pytest.raises(pa.errors.SchemaError):
        mv.check_results(g)

    g = f.copy()
    g["item"] = ["a", " "]
    with pytest.raises(pa.errors.SchemaError):
        mv.check_results(g)


def test_check_relators():
    f = mv.relator_table(mv.relators_mvt(3, 1))
    assert mv.check_relators(f).shape[0] == 6

    g = f.copy()
    g["length"] = -1
    with pytest.raises(pa.errors.SchemaError):
        mv.check_relators(g)


def test_check_kernel_words():
    f = pd.DataFrame(
        {
            "word": ["s1"],
            "length": [1],
            "eval_identity": [True],
            "phi_image": ["(1 2)"],
            "psi_image": ["e"],
            "status": ["certified"],
        }
    )
    assert mv.check_kernel_words(f).shape[0] == 1

    g = f.copy()
    g["status"] = "proven"
    with pytest.raises(pa.errors.SchemaError):
        mv.check_kernel_words(g)

    g = f.copy()
    g["length"] = 0
    with pytest.raises(pa.errors.SchemaError):
        mv.check_kernel_words(g)


def test_validate_report():
    assert mv.validate_report(sample_report())["task"] == "rep verify"

    r = sample_report()
    r["ctx"]["n"] = [3, 4]
    r["ctx"]["k"] = [1, 2]
    r["params"] = {"n=3,k=1": {"y": ["1/1"]}, "n=4,k=2": {"y": ["1/1", "2/3"]}}
    mv.validate_report(r)
    r["params"]["n=4,k=2"]["y"][1] = "2.5"
    with pytest.raises(ValueError):
        mv.validate_report(r)

    r = sample_report()
    del r["seed"]
    with pytest.raises(ValueError):
        mv.validate_report(r)

    r = sample_report()
    r["ctx"]["extra"] = 1
    with pytest.raises(ValueError):
        mv.validate_report(r)

    r = sample_report()
    r["pass"] = True
    with pytest.raises(ValueError):
        mv.validate_report(r)

    r = sample_report()
    r["params"]["y"] = ["0.5"]
    with pytest.raises(ValueError):
        mv.validate_report(r)

    r = sample_report()
    r["results"] = r["results"][::-1]
    with pytest.raises(ValueError):
        mv.validate_report(r)

    r = sample_report()
    r["results"].append({"item": "a", "pass": True, "detail": ""})
    with pytest.raises(ValueError):
        mv.validate_report(r)
