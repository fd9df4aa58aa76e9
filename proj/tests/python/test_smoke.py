import pytest

import bandix


def max_err(x, y):
    return max(abs(a - b) for a, b in zip(x, y))


def test_method_ids():
    ids = bandix.method_ids()
    assert "npdm" in ids and "sip-hb-array" in ids


def test_solve_generated_system():
    sys = bandix.generate("sparse-outer-penta", 500, k=8, seed=3)
    for method in ("npdm", "mnpdm", "pd2td+ntdm", "sip", "sip-hb-array"):
        out = bandix.solve(method, sys["diagonals"], sys["b"])
        assert max_err(out["x"], sys["x_true"]) <= 1e-11
        assert out["ops"] > 0


def test_tridiagonal_solve():
    out = bandix.solve("ntdm", [[-1, -1], [2, 2, 2], [-1, -1]], [1, 0, 1])
    assert max_err(out["x"], [1, 1, 1]) <= 1e-15
    assert out["ops"] == 9 * 3 - 8


def test_exact_solve_with_zero_leading_pivot():
    diags = [["1", "2"], ["1", "1", "3"], ["0", "1", "2", "1"], ["1", "1", "1"], ["2", "1"]]
    x = bandix.exact_solve(diags, ["1/3", "-2", "5/7", "0"])
    assert x == ["-5/3", "-107/21", "19/7", "43/21"]
    assert bandix.exact_det([["-1", "-1"], ["2", "2", "2"], ["-1", "-1"]]) == "4"
    with pytest.raises(bandix.SolverError):
        bandix.solve("npdm", [[float(v) for v in d] for d in diags], [1, 1, 1, 1])


def test_singular_and_invalid_input():
    singular = [["0", "0"], ["1", "1", "1"], ["1", "1", "1", "1"], ["1", "0", "1"], ["0", "0"]]
    with pytest.raises(bandix.SolverError, match="SingularMatrix"):
        bandix.exact_solve(singular, ["1"] * 4)
    with pytest.raises(ValueError):
        bandix.solve("npdm", [[1.0], [1.0]], [1.0])
    with pytest.raises(ValueError):
        bandix.generate("no-such-family", 10)


def test_verify_complexity():
    assert bandix.verify_complexity("npdm", [10, 100, 1000]) == ("19", "-29")
    assert bandix.verify_complexity("ntdm", [10, 100, 1000]) == ("9", "-8")


def test_bench_report():
    csv = bandix.bench(["npdm", "spdm"], "dd-full-penta", [20, 40], reps=1, seed=2)
    lines = csv.strip().split("\n")
    assert lines[0] == "method,n,k,reps,mean_s,min_s,error_inf,iters,ops,status"
    assert len(lines) == 5
    assert all(line.endswith(",ok") for line in lines[1:])
