"""Smoke test for the biharm extension module."""

import math

import biharm


def close(a, b, tol):
    return abs(a - b) <= tol * max(1.0, abs(b))


def main():
    s = biharm.XSeries([1.0, 2.0, 3.0])
    assert s.order == 2 and s.coeff(5) == 0.0
    assert (s + s).coeffs == [2.0, 4.0, 6.0]
    assert (s * s).coeffs == [1.0, 4.0, 10.0]
    assert close(s.eval(0.5), 2.75, 1e-15)

    # Linear problem y'''' + y = 0 with cos(x/sqrt2)cosh(x/sqrt2) as solution.
    p = biharm.Problem("line", g="0", omega=1.0, y0=1.0)
    exact = math.cos(1 / math.sqrt(2)) * math.cosh(1 / math.sqrt(2))
    assert close(biharm.taylor_oracle(p, 40).eval(1.0), exact, 1e-14)

    p = biharm.Problem.standing_wave("line", 1, 0.5, -0.25)
    oracle = biharm.taylor_oracle(p, 40)
    for method in ("ADM_1D", "LADM_1D"):
        e = biharm.solve(p, method, terms=3, order=40)
        assert len(e) == 4 and e.method == method
        reference = biharm.component_oracle(p, method, terms=3, order=40)
        for got, want in zip(e.components, reference):
            for n in range(41):
                assert close(got.coeff(n), want.coeff(n), 1e-12), (method, n)
        for n in range(8):
            assert close(e.sum().coeff(n), oracle.coeff(n), 1e-12), (method, n)
        floor = biharm.residual_floor_degree(p, e.sum())
        assert floor is not None and floor >= 8, (method, floor)

    q = biharm.Problem.standing_wave("radial", 1, 0.3, 0.1)
    e = biharm.solve(q, "LADM_RADIAL", terms=3)
    table = biharm.integrate_numeric(q, 2.0, 1e-3)
    report = biharm.compare(e.sum(), table)
    assert report.max_rel_error < 1e-6, report.max_rel_error
    assert len(report.rows) == len(table)

    comps = [biharm.XSeries([0.5, 0.0, 1.0]), biharm.XSeries([0.0, 0.25, 0.0])]
    a = biharm.adomian_polys("y^2", comps, 1)
    assert a[0].coeffs[:3] == [0.25, 0.0, 1.0]
    assert a[1].coeffs[:3] == [0.0, 0.25, 0.0]

    try:
        biharm.solve(p, "ADM_RADIAL")
    except biharm.BiharmError as exc:
        assert "geometry" in str(exc)
    else:
        raise AssertionError("geometry mismatch not reported")

    regression = biharm.run_regression()
    assert regression.passed, regression.counts()
    assert regression.to_csv().startswith("check,subject")

    print("smoke test passed:", regression.counts())


if __name__ == "__main__":
    main()
