"""Smoke test for the gengraph Python bindings.

Build and install first, e.g. `maturin develop` or
`maturin build && pip install target/wheels/*.whl`.
"""

import gengraph_py as gg


def main():
    c2 = gg.Group("C2")
    assert (c2.name, c2.order, c2.d()) == ("C2", 2, 1)
    assert gg.phi(c2, 2) == 3
    assert gg.phi(gg.Group("S3"), 2) == 18
    assert gg.phi_by_mobius(gg.Group("D4"), 2) == 24

    s = gg.stats(gg.Group("S3"), 2)
    assert s["prob"] == "1/2" and s["alpha"] == "3/1", s

    assert gg.counts(c2, 2, 2) == (4, 6, 3)
    k4 = gg.generating_graph(c2, 2, 2)
    assert (k4.nu, k4.eta, k4.loops) == (4, 6, [1, 2, 3])
    assert k4.planarity()["planar"]
    assert k4.edge_list().startswith("p 4 6 3\n")

    q8 = gg.generating_graph(gg.Group("Q8"), 1, 1)
    v = q8.planarity()
    assert v["planar"] and v["method"] == "full-test", v
    c5 = gg.generating_graph(gg.Group("C5"), 1, 1).planarity()
    assert not c5["planar"]
    assert gg.expected_planar(gg.Group("D6"), 1, 1)
    assert not gg.expected_planar(gg.Group("C2"), 2, 3)

    b = gg.bounds(gg.Group("C4"), 1, 2)
    assert b["genus_lb"]["exact"] == "1/3", b

    try:
        gg.Group("Z3")
    except ValueError as e:
        assert "position 0" in str(e)
    else:
        raise AssertionError("bad expression accepted")
    try:
        gg.phi(gg.Group("S4"), 3, steps=1)
    except gg.BudgetError:
        pass
    else:
        raise AssertionError("budget not enforced")

    names = [g.name for g in gg.catalog()]
    assert len(names) == 57 and "C4xC2" in names

    r = gg.verify("corollary", order_cap=12)
    assert r["passed"], r
    print("smoke test passed:", len(names), "catalog groups;", r["suites"][0]["checked"], "corollary rows")


if __name__ == "__main__":
    main()
