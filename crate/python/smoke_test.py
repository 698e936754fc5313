"""Smoke test for the dischargekit_py extension module.

Build and install first:  pip install --no-build-isolation -e crates/python
"""

import json

import networkx as nx

import dischargekit_py as dk


def check(label, cond):
    print(f"{'PASS' if cond else 'FAIL'}  {label}")
    return bool(cond)


def main():
    ok = True

    k4 = dk.Graph.from_graph6("C~")
    ok &= check("K4 graph6 roundtrip", k4.to_graph6() == "C~" and (k4.n, k4.m) == (4, 6))
    ok &= check("graph6 agrees with networkx", nx.to_graph6_bytes(nx.cycle_graph(5), header=False).strip() == b"Dhc"
                and dk.Graph.from_graph6("Dhc").edges() == sorted(tuple(sorted(e)) for e in nx.cycle_graph(5).edges()))

    tri = dk.Orientation(3, [(0, 1), (1, 2), (2, 0)])
    ok &= check("directed triangle counts (1, 1)", dk.count_eulerian(tri) == (1, 1))

    cert = dk.find_certificate(k4, [4, 4, 4, 4])
    ok &= check("K4 has a certificate for lists of 4", cert is not None and cert["even"] != cert["odd"])

    c3 = dk.is_k_choosable(dk.Graph(3, [(0, 1), (1, 2), (0, 2)]), 2)
    ok &= check("C3 not 2-choosable, witness all {0,1}",
                not c3["choosable"] and c3["witness"]["lists"] == [[0, 1]] * 3)
    ok &= check("K4 is 4-choosable", dk.is_k_choosable(k4, 4)["choosable"])

    c4 = dk.Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    lists = [[0, 1], [1, 2], [0, 2], [1, 2]]
    col = dk.l_color(c4, lists)
    ok &= check("l_color gives a proper list coloring",
                col is not None and all(col[v] in lists[v] for v in range(4))
                and all(col[a] != col[b] for a, b in c4.edges()))
    ok &= check("C4 sizes 2 extends", dk.check_extension(c4, [2, 2, 2, 2]))

    trio = dk.Graph(5, [(0, 1), (0, 2), (0, 3), (1, 3), (1, 4), (2, 3), (3, 4)])
    ok &= check("H extends with re-choice", dk.check_extension_with_rechoice(trio, [2, 3, 2, 4, 2], [0, 2]))
    ok &= check("one trio in the trio graph", len(dk.find_trios(trio)) == 1)
    ok &= check("center is Worst", dk.classify_role(trio, 3, [0, 2, 3]) == "Worst")

    petersen = nx.petersen_graph()
    pg = dk.Graph(10, list(petersen.edges()))
    ok &= check("Petersen has 12 5-cycles", len(dk.enumerate_cycles(pg, 5)) == 12)
    ok &= check("C5 satisfies every condition",
                all(r["holds"] for r in dk.check_all_conditions(dk.Graph.from_graph6("Dhc"))))

    cube = dk.PlaneGraph([[1, 3, 4], [0, 5, 2], [1, 6, 3], [0, 2, 7], [0, 7, 5], [1, 4, 6], [2, 5, 7], [3, 6, 4]])
    ok &= check("cube has 6 faces", len(cube.faces()) == 6)
    out = dk.discharge(cube)
    report = out["report"]
    ok &= check("cube charge total stays -12", report["total"] == {"num": -12, "den": 1} == report["initial_total"])
    ok &= check("cube ledger serializes", json.loads(json.dumps(out))["ledger"]["trace"] == [])

    rows = dk.repro_rows()
    failed = [r["check"] for r in rows if not r["pass"]]
    print(f"repro rows: {len(rows) - len(failed)} passed, {len(failed)} failed: {failed}")

    print("smoke test", "ok" if ok else "FAILED")
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
