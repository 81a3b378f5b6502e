"""Acceptance criteria, one test each; a PASS/FAIL line per criterion is
printed in the terminal summary."""

import json
import time
from contextlib import contextmanager

from conftest import ACCEPTANCE
from figure_data import MINIMAL, ONE_ARROWS, ZERO_ARROWS

from a22crystal.adjoint import INFINITY, LambdaSpec, verify_perfect
from a22crystal.cli import main
from a22crystal.crystal import CrystalGraph
from a22crystal.energy import verify_energy_axioms, verify_H_constancy
from a22crystal.verify import (
    all_lambdas,
    ground_energy_report,
    iso_report,
    neighbour_report,
    multiplicity_report,
    property_reports,
    suite_bijection,
    wall_graph,
)
from a22crystal.youngwall import Column, Wall, column_H, reduced_signature, signature_oracle, wall_e, wall_f

LAMBDAS = all_lambdas(3) + [LambdaSpec(4, 1)]


class Outcome:
    def __init__(self):
        self.ok = True
        self.notes = []

    def check(self, cond, note):
        if not cond:
            self.ok = False
            self.notes.append(note)


@contextmanager
def criterion(n, limit=None):
    out = Outcome()
    start = time.perf_counter()
    try:
        yield out
    except Exception as exc:
        out.check(False, f"{type(exc).__name__}: {exc}")
    seconds = time.perf_counter() - start
    if limit is not None:
        out.check(seconds < limit, f"took {seconds:.1f}s, limit {limit}s")
    detail = "; ".join(out.notes[:3]) if out.notes else "ok"
    ACCEPTANCE[n] = (out.ok, seconds, detail)
    print(f"criterion {n}: {'PASS' if out.ok else 'FAIL'} ({seconds:.2f}s) {detail}")
    assert out.ok, detail


def test_criterion_01_level4_crystal(capsys):
    with criterion(1, 1.0) as c:
        code = main(["crystal", "--level", "4", "--format", "json"])
        data = json.loads(capsys.readouterr().out)
        c.check(code == 0, f"exit {code}")
        g = CrystalGraph.from_json(data)
        c.check(len(g.nodes) == 15, f"{len(g.nodes)} nodes")
        arrows = {(s, i, d) for s, i, d in g.edges}
        want = {(f"({a},{b})", 1, f"({x},{y})") for (a, b), (x, y) in ONE_ARROWS}
        want |= {(f"({a},{b})", 0, f"({x},{y})") for (a, b), (x, y) in ZERO_ARROWS}
        c.check(arrows == want, f"arrow sets differ by {len(arrows ^ want)}")
        c.check(data["minimal_vectors"] == [f"({a},{b})" for a, b in sorted(MINIMAL)], "minimal vectors")


def test_criterion_02_energy_axioms():
    with criterion(2, 5.0) as c:
        for l in range(1, 6):
            r = verify_energy_axioms(l)
            c.check(r.ok, str(r))
        r = ground_energy_report(8)
        c.check(r.ok, str(r))


def test_criterion_03_affine_energy_constancy():
    with criterion(3, 30.0) as c:
        for l in range(1, 4):
            r = verify_H_constancy(l, 8, 10)
            c.check(r.ok and r.checked > 0, str(r))


def test_criterion_04_perfectness():
    with criterion(4, 30.0) as c:
        for l in range(1, 5):
            r = verify_perfect(l)
            c.check(r.ok, str(r))
            c.check("out of scope" in r.info.get("condition_i", ""), "condition (i) not reported")


def test_criterion_05_bijection():
    with criterion(5, 5.0) as c:
        for l in range(1, 6):
            for r in suite_bijection(l, 10):
                c.check(r.ok and r.checked > 0, str(r))
        for r in suite_bijection(None, 10, 10):
            c.check(r.ok and r.checked > 0, str(r))


def test_criterion_06_worked_energies():
    with criterion(6) as c:
        C = Column(0, 4, 6, 4)
        got = [column_H(C, Column(*v, 4)) for v in ((2, 4, 4), (3, 5, 6), (4, 6, 8), (6, 4, 2))]
        c.check(got == [-2, 0, 2, 2], f"got {got}")
        Y2 = Column(0, 2, 2, 4)
        c.check(column_H(Y2, Column(1, 5, 8, 4)) == 0, "H(Y2 (x) Y1')")
        c.check(column_H(Y2, Column(0, 4, 8, 4)) == -2, "H(Y2 (x) Y1'')")


def test_criterion_07_signatures():
    with criterion(7) as c:
        lam = LambdaSpec(4, 1)
        y = Wall(lam, (Column(7, 5, 6, 4), Column(3, 7, 8, 4)))
        c.check(signature_oracle(0, y) == ["+", "--++++", "+++"], f"0-signatures {signature_oracle(0, y)}")
        c.check(signature_oracle(1, y) == ["+", "-", "--+"], f"1-signatures {signature_oracle(1, y)}")
        c.check(reduced_signature(0, y) == "-+++++++", "reduced 0-signature")
        c.check(reduced_signature(1, y) == "--+", "reduced 1-signature")
        for method in ("oracle", "tensor"):
            f0 = wall_f(0, y, method)
            e1 = wall_e(1, y, method)
            c.check(f0 == Wall(lam, (Column(7, 5, 6, 4), Column(4, 0, 0, 4))), f"F0 ({method}) gave {f0}")
            c.check(e1 == Wall(lam, (Column(7, 3, 2, 4), Column(3, 7, 8, 4))), f"E1 ({method}) gave {e1}")


def test_criterion_08_neighbour_differences():
    with criterion(8, 120.0) as c:
        for lam in LAMBDAS:
            r = neighbour_report(lam, list(wall_graph(lam, 6).nodes.values()))
            c.check(r.ok and r.checked > 0, str(r))


def test_criterion_09_walls_vs_paths():
    with criterion(9, 300.0) as c:
        for lam in LAMBDAS:
            r = iso_report(lam, 6)
            c.check(r.ok, str(r))


def test_criterion_10_infinity():
    with criterion(10, 300.0) as c:
        r = iso_report(INFINITY, 7)
        c.check(r.ok, str(r))
        r = multiplicity_report(INFINITY, 7)
        c.check(r.ok and r.checked > 0, str(r))


def test_criterion_11_property_suite():
    with criterion(11) as c:
        for lam in LAMBDAS + [INFINITY]:
            for r in property_reports(lam, 6):
                c.check(r.ok and r.checked > 0, str(r))
