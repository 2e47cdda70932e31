"""Acceptance suite: one PASS/FAIL line per criterion.

Run under pytest or directly with ``python3 tests/test_acceptance.py``.
"""

import io
import json
import sys
import tempfile
from contextlib import redirect_stdout
from fractions import Fraction
from functools import lru_cache
from math import factorial
from pathlib import Path

import pytest

from genschur import cli
from genschur.characters import character, littlewood_rhs
from genschur.kernel import Matrix
from genschur.moments import (
    B_coefficient,
    DiscreteMeasure,
    b2_from_matrix,
    eigenvalue_sum,
    pair_factor_sum,
)
from genschur.partitions import enumerate_partitions
from genschur.polybasis import monomial_basis, so_even_basis, so_odd_basis, sp_basis
from genschur.schurgen import (
    all_routes,
    classical_orthogonality_check,
    duality_check,
    eval_points,
    expansion_coeffs,
    grassmannian_check,
)
from genschur.tauseries import kp_coefficient_check
from genschur.walks import RateSpec, chapman_kolmogorov_check, semigroup_check, states, transition_weight

F = Fraction
BASES = {"monomial": monomial_basis, "sp": sp_basis, "so_even": so_even_basis, "so_odd": so_odd_basis}
SEED = 2024
GOLDEN = Path(__file__).parent / "golden"


@lru_cache(maxsize=None)
def _basis(kind):
    # large enough for |lambda| <= 6 with n <= 3 on every route
    return BASES[kind](16)


def _sweep():
    for kind in BASES:
        for n in (1, 2, 3):
            for lam in enumerate_partitions(6, n):
                yield kind, n, lam


def criterion_1():
    bad = 0
    for kind, n, lam in _sweep():
        for x in eval_points(n, 5, seed=SEED + n):
            if len(set(all_routes(_basis(kind), lam, x).values())) != 1:
                bad += 1
    return bad == 0, f"{bad} disagreements"


def criterion_2():
    bad = [(k, n) for k in BASES for n in (1, 2, 3) for depth in range(n, 9)
           if not grassmannian_check(BASES[k](depth + n + 2), eval_points(n, 1, seed=SEED)[0], depth)]
    return not bad, f"failures {bad}"


def criterion_3():
    bad = []
    for k in BASES:
        for n in (1, 2, 3):
            x = eval_points(n, 1, seed=SEED + 1)[0]
            if not duality_check(BASES[k](12), x):
                bad.append((k, n))
    for n in (1, 2, 3):
        if not classical_orthogonality_check(eval_points(n, 1, seed=SEED + 2)[0], 8):
            bad.append(("classical", n))
    return not bad, f"failures {bad}"


def criterion_4():
    bad = 0
    for kind, n, lam in _sweep():
        ex = expansion_coeffs(_basis(kind), lam, n)
        for x in eval_points(n, 5, seed=SEED + n):
            if ex.evaluate_at(x) != all_routes(_basis(kind), lam, x)["bialternant"]:
                bad += 1
    return bad == 0, f"{bad} mismatches"


def criterion_5():
    points = [(F(2), F(3)), (F(1, 2), F(-5, 3)), (F(7, 4), F(-2))]
    bad = [(g, lam, x) for g in ("sp", "so_even", "so_odd") for x in points
           for lam in enumerate_partitions(4, 2) if littlewood_rhs(g, lam, x) != character(g, lam, x)]
    dim = character("sp", [1], (1, 1))
    return not bad and dim == 4, f"{len(bad)} mismatches, dim Sp(4) (1) = {dim}"


def criterion_6():
    bad = [(k, n, lam) for k, n, lam in _sweep() if not kp_coefficient_check(_basis(k), n, lam, max_rank=2)]
    return not bad, f"failures {bad[:3]}"


MEASURES = [
    DiscreteMeasure((0, 1), (1, 1)),
    DiscreteMeasure((-1, 0, 1, 2), (F(1, 2), 1, F(1, 3), 2)),
    DiscreteMeasure((F(1, 2), F(-3, 2), 3, F(5, 4), -2), (1, 2, 1, F(1, 5), F(7, 3))),
    DiscreteMeasure((1, 2, 3), (-1, 1, F(1, 2))),
]


def criterion_7():
    bad = [(i, n) for i, mu in enumerate(MEASURES) for n in (1, 2, 3)
           if eigenvalue_sum(mu, n).value != B_coefficient(mu, [], n)]
    worked = eigenvalue_sum(MEASURES[0], 2).value
    N = 5
    theta = Matrix.from_function(N, N, lambda i, j: F(i + 2 * j + 1, j + 1) - (i == j))
    phi = Matrix.from_function(N, N, lambda i, j: F((i - j) ** 2 + 1, i + 1))
    M = theta.transpose() @ phi
    cb = all(b2_from_matrix(M, lam, nu, n) == pair_factor_sum(theta, phi, lam, nu, n)
             for n in (1, 2, 3) for lam in enumerate_partitions(2, n, N - n)
             for nu in enumerate_partitions(2, n, N - n))
    return not bad and worked == 1 and cb, f"andreief failures {bad}, worked value {worked}, bimoment {cb}"


def criterion_8():
    r = RateSpec((1, 2, F(1, 3), 1, 3, F(5, 2)))
    bad = 0
    for n in (1, 2):
        sts = [s for s in states(r, n) if s.weight <= 3]
        for lam in sts:
            for mu in sts:
                if not semigroup_check(r, lam, mu, n, F(1, 2)):
                    bad += 1
                if not chapman_kolmogorov_check(r, lam, mu, n, F(1, 3), F(3, 4)):
                    bad += 1
    ones = RateSpec((1,) * 8)
    t = F(3, 5)
    closed = all(transition_weight(ones, [d] if d else [], [], 1, t) == t ** d / factorial(d)
                 for d in range(8))
    return bad == 0 and closed, f"{bad} failures, closed form {closed}"


def criterion_9():
    cases = sorted(GOLDEN.glob("*.json"))
    subs = set()
    bad = []
    with tempfile.TemporaryDirectory() as tmp:
        for case in cases:
            spec = json.loads(case.read_text())
            subs.add(spec["subcommand"])
            req, out = Path(tmp) / "req.json", Path(tmp) / "out.json"
            req.write_text(json.dumps(spec["request"]))
            with redirect_stdout(io.StringIO()):
                status = cli.main([spec["subcommand"], "--input", str(req), "--output", str(out),
                                   *spec["args"]])
            if status != spec["status"] or out.read_bytes() != case.with_suffix(".out").read_bytes():
                bad.append(case.stem)
    ok = not bad and len(cases) >= 20 and subs == set(cli.SUBCOMMANDS)
    return ok, f"{len(cases)} requests, {len(subs)} subcommands, mismatches {bad}"


CRITERIA = [
    (1, "four-route equality", criterion_1),
    (2, "Grassmannian equality", criterion_2),
    (3, "E/H duality and classical orthogonality", criterion_3),
    (4, "Cauchy-Binet expansion", criterion_4),
    (5, "character cross-validation", criterion_5),
    (6, "Pluecker property of coefficients", criterion_6),
    (7, "matrix-model identity", criterion_7),
    (8, "walk semigroup and Chapman-Kolmogorov", criterion_8),
    (9, "CLI golden determinism", criterion_9),
]


def _line(num, name, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {name} ({detail})"


@pytest.mark.parametrize("num, name, check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, name, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, name, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, name, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(num, name, ok, detail), flush=True)
    sys.exit(0 if all(results) else 1)
