"""The acceptance battery: twelve numbered criteria, each producing a Report."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from nhv import derivations as dv
from nhv import ennilhecke as nh
from nhv import ktheory as kt
from nhv import sl2rep
from nhv.parser import parse_expr
from nhv.report import Report

# Worked values for R_5, written in factored form.
R5_ALPHA = {
    (1, 5): "x5^2*(x2-x5)*(x3-x5)*(x4-x5)",
    (1, 4): "x4^2*(x2-x4)*(x3-x4) + x5^2*(x2-x5)*(x3-x5)",
    (1, 3): "x3^2*(x2-x3) + x4^2*(x2-x4) + x5^2*(x2-x5)",
    (1, 2): "x2^2 + x3^2 + x4^2 + x5^2",
    (2, 5): "x5^2*(x3-x5)*(x4-x5)",
    (2, 4): "x5^2*(x3-x5) + x4^2*(x3-x4)",
    (2, 3): "x5^2 + x4^2 + x3^2",
    (3, 5): "x5^2*(x4-x5)",
    (3, 4): "x5^2 + x4^2",
    (4, 5): "x5^2",
}
R5_D = {
    1: "(x2^2+x3^2+x4^2+x5^2)*w2 + (x3^2*(x2-x3)+x4^2*(x2-x4)+x5^2*(x2-x5))*w3"
       " + (x4^2*(x2-x4)*(x3-x4)+x5^2*(x2-x5)*(x3-x5))*w4 + x5^2*(x2-x5)*(x3-x5)*(x4-x5)*w5",
    2: "(x5^2+x4^2+x3^2)*w3 + (x5^2*(x3-x5)+x4^2*(x3-x4))*w4 + x5^2*(x3-x5)*(x4-x5)*w5",
    3: "(x5^2+x4^2)*w4 + x5^2*(x4-x5)*w5",
    4: "x5^2*w5",
    5: "0",
}


@dataclass
class Criterion:
    number: int
    title: str
    run: Callable[[], Report]
    budget_s: float | None = None


def _merge(name: str, params: dict, parts: list[tuple[str, Report]]) -> Report:
    rep = Report(name, params)
    for prefix, r in parts:
        rep.extend(r, prefix=prefix)
    return rep


def c1_r5_example() -> Report:
    from nhv.cli import main_report

    table = main_report(["alpha", "--n", "5"])
    got = {c.name: c.lhs for c in table.checks}
    rep = Report("criterion 1", {"n": 5})
    for (i, j), src in R5_ALPHA.items():
        rep.add(f"alpha_({i},{j})", got.get(f"alpha_({i},{j})", "missing"), parse_expr(src, 5).to_text())
    for i, src in R5_D.items():
        rep.add(f"d_5(w{i})", got.get(f"d_5(w{i})", "missing"), parse_expr(src, 5).to_text())
    rep.expect("internal consistency of the alpha table", table.passed)
    return rep


def c2_relations() -> Report:
    return _merge("criterion 2", {"D": 12}, [(f"n={n}: ", nh.verify_relations(n, 12)) for n in range(1, 5)])


def c3_nilpotency() -> Report:
    parts = []
    for p in (3, 5, 7):
        for n in range(1, p):
            parts.append((f"R_{n} p={p}: ", dv.nilpotency_check(p, n)))
            parts.append((f"A_{n} p={p}: ", nh.an_nilpotency_check(p, n, 1)))
    return _merge("criterion 3", {}, parts)


def c4_equivariance() -> Report:
    parts = []
    for n in range(1, 5):
        if n > 1:
            parts.append((f"n={n}: ", dv.equivariance_check(n, 10)))
        parts.append((f"n={n}: ", dv.phi_prime_check(n, 6)))
        parts.append((f"n={n}: ", nh.phi_inclusion_check(n, avals=(1,), words=3)))
    parts.append(("", dv.omega_check(6)))
    return _merge("criterion 4", {"D": 10}, parts)


def c5_partials() -> Report:
    parts = []
    for n in range(1, 5):
        parts.append((f"n={n}: ", dv.partials_check(n, 10)))
        parts.append((f"n={n}: ", dv.dk_power_formula_check(n, 4)))
        if n > 1:
            parts.append((f"n={n}: ", dv.dt_commutation_check(n, 10)))
    return _merge("criterion 5", {"D": 10}, parts)


def c6_lemmas() -> Report:
    return _merge("criterion 6", {}, [("", dv.hs_lemma_check(5, 5)), ("", dv.hs1_lemma_check(5, 5))])


def c7_idempotent() -> Report:
    return _merge("criterion 7", {}, [(f"n={n}: ", nh.epsilon_check(n)) for n in range(1, 5)])


def c8_quantum_group() -> Report:
    parts = []
    for p in (3, 5, 7):
        parts.append((f"p={p} K0: ", kt.verify_uqsl2(p, "K0")))
        parts.append((f"p={p} Verma: ", kt.verify_uqsl2(p, "Verma")))
        parts.append((f"p={p}: ", kt.verify_iso(p)))
    return _merge("criterion 8", {}, parts)


def c8_rescaled() -> Report:
    rep = Report("criterion 8 (rescaled)", {}, informational=True)
    for p in (3, 5, 7):
        rep.extend(kt.rescaled_relation_report(p), prefix=f"p={p}: ")
    return rep


def c9_eclass() -> Report:
    parts = []
    for p in (3, 5, 7):
        for n in range(1, p):
            parts.append((f"p={p}: ", kt.categorified_E_class(n, p)[1]))
    for p in (3, 5):
        for n in range(1, 4):
            parts.append((f"n={n} p={p}: ", kt.d_matrix_consistency(n, p, 6)))
    return _merge("criterion 9", {}, parts)


def c10_sl2() -> Report:
    return _merge("criterion 10", {"D": 12}, [(f"n={n}: ", sl2rep.verify_sl2_suite(n, 12)) for n in range(1, 4)])


def c11_filtrations() -> Report:
    parts = []
    for n in range(1, 5):
        for m in range(n + 1):
            parts.append((f"n={n} m={m}: ", sl2rep.filtration_check(n, m, 10)))
            parts.append((f"n={n} m={m}: ", sl2rep.an_filtration_check(n, m, 10)))
    return _merge("criterion 11", {"D": 10}, parts)


def c12_conjecture() -> Report:
    rep = Report("criterion 12", {"n2_mmax": 8, "n3_mmax": 4})
    scan2 = sl2rep.conjecture_scan(2, 8)
    for c in scan2.checks:
        if "minus" in c.name or "dimension" in c.name:
            rep.checks.append(c)
    rep.add("dim R_(2,2) slice", sl2rep.highest_weights(2, 2)[1], 14)
    scan3 = sl2rep.conjecture_scan(3, 4)
    rep.expect("n=3 scan completed", len(scan3.checks) > 0,
               detail="; ".join(f"{c.name}: {'match' if c.equal else 'no match'}"
                                for c in scan3.checks if "reading" in c.name))
    return rep


CRITERIA = [
    Criterion(1, "R_5 example reproduction", c1_r5_example, 5.0),
    Criterion(2, "defining relations", c2_relations, 60.0),
    Criterion(3, "p-nilpotency", c3_nilpotency, 120.0),
    Criterion(4, "equivariance and maps", c4_equivariance),
    Criterion(5, "partial-derivative suite", c5_partials),
    Criterion(6, "symmetric-function lemmas", c6_lemmas),
    Criterion(7, "idempotent", c7_idempotent),
    Criterion(8, "small quantum group", c8_quantum_group, 10.0),
    Criterion(9, "categorified E", c9_eclass),
    Criterion(10, "sl2/Witt", c10_sl2),
    Criterion(11, "filtration theorems", c11_filtrations),
    Criterion(12, "conjecture scan", c12_conjecture, 300.0),
]


def run_criterion(c: Criterion) -> Report:
    t0 = time.perf_counter()
    rep = c.run()
    elapsed = time.perf_counter() - t0
    if c.budget_s is not None:
        rep.add("runtime budget", f"{elapsed:.2f} s", f"< {c.budget_s:g} s", equal=elapsed < c.budget_s)
    rep.params["title"] = c.title
    rep.timing_ms = round(elapsed * 1000.0, 3)
    return rep


def run_suite(numbers: list[int] | None = None) -> list[tuple[Criterion, Report]]:
    out = []
    for c in CRITERIA:
        if numbers and c.number not in numbers:
            continue
        out.append((c, run_criterion(c)))
    return out


def summary_line(c: Criterion, rep: Report) -> str:
    status = "PASS" if rep.passed else "FAIL"
    extra = ""
    if not rep.passed:
        fails = rep.failures()
        extra = f" ({len(fails)} failing checks, first: {fails[0].name})"
    return f"criterion {c.number:>2} [{status}] {c.title}: {len(rep.checks)} checks, {rep.timing_ms / 1000:.2f} s{extra}"
