"""Desk-scale structural checks shared by the verify commands and the tests.

Each check returns (ok, counterexample) where the counterexample is a JSON
payload that can be replayed through the command line.  Enumeration data
per boundary string is cached so one run can layer several checks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from sl3web.bijection import grow, iota, roundtrip_holds
from sl3web.flows import (
    ClosedWeb,
    boundary_state,
    bracket,
    canonical_flow,
    enumerate_flows,
    tensor_expansion,
    weight,
)
from sl3web.foamword import enumerate_cellular_basis, involution
from sl3web.laurent import LaurentPoly, monomial
from sl3web.ladderweb import LadderWeb, SignString, enumerate_basis
from sl3web.tableaux import bkw_degree


def classical_sign_strings(max_n: int, min_n: int = 2) -> list[str]:
    """All +/- strings with weight divisible by three, by length then lex."""
    out = []
    for n in range(min_n, max_n + 1):
        for signs in itertools.product("+-", repeat=n):
            s = "".join(signs)
            if sum(1 if c == "+" else 2 for c in s) % 3 == 0:
                out.append(s)
    return out


@dataclass(frozen=True)
class WebSurvey:
    tableau: tuple
    web: LadderWeb
    # per flow: (boundary state, weight, filling degree)
    records: tuple[tuple[tuple[int, ...], int, int], ...]

    def by_state(self) -> dict[tuple[int, ...], list[tuple[int, int]]]:
        out: dict[tuple[int, ...], list[tuple[int, int]]] = {}
        for j, w, d in self.records:
            out.setdefault(j, []).append((w, d))
        return out


@lru_cache(maxsize=None)
def survey(signs: str) -> tuple[WebSurvey, ...]:
    out = []
    for rows, web in enumerate_basis(SignString(signs)):
        records = []
        for flow in enumerate_flows(web):
            j = boundary_state(web, flow)
            records.append((j, weight(web, flow), bkw_degree(iota(web, flow))[0]))
        out.append(WebSurvey(tableau=rows, web=web, records=tuple(records)))
    return tuple(out)


@lru_cache(maxsize=None)
def cellular_basis(signs: str):
    return enumerate_cellular_basis(signs)


def _payload(signs: str, **extra) -> dict:
    return {"signs": signs, **extra}


def check_roundtrip(signs: str):
    """grow(iota(u_f)) returns every web with flow unchanged; iota injective."""
    seen: dict[tuple, tuple] = {}
    for entry in survey(signs):
        for flow in enumerate_flows(entry.web):
            if not roundtrip_holds(entry.web, flow):
                return False, _payload(
                    signs,
                    word=str(entry.web.word),
                    flow=[sorted(h) for h in flow.moves],
                    reason="grow did not invert",
                )
            t = iota(entry.web, flow)
            key = (t.shape, t.rows)
            val = (entry.web.word, flow.moves)
            if seen.setdefault(key, val) != val:
                return False, _payload(
                    signs, word=str(entry.web.word), reason="iota not injective"
                )
    return True, None


def check_degree_duality(signs: str):
    """Filling degree equals minus the flow weight, flow by flow."""
    for entry in survey(signs):
        for j, w, d in entry.records:
            if d != -w:
                return False, _payload(
                    signs, word=str(entry.web.word), state=list(j), weight=w, degree=d
                )
    return True, None


def check_unitriangularity(signs: str):
    """Tensor coefficients: exactly 1 at the defining state, rest lower."""
    for entry in survey(signs):
        cf = canonical_flow(entry.web, entry.tableau)
        leading = boundary_state(entry.web, cf)
        expansion = tensor_expansion(entry.web)
        if expansion.get(leading) != monomial(0):
            return False, _payload(
                signs, word=str(entry.web.word), state=list(leading),
                coefficient=str(expansion.get(leading)),
            )
        for j in expansion:
            if j > leading:
                return False, _payload(
                    signs, word=str(entry.web.word), state=list(j),
                    reason="nonzero coefficient above the defining state",
                )
    return True, None


def check_total_length(signs: str):
    """All basis words over one boundary share their total length."""
    lengths = {entry.web.word.total_length for entry in survey(signs)}
    if len(lengths) > 1:
        return False, _payload(signs, total_lengths=sorted(lengths))
    return True, None


def check_bracket_symmetry(signs: str):
    """Closed brackets are symmetric under q -> 1/q and count flows at q=1."""
    entries = survey(signs)
    for a, b in itertools.product(entries, repeat=2):
        br = bracket(ClosedWeb(a.web, b.web))
        if br != br.bar():
            return False, _payload(signs, pair=[str(a.web.word), str(b.web.word)])
        matches = 0
        right = b.by_state()
        for j, ws in a.by_state().items():
            matches += len(ws) * len(right.get(j, []))
        if br(1) != matches:
            return False, _payload(
                signs, pair=[str(a.web.word), str(b.web.word)],
                bracket_at_one=br(1), flow_pairs=matches,
            )
    return True, None


def check_graded_dim(signs: str):
    """Sum of q^(deg+deg) over matched flow pairs is q^n times the bracket."""
    entries = survey(signs)
    n = len(signs)
    for a, b in itertools.product(entries, repeat=2):
        lhs = LaurentPoly()
        right = b.by_state()
        for j, recs in a.by_state().items():
            for _w1, d1 in recs:
                for _w2, d2 in right.get(j, []):
                    lhs = lhs + monomial(d1 + d2)
        rhs = bracket(ClosedWeb(a.web, b.web)).shift(n)
        if lhs != rhs:
            return False, _payload(
                signs, pair=[str(a.web.word), str(b.web.word)],
                graded_dim=str(lhs), shifted_bracket=str(rhs),
            )
    return True, None


def check_homogeneity(signs: str):
    """Every basis foam's degree is the sum of its two filling degrees."""
    for foam in cellular_basis(signs):
        want = bkw_degree(foam.top_tableau)[0] + bkw_degree(foam.bottom_tableau)[0]
        if foam.degree != want:
            return False, _payload(
                signs, shape=foam.shape.to_json(), degree=foam.degree, expected=want
            )
        if sum(g.degree for g in foam.word.generators) != foam.degree:
            return False, _payload(signs, shape=foam.shape.to_json(),
                                   reason="generator degrees do not sum")
    return True, None


def check_cellularity(signs: str):
    """Cell-datum properties: homogeneity, involution, index cardinality."""
    ok, ce = check_homogeneity(signs)
    if not ok:
        return ok, ce
    foams = cellular_basis(signs)
    for foam in foams:
        flipped = involution(foam)
        if flipped.degree != foam.degree:
            return False, _payload(signs, reason="involution changed a degree")
        if involution(flipped).word != foam.word:
            return False, _payload(signs, reason="involution is not involutive")
        fixed = flipped.key() == foam.key()
        if fixed != (foam.top_tableau == foam.bottom_tableau):
            return False, _payload(signs, reason="involution fixes a non-diagonal")
    entries = survey(signs)
    dim = 0
    for a, b in itertools.product(entries, repeat=2):
        right = b.by_state()
        for j, ws in a.by_state().items():
            dim += len(ws) * len(right.get(j, []))
    if len(foams) != dim:
        return False, _payload(signs, basis=len(foams), dimension=dim)
    return True, None


CHECKS = {
    "roundtrip": check_roundtrip,
    "degree": check_degree_duality,
    "unitriangular": check_unitriangularity,
    "total-length": check_total_length,
    "bracket-symmetry": check_bracket_symmetry,
    "graded-dim": check_graded_dim,
    "homogeneity": check_homogeneity,
    "cellular": check_cellularity,
}


def run_checks(names, signs_list, jobs: int = 1):
    """Run named checks over boundary strings; report per (check, signs).

    Work units are independent; with jobs > 1 they are evaluated in a
    thread pool and reassembled in order, so output is deterministic.
    """
    units = [(name, signs) for name in names for signs in signs_list]

    def run(unit):
        name, signs = unit
        ok, ce = CHECKS[name](signs)
        return {"check": name, "signs": signs, "ok": ok, "counterexample": ce}

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, units))
    return [run(u) for u in units]
