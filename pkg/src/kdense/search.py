"""Exhaustive extremal searches over connected k*-dense graphs.

Each search enumerates one edge window with the degree floor ``k - 1`` and
then tests every edge count in the window; nothing assumes the feasible
counts form an interval.  Outside the enumeration guard a record falls back
to the certified construction value and is marked ``construction-only``.
"""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from math import comb
from typing import Any, Iterable

from .canon import canonical_form
from .constructions import (
    clique_chain,
    complement_construction,
    conjecture_value,
    max_edge_construction,
    max_edges_closed_form,
    min_edge_formula,
)
from .density import density_index
from .enumerate import BudgetExhausted, SearchConstraints, enumerate_graphs
from .graph import Graph

FILTERED_GUARD = 9
UNFILTERED_GUARD = 8
WITNESS_CAP = 32
CSV_HEADER = ["k", "n", "kind", "value", "method", "witness_g6", "nodes", "seconds"]


class GuardError(ValueError):
    """The request exceeds the exhaustive-search guard and was not forced."""


@dataclass(frozen=True)
class Budget:
    nodes: int | None = None
    seconds: float | None = None

    @classmethod
    def parse(cls, text: str | None) -> Budget:
        """``"50000"`` is a node budget, ``"30s"`` a time budget in seconds."""
        if not text:
            return cls()
        match = re.fullmatch(r"\s*(\d+(?:\.\d+)?)\s*(s|sec|seconds)?\s*", text)
        if not match:
            raise ValueError(f"bad budget {text!r}; use a node count or e.g. 30s")
        if match.group(2):
            return cls(seconds=float(match.group(1)))
        return cls(nodes=int(float(match.group(1))))


@dataclass
class ExtremalRecord:
    k: int
    n: int
    kind: str  # min | max | realization-set
    value: int | list[int] | None
    method: str  # exhaustive | construction-only
    witnesses: list[str] = field(default_factory=list)
    nodes: int = 0
    seconds: float = 0.0
    status: str = "ok"  # ok | inconclusive

    def value_text(self) -> str:
        if self.value is None:
            return "inconclusive"
        if isinstance(self.value, list):
            return " ".join(str(v) for v in self.value)
        return str(self.value)

    def to_json(self, timing: bool = False) -> dict[str, Any]:
        return {
            "k": self.k,
            "n": self.n,
            "kind": self.kind,
            "value": self.value,
            "method": self.method,
            "status": self.status,
            "witnesses": list(self.witnesses),
            "nodes": self.nodes,
            "seconds": round(self.seconds, 3) if timing else None,
        }

    def csv_row(self, timing: bool = False) -> list[str]:
        return [str(self.k), str(self.n), self.kind, self.value_text(), self.method,
                self.witnesses[0] if self.witnesses else "", str(self.nodes),
                f"{self.seconds:.3f}" if timing else ""]


def _check(k: int, n: int, force: bool, budget: Budget) -> int:
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    if n > FILTERED_GUARD and not force:
        raise GuardError(f"n={n} exceeds the exhaustive guard {FILTERED_GUARD}; "
                         "pass force with a budget to proceed")
    if force and n > FILTERED_GUARD and budget.nodes is None and budget.seconds is None:
        raise GuardError("forced searches beyond the guard need an explicit budget")
    return max(n, FILTERED_GUARD)


def _dense_by_edges(k: int, n: int, lo: int, hi: int, budget: Budget,
                    max_n: int) -> tuple[dict[int, list[Graph]], int, float]:
    c = SearchConstraints(n, m_lo=lo, m_hi=hi, k=k, connected=True,
                          max_nodes=budget.nodes, max_seconds=budget.seconds)
    res = enumerate_graphs(c, max_n=max_n)
    out: dict[int, list[Graph]] = {}
    for g in res.graphs:
        if density_index(g) == k:
            out.setdefault(g.m, []).append(g)
    return out, res.nodes, res.seconds


def _witness_forms(graphs: Iterable[Graph]) -> list[str]:
    return sorted(canonical_form(g) for g in graphs)[:WITNESS_CAP]


def min_search_window(k: int, n: int) -> tuple[int, int]:
    """Degree-floor lower bound up to the clique-chain upper bound."""
    lo = max(-(-n * (k - 1) // 2), n - 1)
    return lo, clique_chain(k, n).graph.m


def search_min_edges(k: int, n: int, budget: Budget = Budget(), force: bool = False) -> ExtremalRecord:
    """e(k, n) by ascending sweep over every edge count in the window."""
    max_n = _check(k, n, force, budget)
    lo, hi = min_search_window(k, n)
    try:
        found, nodes, secs = _dense_by_edges(k, n, lo, hi, budget, max_n)
    except BudgetExhausted as exc:
        return ExtremalRecord(k, n, "min", None, "exhaustive", [], exc.nodes, 0.0, "inconclusive")
    for m in range(lo, hi + 1):
        if m in found:
            return ExtremalRecord(k, n, "min", m, "exhaustive", _witness_forms(found[m]), nodes, secs)
    raise AssertionError(f"clique chain with {hi} edges not found by the enumerator")


def search_max_edges(k: int, n: int, budget: Budget = Budget(), force: bool = False) -> ExtremalRecord:
    """E(k, n) by descending sweep from C(n, 2) to the construction value."""
    max_n = _check(k, n, force, budget)
    lo, hi = max_edge_construction(k, n).graph.m, comb(n, 2)
    try:
        found, nodes, secs = _dense_by_edges(k, n, lo, hi, budget, max_n)
    except BudgetExhausted as exc:
        return ExtremalRecord(k, n, "max", None, "exhaustive", [], exc.nodes, 0.0, "inconclusive")
    for m in range(hi, lo - 1, -1):
        if m in found:
            return ExtremalRecord(k, n, "max", m, "exhaustive", _witness_forms(found[m]), nodes, secs)
    raise AssertionError(f"max-edge construction with {lo} edges not found by the enumerator")


def realization_scan(k: int, n: int, budget: Budget = Budget(), force: bool = False) -> ExtremalRecord:
    """Every edge count of a connected k*-dense graph on n vertices.

    One witness per count, in ascending count order.
    """
    max_n = _check(k, n, force, budget)
    lo = max(-(-n * (k - 1) // 2), n - 1)
    try:
        found, nodes, secs = _dense_by_edges(k, n, lo, comb(n, 2), budget, max_n)
    except BudgetExhausted as exc:
        return ExtremalRecord(k, n, "realization-set", None, "exhaustive", [], exc.nodes, 0.0,
                              "inconclusive")
    values = sorted(found)
    witnesses = [_witness_forms(found[m])[0] for m in values]
    return ExtremalRecord(k, n, "realization-set", values, "exhaustive", witnesses, nodes, secs)


def gaps(record: ExtremalRecord) -> list[int]:
    """Counts missing between the smallest and largest realised count."""
    if not record.value:
        return []
    vals = record.value
    return sorted(set(range(vals[0], vals[-1] + 1)) - set(vals))


@dataclass
class ConjectureRow:
    k: int
    n: int
    exhaustive: int | None
    conjecture: int
    verdict: str  # match | mismatch | inconclusive
    witness: str | None
    nodes: int

    def to_json(self) -> dict[str, Any]:
        return {"k": self.k, "n": self.n, "exhaustive": self.exhaustive,
                "conjecture": self.conjecture, "verdict": self.verdict,
                "witness": self.witness, "nodes": self.nodes}


def conjecture_check(ks: Iterable[int], ns: Iterable[int], budget: Budget = Budget(),
                     force: bool = False) -> list[ConjectureRow]:
    """Exhaustive e(k, n) against the clique-chain prediction for each feasible pair."""
    rows = []
    ns = list(ns)
    for k in ks:
        for n in ns:
            if n < k:
                continue
            pred = conjecture_value(k, n)
            rec = search_min_edges(k, n, budget, force)
            if rec.value is None:
                rows.append(ConjectureRow(k, n, None, pred, "inconclusive", None, rec.nodes))
                continue
            verdict = "match" if rec.value == pred else "mismatch"
            rows.append(ConjectureRow(k, n, rec.value, pred, verdict, rec.witnesses[0], rec.nodes))
    return rows


def _fallback(kind: str, k: int, n: int) -> ExtremalRecord:
    # Outside the guard: report the certified construction value as a bound.
    w = clique_chain(k, n) if kind == "min" else max_edge_construction(k, n)
    return ExtremalRecord(k, n, kind, w.graph.m, "construction-only", [canonical_form(w.graph)])


def build_tables(ks: Iterable[int], ns: Iterable[int], kinds: Iterable[str] = ("min", "max"),
                 budget: Budget = Budget(), exhaustive_limit: int = FILTERED_GUARD) -> list[ExtremalRecord]:
    """Records for every feasible (k, n) and kind, in (k, n, kind) order.

    Pairs with ``n > exhaustive_limit`` get construction-only bounds.
    """
    search = {"min": search_min_edges, "max": search_max_edges, "realization-set": realization_scan}
    out = []
    ns = list(ns)
    kinds = list(kinds)
    for k in ks:
        for n in ns:
            if n < k:
                continue
            for kind in kinds:
                if n <= exhaustive_limit:
                    out.append(search[kind](k, n, budget, force=n > FILTERED_GUARD))
                elif kind != "realization-set":
                    out.append(_fallback(kind, k, n))
    return out


def records_csv(records: Iterable[ExtremalRecord], timing: bool = False) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row(timing))
    return buf.getvalue()


def records_json(records: Iterable[ExtremalRecord], timing: bool = False) -> str:
    return json.dumps({"records": [r.to_json(timing) for r in records]}, indent=2, sort_keys=True) + "\n"


def closed_form_rows(ks: Iterable[int], ns: Iterable[int]) -> list[dict[str, Any]]:
    """Predicted e and E for comparison with exhaustive records."""
    rows = []
    ns = list(ns)
    for k in ks:
        for n in ns:
            if n >= k:
                f = min_edge_formula(k, n)
                rows.append({"k": k, "n": n, "e": f.value, "e_status": f.status,
                             "E": max_edges_closed_form(k, n)})
    return rows


def upper_bound_table(pairs: Iterable[tuple[int, int]]) -> list[dict[str, Any]]:
    """Clique-chain count against complement count for (k, n) pairs.

    Both graphs are built and certified; pairs where the complement recipe
    does not apply (n - k < 2) report ``None`` for it.
    """
    rows = []
    for k, n in pairs:
        chain = clique_chain(k, n).graph.m
        comp = complement_construction(k, n).graph.m if n - k >= 2 else None
        if comp is None or chain == comp:
            smaller = "tie" if comp is not None else "clique_chain"
        else:
            smaller = "clique_chain" if chain < comp else "complement"
        rows.append({"k": k, "n": n, "clique_chain": chain, "complement": comp, "smaller": smaller})
    return rows
