# reports.py
"""
Matroid input documents and the JSON reports produced by the CLI and the
HTTP routes.

A matroid document is a JSON object with exactly one of
  {"n": 6, "bases": [[0, 1, 2], ...]}
  {"n": 4, "circuits": [[0, 1, 2, 3]]}
  {"graph": {"vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}}
Indices are 0-based, each subset strictly increasing.

Reports are plain dicts, dumped with sorted keys; Fractions become strings.
Nothing time-dependent goes into a report, so identical inputs give
byte-identical output.
"""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction

from complexes import (
    BROKEN_CIRCUIT,
    INDEPENDENCE,
    check_h_vectors,
    complex_for,
    f_vector,
    g_vector,
    independence_complex,
)
from config import COUNTEREXAMPLE_TRIALS, DEFAULT_BOUND, DEFAULT_SEED, DEFAULT_TRIALS
from errors import ParseError
from gelement import counterexample_m_s, draw_trial, g_element_search, omega_quotient_dims
from facering import QuotientRing, hilbert_check
from macaulay import check_h_inequalities, expand, is_o_sequence, pseudopower
from matroid import (
    ElementOrder,
    check_bases,
    check_circuits,
    coloops,
    components,
    from_bases,
    from_circuits,
    from_graph,
    loops,
    series_classes,
    strip_coloops,
)

logger = logging.getLogger(__name__)

TARGETS = {"ind": INDEPENDENCE, "bc": BROKEN_CIRCUIT}


# ---------- Matroid documents ----------

@dataclass(frozen=True)
class MatroidFile:
    kind: str
    n: int | None = None
    family: tuple = ()
    vertices: int | None = None
    edges: tuple = ()


def _subset_list(value, n, what):
    if not isinstance(value, list):
        raise ParseError(f"{what} must be a list of index lists")
    family = []
    for subset in value:
        if not isinstance(subset, list) or not all(isinstance(e, int) and not isinstance(e, bool) for e in subset):
            raise ParseError(f"{what} entry {subset!r} is not a list of integers")
        if any(a >= b for a, b in zip(subset, subset[1:])):
            raise ParseError(f"{what} entry {subset} is not strictly increasing")
        if any(not 0 <= e < n for e in subset):
            raise ParseError(f"{what} entry {subset} has an index outside 0..{n - 1}")
        family.append(tuple(subset))
    return tuple(family)


def parse_matroid(data):
    if not isinstance(data, dict):
        raise ParseError("matroid document must be a JSON object")
    present = [key for key in ("bases", "circuits", "graph") if key in data]
    if len(present) != 1:
        raise ParseError("matroid document needs exactly one of bases, circuits, graph")
    kind = present[0]

    if kind == "graph":
        graph = data["graph"]
        if not isinstance(graph, dict) or not isinstance(graph.get("vertices"), int):
            raise ParseError("graph needs an integer vertex count")
        vertices = graph["vertices"]
        edges = graph.get("edges", [])
        if not isinstance(edges, list) or not all(
            isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e) for e in edges
        ):
            raise ParseError("graph edges must be a list of vertex pairs")
        for u, v in edges:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise ParseError(f"edge ({u}, {v}) has an endpoint outside 0..{vertices - 1}")
        return MatroidFile("graph", vertices=vertices, edges=tuple(tuple(e) for e in edges))

    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError(f"{kind} documents need a nonnegative integer n")
    return MatroidFile(kind, n=n, family=_subset_list(data[kind], n, kind))


def parse_matroid_text(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc.msg} at line {exc.lineno}") from exc
    return parse_matroid(data)


def load_matroid_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_matroid_text(text)


def build_matroid(doc):
    if doc.kind == "bases":
        return from_bases(doc.n, doc.family)
    if doc.kind == "circuits":
        return from_circuits(doc.n, doc.family)
    return from_graph(doc.vertices, doc.edges)


def serialize_matroid(m):
    return json.dumps({"n": m.n, "bases": [list(b) for b in m.bases]}, sort_keys=True)


def parse_order(value, n):
    """`3,0,1,2` (least first) or a list; None or "natural" gives the identity."""
    if value is None or value == "natural":
        return ElementOrder.natural(n)
    if isinstance(value, str):
        try:
            value = [int(part) for part in value.split(",")]
        except ValueError as exc:
            raise ParseError(f"order {value!r} is not a comma-separated list of integers") from exc
    if len(value) != n:
        raise ParseError(f"order lists {len(value)} elements, matroid has {n}")
    return ElementOrder(tuple(value))


def parse_target(value):
    if value in TARGETS:
        return TARGETS[value]
    if value in TARGETS.values():
        return value
    raise ParseError(f"unknown target {value!r}; use ind or bc")


# ---------- Report assembly ----------

def plain(value):
    """Fractions to strings, tuples to lists, recursively."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [plain(v) for v in value]
    return value


def dump_report(report):
    return json.dumps(plain(report), sort_keys=True, indent=2) + "\n"


def matroid_summary(m):
    return {
        "n": m.n,
        "rank": m.rank,
        "bases": len(m.bases),
        "loops": list(loops(m)),
        "coloops": list(coloops(m)),
        "components": components(m),
        "series_classes": [list(c) for c in series_classes(m)],
    }


def complex_section(m, target, order=None):
    c, h = check_h_vectors(m, target, order)
    r = h.top_degree
    return {
        "type": target,
        "order": list(order.sequence) if order else None,
        "vertices": c.n_vertices,
        "facets": [list(f) for f in c.facets],
        "f_vector": list(f_vector(c)),
        "h_vector": list(h.entries),
        "top_degree": r,
        "g_vector": list(g_vector(h, r)),
        "inequalities": check_h_inequalities(h.entries, r).to_dict(),
        "o_sequence": is_o_sequence(h.trimmed()).to_dict(),
    }


def _status(ok):
    return "ok" if ok else "alert"


def analyze_report(m, target=INDEPENDENCE, order=None):
    if target == BROKEN_CIRCUIT:
        order = order or ElementOrder.natural(m.n)
    section = complex_section(m, target, order)
    ok = section["o_sequence"]["ok"]
    # coloop-free independence complexes carry a g-element, so all three families must hold
    if target == INDEPENDENCE and not coloops(m):
        ok = ok and all(section["inequalities"][k] for k in ("monotone", "symmetric_bound", "g_growth"))
    return {
        "command": "analyze",
        "matroid": matroid_summary(m),
        "complex": section,
        "status": _status(ok),
    }


def gcheck_report(m, seed=DEFAULT_SEED, bound=DEFAULT_BOUND, trials=DEFAULT_TRIALS, exact=False, strip=False):
    stripped = list(coloops(m)) if strip else []
    if strip:
        m = strip_coloops(m)
    witness = g_element_search(m, trials=trials, bound=bound, seed=seed, exact=exact)

    c = independence_complex(m)
    section = complex_section(m, INDEPENDENCE)
    r = section["top_degree"]
    # the quotient by the witness has dimensions g_i below r/2
    ring = QuotientRing(c, witness.forms)
    half = (r - 1) // 2
    dims = list(omega_quotient_dims(c, witness.forms, witness.omega, half, ring=ring))
    g = section["g_vector"][: half + 1]
    omega_check = {"dims": dims, "g_vector": g, "match": dims == g, "o_sequence": is_o_sequence(dims).to_dict()}

    ok = section["inequalities"]["monotone"] and section["inequalities"]["symmetric_bound"]
    ok = ok and section["inequalities"]["g_growth"] and omega_check["match"] and omega_check["o_sequence"]["ok"]
    return {
        "command": "gcheck",
        "matroid": matroid_summary(m),
        "stripped_coloops": stripped,
        "complex": section,
        "witness": witness.to_dict(),
        "quotient_by_omega": omega_check,
        "seed": seed,
        "bound": bound,
        "trials": trials,
        "arithmetic": witness.arithmetic,
        "status": _status(ok),
    }


def hilbert_report(m, target=INDEPENDENCE, seed=DEFAULT_SEED, bound=DEFAULT_BOUND, order=None, exact=True):
    if target == BROKEN_CIRCUIT:
        order = order or ElementOrder.natural(m.n)
    section = complex_section(m, target, order)
    c = complex_for(m, target, order)
    forms, attempts, modulus = draw_trial(c, seed, 0, bound, exact)
    table = hilbert_check(m, target, forms, order=order, modulus=modulus)
    return {
        "command": "hilbert",
        "matroid": matroid_summary(m),
        "complex": {"type": target, "h_vector": section["h_vector"]},
        "forms": forms.to_dict(),
        "lsop_attempts": attempts,
        "table": table.to_dict(),
        "seed": seed,
        "bound": bound,
        "arithmetic": "exact" if modulus is None else f"mod {modulus}",
        "status": _status(table.ok),
    }


def validate_report(doc):
    if doc.kind == "bases" and not doc.family:
        violation = {"reason": "basis family is empty"}
    elif doc.kind == "bases":
        violation = check_bases(tuple(sorted(set(doc.family))))
    elif doc.kind == "circuits":
        violation = check_circuits(doc.n, doc.family)
    else:
        violation = None
    report = {"command": "validate", "kind": doc.kind, "valid": violation is None, "witness": violation}
    if violation is None:
        report["matroid"] = matroid_summary(build_matroid(doc))
    report["status"] = "ok"
    return report


def counterexample_report(s=5, order=None, trials=COUNTEREXAMPLE_TRIALS, bound=DEFAULT_BOUND, seed=DEFAULT_SEED):
    result = counterexample_m_s(s=s, order=order, trials=trials, bound=bound, seed=seed)
    return {
        "command": "counterexample",
        "counterexample": result.to_dict(),
        "seed": seed,
        "bound": bound,
        "trials": len(result.trials),
        "arithmetic": "exact",
        "status": _status(not result.alert),
    }


def macaulay_report(j, i):
    return {
        "command": "macaulay",
        "expansion": expand(j, i).to_dict(),
        "pseudopower": pseudopower(j, i),
        "status": "ok",
    }
