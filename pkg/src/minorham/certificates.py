"""JSON certificates for Hamiltonicity and minor questions, with checkers.

Positive answers carry a witness (a cycle, a model) that
:func:`check_certificate` verifies directly against the graph.  Negative
answers carry either a toughness cut, which is a proof, or the node count and
transcript hash of the exhaustive search, which a rerun reproduces.
"""

from __future__ import annotations

import json

from .canon import canonical_code
from .g6 import from_graph6, to_graph6
from .graph import Graph, connected_components
from .hamilton import Cycle, hamilton_search, find_tough_cut
from .minors import StandardModel, search_k2t, verify_model

SCHEMA = 1


def _base(kind: str, g: Graph) -> dict:
    return {"schema": SCHEMA, "kind": kind, "graph": to_graph6(g).decode()}


def hamilton_certificate(g: Graph, tough_cut_size: int = 0) -> dict:
    """A HamiltonCycle certificate, else a ToughnessCut (searched up to
    ``tough_cut_size``), else an ExhaustionProof."""
    cycle, exhaustion = hamilton_search(g)
    if cycle is not None:
        return {**_base("HamiltonCycle", g), "cycle": list(cycle.vertices)}
    if tough_cut_size:
        cut = find_tough_cut(g, tough_cut_size)
        if cut is not None:
            return {**_base("ToughnessCut", g), "cut": sorted(cut.cut), "components": cut.component_count}
    return {**_base("ExhaustionProof", g), "code": canonical_code(g).decode(),
            "nodes": exhaustion.nodes, "transcript": exhaustion.transcript}


def minor_certificate(g: Graph, t: int) -> dict:
    res = search_k2t(g, t)
    if res.model is not None:
        return {**_base("MinorModel", g), "t": t, "model": res.model.to_json()}
    return {**_base("MinorFreeExhaustion", g), "t": t, "nodes": res.nodes}


def check_certificate(cert: dict | str) -> bool:
    """Independently validate a certificate of any kind."""
    if isinstance(cert, str):
        cert = json.loads(cert)
    if cert.get("schema") != SCHEMA:
        return False
    g = from_graph6(cert["graph"])
    kind = cert["kind"]
    if kind == "HamiltonCycle":
        cyc = Cycle(tuple(cert["cycle"]))
        return len(cyc) == g.n and cyc.is_valid(g)
    if kind == "ToughnessCut":
        cut = set(cert["cut"])
        k = len(connected_components(g, cut))
        return bool(cut) and k > len(cut) and k == cert["components"]
    if kind == "ExhaustionProof":
        if canonical_code(g).decode() != cert["code"]:
            return False
        cycle, ex = hamilton_search(g)
        return cycle is None and (ex.nodes, ex.transcript) == (cert["nodes"], cert["transcript"])
    if kind == "MinorModel":
        model = StandardModel.from_json(cert["model"])
        return model.t >= cert["t"] and verify_model(g, model)
    if kind == "MinorFreeExhaustion":
        res = search_k2t(g, cert["t"])
        return res.model is None and res.nodes == cert["nodes"]
    return False
