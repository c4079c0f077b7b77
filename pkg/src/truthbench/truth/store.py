"""Tower artifacts.

The payload records the domain, the reach and the node budget, plus for each
level k the Gödel codes of the depth-k sentences within the budget that the
level accepts.  Loading rebuilds the tower and insists on the same table.
"""
from __future__ import annotations

from .. import artifacts
from ..errors import ArtifactError
from ..reports import to_plain, _from_plain
from ..syntax.coding import godel_code
from ..syntax.generate import SentenceSpace
from .tower import TruthTower


def level_table(tower: TruthTower, budget_nodes=None) -> dict:
    budget = tower.budget_nodes if budget_nodes is None else budget_nodes
    table = {str(k): [] for k in range(1, tower.reach + 1)}
    for phi in SentenceSpace(tower.structure.elements, tower.reach).sentences(budget):
        if tower.member(phi):
            table[str(phi.depth)].append(godel_code(phi))
    return {k: sorted(v) for k, v in table.items()}


def tower_payload(tower: TruthTower) -> dict:
    return {
        "domain": str(tower.structure.domain),
        "reach": tower.reach,
        "reach_note": "resource bound on constructed depth, not a logical cut",
        "budget_nodes": tower.budget_nodes,
        "levels": to_plain(level_table(tower)),
    }


def save_tower(tower: TruthTower, path):
    artifacts.write(path, "tower", tower_payload(tower))


def tower_from_payload(payload, verify=True) -> TruthTower:
    try:
        tower = TruthTower.build(payload["domain"], int(payload["reach"]), int(payload["budget_nodes"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ArtifactError(f"malformed tower payload: {exc}") from None
    if verify:
        recorded = _from_plain(dict[str, list[int]], payload.get("levels", {}))
        if recorded != level_table(tower):
            raise ArtifactError("recorded level table disagrees with the rebuilt tower")
    return tower


def load_tower(path, verify=True) -> TruthTower:
    return tower_from_payload(artifacts.read(path, "tower"), verify)
