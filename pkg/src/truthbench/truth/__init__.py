from .audits import (
    AgreementReport, CorruptedLevel, CtReport, FaceRow, FacesReport, Violation, as_oracle,
    check_agreement, definable_set, faces_audit, piecewise_code, verify_ct,
)
from .store import load_tower, save_tower, tower_from_payload, tower_payload
from .tower import (
    DEFAULT_REACH, AtomicLevel, ExtendedLevel, Level, NotASentence, TruthTower, atomic_level,
    build_level, extend_level,
)


def t_most_membership(tower: TruthTower, phi):
    return tower.t_most_membership(phi)


__all__ = [name for name in dir() if not name.startswith("_")]
