"""Scheme generators, reflection towers and internal audits."""
from .audit import (
    FALSUM, InstanceVerdict, InternalAudit, ProbeReport, atomic_facts, audit_internal, consistency_probe,
    true_axiom_battery,
)
from .generators import (
    GENERATORS, SchemeInstance, epsilon_induction_instance, induction_instance, replacement_instance,
)
from .reflection import (
    ReflectionReport, ReflectionRow, audit_reflection, prov_symbol, ref_tower, reflection_instance,
    reflection_instances,
)
from .theory import (
    EIND_BATTERY, IDENTITY, REPL_BATTERY, SAMPLE_ARITH, SAMPLE_BATTERY, UNSOUND, TheorySpec,
    battery_from_payload, battery_payload, load_battery, load_theory, theory_from_payload, theory_payload,
)

__all__ = [
    "EIND_BATTERY", "FALSUM", "GENERATORS", "IDENTITY", "REPL_BATTERY", "SAMPLE_ARITH", "SAMPLE_BATTERY",
    "UNSOUND", "InstanceVerdict", "InternalAudit", "ProbeReport", "ReflectionReport", "ReflectionRow",
    "SchemeInstance", "TheorySpec", "atomic_facts", "audit_internal", "audit_reflection",
    "battery_from_payload", "battery_payload", "consistency_probe", "epsilon_induction_instance",
    "induction_instance", "load_battery", "load_theory", "prov_symbol", "ref_tower", "reflection_instance",
    "reflection_instances", "replacement_instance", "theory_from_payload", "theory_payload",
    "true_axiom_battery",
]
