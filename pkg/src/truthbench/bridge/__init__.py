from .corpus import (
    TableReport, TransportReport, bounded_exists, bounded_forall, delta0_corpus, pa_transport,
    region_max_value, validate_table, zf_transport,
)
from .table import Definition, TranslationTable, default_table, parse_table
from .translate import (
    CONST_ORDINALS, kpair, nat_to_ordinal, ordinal_domain, ordinal_set, ordinal_value, pa_to_zf,
    recursion_function, zf_to_pa,
)

__all__ = [name for name in dir() if not name.startswith("_")]
