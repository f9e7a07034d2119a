"""Exact traces of Hecke operators on spaces of modular forms."""

from ._hecke import (
    IntegralityError,
    PreconditionError,
    __version__,
    characters,
    engine_version,
    genus_x0,
    h0,
    hurwitz,
    selfcheck,
    trace,
    trace_al,
    trace_form,
    trace_gamma1,
    trace_m_plus_s,
)

__all__ = [
    "IntegralityError",
    "PreconditionError",
    "characters",
    "engine_version",
    "genus_x0",
    "h0",
    "hurwitz",
    "selfcheck",
    "trace",
    "trace_al",
    "trace_form",
    "trace_gamma1",
    "trace_m_plus_s",
]
