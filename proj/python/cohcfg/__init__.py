from ._cohcfg import (
    Configuration,
    automorphism_order,
    base_number,
    build,
    claims,
    closure,
    extend,
    families,
    from_text,
    indistinguishing_number,
    m_t,
    matching_graph,
    partly_regular,
    pseudocyclic,
    validate,
    verify,
)

__all__ = [
    "Configuration",
    "automorphism_order",
    "base_number",
    "build",
    "claims",
    "closure",
    "extend",
    "families",
    "from_text",
    "indistinguishing_number",
    "m_t",
    "matching_graph",
    "partly_regular",
    "pseudocyclic",
    "validate",
    "verify",
]
