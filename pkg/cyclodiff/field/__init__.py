from .context import (
    NO_INDEX,
    PrimeContext,
    build_context,
    find_primitive_root,
    is_prime,
    is_primitive_root,
    load_or_build,
    rebase,
    residue_class,
)

__all__ = [
    "NO_INDEX",
    "PrimeContext",
    "build_context",
    "find_primitive_root",
    "is_prime",
    "is_primitive_root",
    "load_or_build",
    "rebase",
    "residue_class",
]
