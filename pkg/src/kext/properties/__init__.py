"""Property checks with their instance catalog, seeded generators and brute-force oracles."""
from .instances import CATALOG_VERSION, catalog, lookup
from .checks import CHECK_IDS, REGISTRY, PropertyReport, run_all, run_check
from .oracles import oracle_submodule_lattice

__all__ = ["CATALOG_VERSION", "CHECK_IDS", "REGISTRY", "PropertyReport", "catalog", "lookup",
           "oracle_submodule_lattice", "run_all", "run_check"]
