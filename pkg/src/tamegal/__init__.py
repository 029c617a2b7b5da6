"""Exact finite models for tame Galois module structure.

Modules: intlin (integer linear algebra), abelian (groups, characters,
actions), cyclo (cyclotomic fields), resolvend (group rings and resolvends),
stickelberger (pairing, ker(det), transpose), cohomology (H^2, extensions,
tame models, basic diagram), ideles (local tame data and idele identities),
scenario/suites/cli (the scenario driver).
"""
__version__ = "0.1.0"
