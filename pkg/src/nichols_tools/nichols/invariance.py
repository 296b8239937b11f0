# -*- coding: utf-8 -*-
"""Hilbert series invariants: component products and twist equivalence"""
import logging
import numpy as np
from nichols_tools.nichols.basis import NicholsBasis, build_basis
from nichols_tools.results import skipped, verdict

logger = logging.getLogger(__name__)


def truncated_product(series: list, length: int) -> list:
    """coefficients of the product of the given series, up to length terms"""
    product = np.ones(1, dtype=np.int64)
    for coefficients in series:
        product = np.convolve(product, np.array(coefficients, dtype=np.int64))[:length]
    values = [int(value) for value in product]
    return values + [0] * (length - len(values))


def component_bases(basis: NicholsBasis, build=build_basis) -> list:
    """(letters, basis) for every Dynkin component, each built to the same cutoff"""
    return [(letters, build(subspace, basis.cutoff, crosscheck_degree=0))
            for letters, subspace in basis.space.connected_components()]


def component_product_check(basis: NicholsBasis, build=build_basis):
    """Hilbert series of V equals the product of those of its components"""
    components = basis.space.connected_components()
    if len(components) < 2:
        return skipped('lemma41-components', 'space is connected')
    parts = component_bases(basis, build)
    length = basis.top_degree() + 1
    expected = truncated_product([part.hilbert() for _, part in parts], length)
    measured = basis.hilbert()
    witness = next((str(m) for m, (a, b) in enumerate(zip(expected, measured)) if a != b), '')
    return verdict('lemma41-components', expected == measured, 'Hilbert series differs from the component product',
                   witness, components=[list(letters) for letters, _ in parts])


def twist_invariance_check(basis: NicholsBasis, build=build_basis):
    """twist_symmetrize keeps every Hilbert coefficient through the cutoff"""
    twin = build(basis.space.twist_symmetrize(), basis.cutoff, crosscheck_degree=0)
    ours, theirs = basis.hilbert(), twin.hilbert()
    witness = next((str(m) for m, (a, b) in enumerate(zip(ours, theirs)) if a != b), '')
    same = ours == theirs and basis.terminated_at == twin.terminated_at
    if not witness and not same:
        witness = 'terminated_at'
    return verdict('twist-invariance', same, 'twisted space has a different Hilbert series', witness)
