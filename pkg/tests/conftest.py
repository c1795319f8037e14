"""Shared fixtures: a deterministic corpus of random reduction graphs."""

import dataclasses

import pytest

from redjumps import GeneratedGraph, JumpSpectrum, ReductionGraph
from redjumps import compute_jumps, minimize, random_instance

CORPUS_SIZE = 550


@dataclasses.dataclass(frozen=True)
class CorpusItem:
    seed: int
    inst: GeneratedGraph
    spectrum: JumpSpectrum
    base_spectrum: JumpSpectrum
    minimized: ReductionGraph


@pytest.fixture(scope="session")
def corpus():
    base_spectra = {}
    items = []
    for seed in range(CORPUS_SIZE):
        inst = random_instance(seed, moves=seed % 16)
        if inst.base_name not in base_spectra:
            base_spectra[inst.base_name] = compute_jumps(inst.base)
        items.append(CorpusItem(
            seed=seed,
            inst=inst,
            spectrum=compute_jumps(inst.graph),
            base_spectrum=base_spectra[inst.base_name],
            minimized=minimize(inst.graph),
        ))
    return items
