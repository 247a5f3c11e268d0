from fractions import Fraction as F

import pytest

from cantorlab import (
    CantorSet,
    GeneratorSequence,
    Lemma44Rule,
    Lemma45Rule,
    PairSpec,
    SequenceSet,
    SequenceSetSpec,
    generators_from_pair,
)


@pytest.fixture(scope="session")
def middle_thirds():
    return CantorSet(GeneratorSequence.constant(F(1, 3)), name="middle-thirds")


@pytest.fixture(scope="session")
def two_fifths():
    return CantorSet(GeneratorSequence.constant(F(2, 5)), name="two-fifths")


@pytest.fixture(scope="session")
def pair44():
    return PairSpec(F(1, 4), Lemma44Rule(F(1, 2)))


@pytest.fixture(scope="session")
def pair44_c(pair44):
    return CantorSet(generators_from_pair(pair44, "C"), name="pair44-C")


@pytest.fixture(scope="session")
def pair44_d(pair44):
    return CantorSet(generators_from_pair(pair44, "D"), name="pair44-D")


@pytest.fixture(scope="session")
def pair45():
    return PairSpec(F(1, 5), Lemma45Rule(F(3, 5), F(3, 5)))


@pytest.fixture(scope="session")
def f_one():
    return SequenceSet(SequenceSetSpec(F(1)))
