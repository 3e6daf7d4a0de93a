from numrad.base.bound import BaseBound
from numrad.base.commutator_bound import CommutatorBound
from numrad.base.family_bound import FamilyBound, PairBound
from numrad.base.single_bound import SingleMatrixBound

__all__ = ["BaseBound", "CommutatorBound", "FamilyBound", "PairBound", "SingleMatrixBound"]
