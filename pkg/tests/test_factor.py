from __future__ import annotations

import pytest

from conftest import C3, F0
from fga import algebra as alg
from fga.core import isomorphic
from fga.errors import DomainError
from fga.explorer.factor import factorization_experiment


def _product(seq):
    out = seq[0]
    for x in seq[1:]:
        out = alg.times(out, x)
    return out


def _shapes(seqs):
    return sorted(tuple(x.q for x in seq) for seq in seqs)


class TestFactorization:
    def test_prime_chain(self):
        seqs = factorization_experiment(alg.nat(5))
        assert len(seqs) == 1 and len(seqs[0]) == 1 and isomorphic(seqs[0][0], alg.nat(5))

    def test_four(self):
        seqs = factorization_experiment(alg.nat(4))
        # F2*F2 and its mirror rev(F2)*rev(F2)
        assert _shapes(seqs) == [(2, 2), (2, 2)]
        assert any(all(isomorphic(x, alg.nat(2)) for x in seq) for seq in seqs)

    def test_six_both_orders(self):
        seqs = factorization_experiment(alg.nat(6))
        shapes = _shapes(seqs)
        assert (2, 3) in shapes and (3, 2) in shapes

    @pytest.mark.parametrize("n", [4, 6])
    def test_every_sequence_multiplies_back(self, n):
        a = alg.nat(n)
        for seq in factorization_experiment(a):
            assert isomorphic(_product(seq), a)
            assert all(alg.is_prime(x) for x in seq)

    def test_cycle(self):
        seqs = factorization_experiment(C3)
        assert all(isomorphic(_product(seq), C3) for seq in seqs)

    def test_trivial_rejected(self):
        with pytest.raises(DomainError):
            factorization_experiment(F0)
