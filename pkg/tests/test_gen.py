import random

import pytest

from unigraph.decomp import decompose
from unigraph.errors import Infeasible
from unigraph.gen import (
    GenSpec,
    components_of_order,
    compose_types,
    generate,
)
from unigraph.unitype import Base, is_unigraph


class TestFeasibility:
    def test_forced_c5(self):
        comps = generate(GenSpec(n=5, k=1, allowed=frozenset({Base.C5})))
        assert [c.tag() for c in comps] == ["c5"]

    def test_single_vertex(self):
        comps = generate(GenSpec(n=1, k=1))
        assert [c.tag() for c in comps] == ["k1"]

    @pytest.mark.parametrize("n,k", [(2, 1), (3, 1), (0, 1), (5, 0), (4, 2), (2, 6)])
    def test_infeasible(self, n, k):
        with pytest.raises(Infeasible):
            generate(GenSpec(n=n, k=k))

    def test_infeasible_message_names_bound(self):
        with pytest.raises(Infeasible, match="4 vertices"):
            generate(GenSpec(n=2, k=1))
        with pytest.raises(Infeasible, match="at least 1"):
            generate(GenSpec(n=5, k=0))


class TestDeterminism:
    def test_same_seed_same_draw(self):
        a = generate(GenSpec(n=40, k=5, seed=123))
        b = generate(GenSpec(n=40, k=5, seed=123))
        assert a == b

    def test_different_seeds_vary(self):
        draws = {tuple(c.tag() for c in generate(GenSpec(n=40, k=5, seed=s))) for s in range(20)}
        assert len(draws) > 5


class TestSoundness:
    def test_thousand_draws_round_trip(self):
        rng = random.Random(7)
        for trial in range(1000):
            n = rng.randint(1, 30)
            feasible = [k for k in range(1, n + 1) if n - k == 0 or n - k >= 3]
            k = rng.choice(feasible)
            comps = generate(GenSpec(n=n, k=k, seed=trial))
            assert sum(c.order for c in comps) == n
            seq = compose_types(comps)
            d, r = is_unigraph(seq)
            assert r.is_unigraph
            assert len(d.components) + 1 == k
            assert [t.tag() for t in r.component_types] == [c.tag() for c in comps]

    def test_component_count(self):
        for seed in range(50):
            comps = generate(GenSpec(n=60, k=7, seed=seed))
            seq = compose_types(comps)
            d = decompose(seq)
            assert len(d.components) + 1 == 7

    def test_allowed_types_respected(self):
        allowed = frozenset({Base.K1, Base.S1, Base.SPQ})
        for seed in range(30):
            comps = generate(GenSpec(n=24, k=4, seed=seed, allowed=allowed))
            assert all(c.base in allowed for c in comps)

    def test_large_orders_use_structured_sampler(self):
        comps = generate(GenSpec(n=10**5, k=3, seed=5))
        seq = compose_types(comps)
        d, r = is_unigraph(seq)
        assert r.is_unigraph and len(d.components) + 1 == 3

    def test_distinct_singletons_flag(self):
        for seed in range(40):
            comps = generate(
                GenSpec(n=12, k=6, seed=seed, distinct_singletons=True)
            )
            for a, b in zip(comps, comps[1:]):
                if a.order == 1 and b.order == 1:
                    assert a.base != b.base


class TestEnumeration:
    def test_order_one(self):
        tags = [t.tag() for t in components_of_order(1, split_only=True)]
        assert tags == ["k1", "s1"]

    def test_no_order_two_or_three(self):
        for order in (2, 3):
            assert components_of_order(order, split_only=False) == ()

    def test_order_four(self):
        tags = {t.tag() for t in components_of_order(4, split_only=False)}
        assert tags == {"mk2(m=2)", "complement:mk2(m=2)", "spq(p=1,q=2)"}

    def test_order_five_contains_c5_and_tree(self):
        tags = {t.tag() for t in components_of_order(5, split_only=False)}
        assert "c5" in tags and "s2(2,1,1,1)" in tags
        assert "u2(m=1,l=2)" in tags
