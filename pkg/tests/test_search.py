"""Exact redundancy search: requirements, backtracking, witnesses."""

import itertools
import random

import pytest

from fcckit.errors import BudgetExceeded, DimensionError
from fcckit.fcc import FccScheme, FunctionTable, builtin_function, verify_fcc
from fcckit.search import RequirementSet, exact_redundancy, pair_requirement
from fcckit.vectors import hamming_distance, iter_messages


def brute_force_min_r(f: FunctionTable, t: int, r_cap: int = 4) -> int:
    """Oracle: try every parity map p: F_q^k -> F_q^r, no symmetry breaking."""
    msgs = list(iter_messages(f.q, f.k))
    demands = [
        (i, j, 2 * t + 1 - hamming_distance(msgs[i], msgs[j]))
        for i, j in itertools.combinations(range(len(msgs)), 2)
        if f.values[i] != f.values[j]
        and 2 * t + 1 - hamming_distance(msgs[i], msgs[j]) > 0
    ]
    for r in range(r_cap + 1):
        vectors = list(itertools.product(range(f.q), repeat=r))
        for assignment in itertools.product(vectors, repeat=len(msgs)):
            if all(
                hamming_distance(assignment[i], assignment[j]) >= need
                for i, j, need in demands
            ):
                return r
    raise AssertionError(f"no assignment up to r = {r_cap}")


class TestPairRequirement:
    def test_adjacent_pair_needs_2t(self):
        f = builtin_function("or", 2, 3)
        assert pair_requirement((0, 0, 0), (1, 0, 0), f, 1) == 2

    def test_equal_labels_need_nothing(self):
        f = builtin_function("or", 2, 3)
        assert pair_requirement((1, 0, 0), (1, 1, 1), f, 1) == 0

    def test_far_pair_needs_nothing(self):
        f = builtin_function("or", 2, 3)
        assert pair_requirement((0, 0, 0), (1, 1, 1), f, 1) == 0

    def test_identical_messages_rejected(self):
        f = builtin_function("or", 2, 3)
        with pytest.raises(DimensionError):
            pair_requirement((1, 0, 0), (1, 0, 0), f, 1)

    def test_requirement_set_shape(self):
        f = builtin_function("or", 2, 2)
        reqs = RequirementSet.build(f, 1)
        assert reqs.d_max == 2
        # all demands reference earlier messages only
        for i, row in enumerate(reqs.demands):
            for j, need in row:
                assert j < i
                assert 1 <= need <= 2 * reqs.t

    def test_maximal_demand_exactly_for_adjacent_pairs(self):
        f = builtin_function("identity", 3, 2)
        t = 2
        reqs = RequirementSet.build(f, t)
        for i, row in enumerate(reqs.demands):
            for j, need in row:
                d = hamming_distance(reqs.order[i], reqs.order[j])
                assert need == 2 * t + 1 - d
                assert (need == 2 * t) == (d == 1)


class TestExactRedundancy:
    def test_or_functions_reach_the_2t_floor(self):
        assert exact_redundancy(builtin_function("or", 2, 2), 1).r == 2
        assert exact_redundancy(builtin_function("or", 2, 3), 1).r == 2
        assert exact_redundancy(builtin_function("or", 2, 2), 2).r == 4

    def test_constant_needs_nothing(self):
        res = exact_redundancy(builtin_function("constant", 2, 3), 2)
        assert res.r == 0
        assert res.witness == ((),) * 8

    def test_identity_2_2_needs_three(self):
        res = exact_redundancy(builtin_function("identity", 2, 2), 1)
        assert res.r == 3
        assert res.infeasible == (2,)
        assert brute_force_min_r(builtin_function("identity", 2, 2), 1) == 3

    def test_t_zero_is_free(self):
        assert exact_redundancy(builtin_function("identity", 2, 2), 0).r == 0

    def test_witness_always_verifies(self):
        cases = [
            (builtin_function("or", 2, 3), 1),
            (builtin_function("identity", 2, 2), 1),
            (builtin_function("hamming_weight", 2, 3), 1),
            (builtin_function("or", 3, 2), 1),
        ]
        for f, t in cases:
            res = exact_redundancy(f, t)
            scheme = res.scheme()
            assert isinstance(scheme, FccScheme)
            assert verify_fcc(scheme, f, t).ok

    def test_matches_unrestricted_brute_force_q2_k2(self):
        # symmetry breaking must not change the answer for any labelling
        for mask in range(1, 15):
            values = tuple((mask >> i) & 1 for i in range(4))
            f = FunctionTable(2, 2, values)
            assert exact_redundancy(f, 1).r == brute_force_min_r(f, 1)

    def test_lower_bound_conformance_sampled(self):
        rng = random.Random(2718)
        for _ in range(40):
            mask = rng.randrange(1, 255)
            values = tuple((mask >> i) & 1 for i in range(8))
            f = FunctionTable(2, 3, values)
            if f.image_size >= 2:
                assert exact_redundancy(f, 1).r >= 2

    def test_monotone_in_t(self):
        f_or = builtin_function("or", 2, 2)
        f_id = builtin_function("identity", 2, 2)
        for f in (f_or, f_id):
            rs = [exact_redundancy(f, t).r for t in range(4)]
            assert rs == sorted(rs)

    def test_mds_region_matches_2t(self):
        rng = random.Random(31337)
        fns = [builtin_function("identity", 5, 2)]
        for _ in range(4):
            values = tuple(rng.randrange(3) for _ in range(25))
            if len(set(values)) >= 2:
                fns.append(FunctionTable(5, 2, values))
        for f in fns:
            assert exact_redundancy(f, 1).r == 2

    def test_budget_exceeded_carries_bounds(self):
        f = builtin_function("identity", 2, 3)
        with pytest.raises(BudgetExceeded) as exc:
            exact_redundancy(f, 2, budget=50)
        details = exc.value.details
        assert details["nodes"] > 50
        assert details["lower_bound"] >= details["trying_r"] >= 4

    def test_negative_t_rejected(self):
        with pytest.raises(DimensionError):
            exact_redundancy(builtin_function("or", 2, 2), -1)

    def test_deterministic_witness(self):
        f = builtin_function("hamming_weight", 2, 3)
        a = exact_redundancy(f, 1)
        b = exact_redundancy(f, 1)
        assert a == b
