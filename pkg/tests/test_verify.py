"""Verifier tests: bound arithmetic, rainbow diagnostics, brute force, and
the randomized structural checks."""

import pytest

from rainbowmat import (Family, Matroid, RainbowSet, VerifyError, bound_floor,
                        brute_force_max, check_bound, check_rainbow,
                        cyclic_latin, latin_to_family, property_suite,
                        rainbow_problems, shuffled_latin, solve)


class TestCheckBound:
    def test_instantiated_at_four(self):
        assert check_bound(3, 4)
        assert not check_bound(2, 4)

    def test_full_size_always_ok(self):
        for n in (0, 1, 5, 30):
            assert check_bound(n, n)

    def test_large_integer_arithmetic(self):
        assert not check_bound(90, 100)   # 10^2 = 100 > 90
        assert check_bound(91, 100)       # 9^2 = 81 <= 91

    def test_monotone_in_t(self):
        for n in range(1, 40):
            admitted = [check_bound(t, n) for t in range(n + 1)]
            first = admitted.index(True)
            assert all(admitted[first:])

    def test_floor_above_n_minus_sqrt(self):
        import math
        for n in range(1, 200):
            f = bound_floor(n)
            assert check_bound(f, n)
            if f > 0:
                assert not check_bound(f - 1, n)
            # t >= n - floor(sqrt(n)) + 1 always satisfies the bound
            assert check_bound(min(n, n - math.isqrt(n) + 1), n)

    def test_rejects_out_of_range(self):
        with pytest.raises(VerifyError):
            check_bound(5, 4)


class TestCheckRainbow:
    def test_empty_is_valid(self):
        fam = latin_to_family(cyclic_latin(2))
        assert check_rainbow(RainbowSet(()), fam)

    def test_pick_outside_its_set(self):
        fam = latin_to_family(cyclic_latin(2))
        problems = rainbow_problems(RainbowSet.from_dict({0: 3}), fam)
        assert any("not in set 1" in p for p in problems)

    def test_dependent_picks_flagged(self):
        fam = latin_to_family(cyclic_latin(2))
        # cells 0 and 2 share a column
        problems = rainbow_problems(RainbowSet.from_dict({0: 0, 1: 2}), fam)
        assert any("matroid M" in p for p in problems)

    def test_solver_outputs_always_valid(self):
        for seed in range(30):
            fam = latin_to_family(shuffled_latin(4 + seed % 3, seed))
            rep = solve(fam)
            assert check_rainbow(rep.rainbow, fam)


class TestBruteForce:
    def test_single_color(self):
        m = Matroid.uniform(1, 1)
        fam = Family.create([{0}], m, m)
        assert brute_force_max(fam)[0] == 1

    def test_cyclic_two(self):
        assert brute_force_max(latin_to_family(cyclic_latin(2)))[0] == 1

    def test_cyclic_three(self):
        assert brute_force_max(latin_to_family(cyclic_latin(3)))[0] == 3

    def test_witness_is_valid_and_optimal(self):
        for seed in range(6):
            fam = latin_to_family(shuffled_latin(4, seed))
            opt, wit = brute_force_max(fam)
            assert wit.size == opt
            assert check_rainbow(wit, fam)

    def test_refuses_large_without_override(self):
        fam = latin_to_family(cyclic_latin(6))
        with pytest.raises(VerifyError, match="limit"):
            brute_force_max(fam)
        # even-order cyclic squares have no full transversal
        opt, _ = brute_force_max(fam, limit=6)
        assert opt == 5


class TestPropertySuite:
    def test_zero_trials_empty_report(self):
        report = property_suite(seed=1, trials=0)
        assert report.total_failures == 0
        assert all(c.trials == 0 for c in report.checks.values())

    def test_small_run_all_pass(self):
        report = property_suite(seed=2, trials=40)
        assert report.total_failures == 0
        for name in ("support_unique", "exchange", "circuit_elimination",
                     "augmentation", "circuit_transfer"):
            assert report.checks[name].trials >= 40, name

    def test_deterministic_in_seed(self):
        a = property_suite(seed=3, trials=15).render()
        b = property_suite(seed=3, trials=15).render()
        assert a == b
