import pytest
from hypothesis import given
from hypothesis import strategies as st

from eaqec import params
from eaqec.bounds import binom
from eaqec.families import (
    FamilyId,
    build_family,
    check_member,
    scan_violations,
    violation_claimed,
)
from eaqec.params import AsymCodeParams, CodeAlgebraError, CodeParams


class TestBuildFamily:
    def test_smallest_member(self):
        member = build_family(FamilyId.I, 3)
        assert member.inner == CodeParams(n=5, k=1, d=3)
        assert member.outer == CodeParams(n=3, k=1, d=3, c=2)
        assert member.result == CodeParams(n=15, k=1, d=9, c=2, d_is_lower_bound=True)

    def test_half_assisted_inner_member(self):
        member = build_family(FamilyId.III, 11)
        assert member.result == CodeParams(n=44, k=1, d=33, c=21, d_is_lower_bound=True)

    def test_even_reduced_distance_member(self):
        member = build_family(FamilyId.IV, 32)
        assert member.result == CodeParams(n=128, k=1, d=93, c=63, d_is_lower_bound=True)

    def test_asymmetric_member(self):
        member = build_family(FamilyId.ASYM, 3, n1=2)
        assert member.result == AsymCodeParams(n=6, k=1, d_z=6, d_x=3, c=2)

    def test_results_match_generic_concatenation(self):
        for fam, n2 in ((FamilyId.I, 7), (FamilyId.II, 10), (FamilyId.III, 9), (FamilyId.IV, 6)):
            member = build_family(fam, n2)
            assert member.result == params.concat(member.inner, member.outer)
        member = build_family(FamilyId.ASYM, 5, n1=3)
        assert member.result == params.concat_asym(member.inner, member.outer)

    @pytest.mark.parametrize("fam,n2", [
        (FamilyId.I, 4), (FamilyId.I, 1), (FamilyId.II, 5), (FamilyId.II, 2),
        (FamilyId.III, 8), (FamilyId.IV, 7), (FamilyId.ASYM, 1),
    ])
    def test_parity_and_range_rejected(self, fam, n2):
        with pytest.raises(CodeAlgebraError):
            build_family(fam, n2, n1=2 if fam is FamilyId.ASYM else None)

    def test_asym_needs_n1(self):
        with pytest.raises(CodeAlgebraError, match="n1"):
            build_family(FamilyId.ASYM, 3)
        with pytest.raises(CodeAlgebraError):
            build_family(FamilyId.I, 3, n1=2)

    @given(st.integers(1, 40))
    def test_closed_forms(self, m):
        n2_odd = 2 * m + 1
        r1 = build_family(FamilyId.I, n2_odd).result
        assert (r1.n, r1.k, r1.d, r1.c) == (5 * n2_odd, 1, 3 * n2_odd, n2_odd - 1)
        r3 = build_family(FamilyId.III, n2_odd).result
        assert (r3.n, r3.k, r3.d, r3.c) == (4 * n2_odd, 1, 3 * n2_odd, 2 * n2_odd - 1)
        n2_even = 2 * m + 2
        r2 = build_family(FamilyId.II, n2_even).result
        assert (r2.n, r2.k, r2.d, r2.c) == (5 * n2_even, 1, 3 * n2_even - 3, n2_even - 1)
        r4 = build_family(FamilyId.IV, n2_even).result
        assert (r4.n, r4.k, r4.d, r4.c) == (4 * n2_even, 1, 3 * n2_even - 3, 2 * n2_even - 1)


class TestClaimRanges:
    def test_claim_vs_construction_separation(self):
        assert violation_claimed(FamilyId.I, 3)
        assert not violation_claimed(FamilyId.II, 8)
        assert violation_claimed(FamilyId.II, 10)
        assert not violation_claimed(FamilyId.III, 9)
        assert violation_claimed(FamilyId.III, 11)
        assert not violation_claimed(FamilyId.IV, 30)
        assert violation_claimed(FamilyId.IV, 32)
        assert violation_claimed(FamilyId.ASYM, 3)
        assert not violation_claimed(FamilyId.ASYM, 6)
        assert violation_claimed(FamilyId.ASYM, 8)


class TestScanViolations:
    def test_family_i_slice(self):
        results = scan_violations(FamilyId.I, (3, 21))
        assert [n2 for n2, _ in results] == list(range(3, 22, 2))
        assert all(v.violated for _, v in results)

    def test_family_ii_first_claimed(self):
        ((n2, verdict),) = scan_violations(FamilyId.II, (10, 10))
        assert n2 == 10 and verdict.violated

    def test_family_ii_below_claim_range_is_reported_not_asserted(self):
        results = dict(scan_violations(FamilyId.II, (4, 8)))
        assert set(results) == {4, 6, 8}
        assert results[4].satisfied  # construction exists but no violation yet

    def test_asym_grid(self):
        for n1 in range(2, 6):
            results = scan_violations(FamilyId.ASYM, (3, 15), n1=n1)
            odd = [(n2, v) for n2, v in results if n2 % 2 == 1]
            assert all(v.violated for n2, v in odd)

    def test_asym_even_claim_boundary(self):
        # even outer lengths: the violation starts exactly at n2 = 8
        results = dict(scan_violations(FamilyId.ASYM, (4, 12), n1=2))
        assert results[4].satisfied
        assert results[6].satisfied          # 62726 <= 2^16, barely
        assert (results[6].lhs, results[6].rhs) == (79 * 794, 65536)
        assert results[8].violated
        assert results[10].violated
        assert results[12].violated
        assert not violation_claimed(FamilyId.ASYM, 6)
        assert violation_claimed(FamilyId.ASYM, 8)

    def test_empty_range_rejected(self):
        with pytest.raises(CodeAlgebraError, match="no admissible"):
            scan_violations(FamilyId.I, (4, 4))

    def test_matches_direct_check(self):
        for n2, verdict in scan_violations(FamilyId.III, (11, 21)):
            direct = check_member(build_family(FamilyId.III, n2))
            assert (verdict.lhs, verdict.rhs) == (direct.lhs, direct.rhs)


class TestSingleTermLowerBound:
    @pytest.mark.parametrize("n2", list(range(3, 102, 2)))
    def test_radius_term_alone_exceeds_bound_for_family_i(self, n2):
        member = build_family(FamilyId.I, n2)
        radius = (member.result.d - 1) // 2
        term = 3 ** radius * binom(member.result.n, radius)
        assert term > 2 ** (6 * n2 - 2)
        assert check_member(member).rhs == 2 ** (6 * n2 - 2)
