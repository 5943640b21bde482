import dataclasses
import json

import pytest

from eaqec.catalog import (
    NetParams,
    TableEntry,
    all_rows,
    export,
    import_rows,
    parse_net,
    row_from_json,
    row_to_json,
    table_rows,
    verify_row,
)
from eaqec.params import CodeAlgebraError, CodeParams, parse_code, parse_mixed


EXPECTED_COUNTS = {"S1": 47, "S2": 26, "S3": 19, "S4": 12}


class TestDataset:
    def test_row_counts(self):
        assert len(all_rows()) == sum(EXPECTED_COUNTS.values())
        for table, count in EXPECTED_COUNTS.items():
            assert len(table_rows(table)) == count

    def test_every_row_verifies(self):
        for row in all_rows():
            report = verify_row(row)
            assert report.arithmetic_ok, row
            assert report.passed, row

    def test_strict_improvement_against_constructive_entries(self):
        for row in all_rows():
            if row.best_qecc.constructive:
                assert verify_row(row).beats_qecc, row

    def test_ties_only_against_nonconstructive_bounds(self):
        tied = [row for row in all_rows() if not verify_row(row).beats_qecc]
        assert tied, "dataset contains tie rows by construction"
        for row in tied:
            assert not row.best_qecc.constructive
            assert not verify_row(row).dominated_by_qecc

    def test_unknown_table_rejected(self):
        with pytest.raises(CodeAlgebraError):
            table_rows("S9")


class TestSpecificRows:
    def test_one_ebit_flagship_row(self):
        row = table_rows("S3")[0]
        report = verify_row(row)
        assert report.recomputed == CodeParams(n=15, k=2, d=6, c=1, d_is_lower_bound=True)
        assert report.beats_qecc
        assert report.beats_eaqecc is False  # MAGMA record has equal net and distance

    def test_first_net_form_row(self):
        row = table_rows("S1")[0]
        report = verify_row(row)
        assert isinstance(report.recomputed, CodeParams)  # full outer split known
        assert report.recomputed == CodeParams(n=68, k=10, d=18, c=8, d_is_lower_bound=True)
        assert report.ebits_ok is None  # claimed entry is net form
        assert report.beats_qecc and report.beats_eaqecc

    def test_net_only_row_checks_net_arithmetic(self):
        row = next(r for r in table_rows("S1") if isinstance(r.outer, NetParams)
                   and r.outer.net == 3)
        report = verify_row(row)
        assert isinstance(report.recomputed, NetParams)
        assert report.length_ok and report.logical_ok and report.distance_ok

    def test_two_ebit_rows_present_in_s4(self):
        ebits = [row.claimed.c for row in table_rows("S4")
                 if isinstance(row.claimed, CodeParams)]
        assert ebits.count(2) == 10
        assert sorted(set(ebits)) == [2, 4, 6]

    def test_corrupted_ebit_count_is_flagged(self):
        row = table_rows("S3")[0]
        corrupted = dataclasses.replace(
            row, claimed=dataclasses.replace(row.claimed, c=5))
        report = verify_row(corrupted)
        assert report.ebits_ok is False
        assert not report.passed

    def test_corrupted_multiplicity_is_rejected(self):
        row = next(r for r in table_rows("S1") if isinstance(r.outer, NetParams)
                   and r.outer_full is None)
        extra = dataclasses.replace(
            row, inner=parse_mixed(row.inner.render() + "+1x[[4,2,2;0]]"))
        with pytest.raises(CodeAlgebraError, match="multiplicities"):
            verify_row(extra)

    def test_corrupted_length_is_flagged(self):
        row = table_rows("S1")[0]
        corrupted = dataclasses.replace(
            row, claimed=dataclasses.replace(row.claimed, n=69))
        with pytest.raises(CodeAlgebraError):
            verify_row(corrupted)  # comparison lengths no longer line up
        harmless = dataclasses.replace(
            row,
            claimed=dataclasses.replace(row.claimed, n=69),
            best_qecc=TableEntry(parse_code("[[69,2,16;0]]")),
            best_eaqecc=None)
        assert not verify_row(harmless).length_ok


class TestExport:
    def test_s3_csv_has_19_data_rows(self):
        lines = export("S3", "csv").strip().split("\n")
        assert lines[0] == "inner,outer,eacqc,best_qecc,best_eaqecc"
        assert len(lines) - 1 == 19

    def test_s4_json_exposes_ebit_counts(self):
        payload = json.loads(export("S4", "json"))
        ebits = [parse_code(row["eacqc"]["code"]).c for row in payload["rows"]]
        assert 2 in ebits

    def test_json_round_trip(self):
        for table in EXPECTED_COUNTS:
            assert import_rows(export(table, "json")) == table_rows(table)

    def test_row_json_round_trip(self):
        for row in all_rows():
            assert row_from_json(row_to_json(row)) == row

    def test_deterministic(self):
        assert export("S2", "csv") == export("S2", "csv")
        assert export("S2", "json") == export("S2", "json")

    def test_unknown_format(self):
        with pytest.raises(CodeAlgebraError):
            export("S1", "xml")


class TestNetParams:
    def test_render_and_parse(self):
        p = NetParams(n=68, net=2, d=18, d_is_lower_bound=True)
        assert p.render() == "[[68,2,≥18]]"
        assert parse_net(p.render()) == p
        assert parse_net("[[17,1,9]]_4") == NetParams(n=17, net=1, d=9, q=4)

    def test_parse_rejects_full_form(self):
        with pytest.raises(CodeAlgebraError):
            parse_net("[[15,2,6;1]]")

    def test_corrected_multiplicity_rows_are_noted(self):
        noted = [row for row in all_rows() if "adjusted" in row.notes]
        assert len(noted) == 2
        for row in noted:
            assert row.inner.total_length == row.claimed.n


class TestMixedParsing:
    def test_catalog_inner_strings(self):
        mix = parse_mixed("15x[[10,2,4;0]]+2x[[8,2,4;2]]")
        assert mix.total_length == 166
        assert mix.total_ebits == 4
