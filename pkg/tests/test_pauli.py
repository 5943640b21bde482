import collections

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eaqec.known_codes import (
    BOWEN_313,
    BOWEN_TABLE,
    EA_REPETITION_313,
    EA_REPETITION_TABLE,
    FIVE_QUBIT,
    FIVE_QUBIT_TABLE,
    NAMED_CODES,
)
from eaqec.params import CodeAlgebraError
from eaqec.pauli import (
    CorrectableTable,
    PauliOperator,
    StabilizerSpec,
    build_decoder,
    correctable_counts,
    oracle_channel_fidelity,
    syndrome,
)


def op(label, n=None):
    return PauliOperator.from_label(label, n=n)


class TestPauliOperator:
    def test_label_round_trip(self):
        for label in ("XZZXI", "IIIII", "XZZ|XI", "Y|Z"):
            assert op(label).label() == label

    def test_weights_split_alice_bob(self):
        e = op("XYI|ZI")
        assert e.alice_weight == 2
        assert e.bob_weight == 1
        assert e.weight == 3

    def test_commutation(self):
        assert not op("X").commutes_with(op("Z"))
        assert op("X").commutes_with(op("Y|I", n=1).mul(op("Y|I", n=1)))  # identity
        assert op("XX").commutes_with(op("ZZ"))
        assert not op("XI").commutes_with(op("ZI"))

    def test_product_is_phase_free_xor(self):
        assert op("XZ").mul(op("ZZ")) == op("YI")

    def test_encoding_round_trip(self):
        for enc in range(4 ** 3):
            p = PauliOperator.from_encoding(2, 1, enc)
            assert p.encoding == enc
        assert op("XZY").encoding == 1 + 2 * 4 + 3 * 16

    def test_encoding_xor_is_group_product(self):
        a, b = op("XZY|IX"), op("ZZI|YX")
        assert a.mul(b).encoding == a.encoding ^ b.encoding

    def test_bad_label(self):
        with pytest.raises(CodeAlgebraError):
            op("XQZ")


class TestStabilizerSpec:
    def test_anticommuting_generators_rejected(self):
        with pytest.raises(CodeAlgebraError, match="anticommute"):
            StabilizerSpec(name="bad", n_alice=1, c_bob=0, k=-1,
                           generators=(op("X"), op("Z")))

    def test_dependent_generators_rejected(self):
        with pytest.raises(CodeAlgebraError, match="dependent"):
            StabilizerSpec(name="bad", n_alice=2, c_bob=0, k=0,
                           generators=(op("ZZ"), op("ZZ")))

    def test_generator_count_enforced(self):
        with pytest.raises(CodeAlgebraError, match="generators"):
            StabilizerSpec(name="bad", n_alice=5, c_bob=0, k=1,
                           generators=(op("XZZXI"),))

    def test_group_size(self):
        assert len(FIVE_QUBIT.spec.group_encodings) == 16
        assert len(BOWEN_313.spec.group_encodings) == 16

    def test_five_qubit_stabilizer_weights(self):
        # nonidentity elements of the five-qubit group all have weight 4
        weights = collections.Counter(
            PauliOperator.from_encoding(5, 0, enc).weight
            for enc in FIVE_QUBIT.spec.group_encodings)
        assert weights == {0: 1, 4: 15}


class TestSyndrome:
    def test_identity_and_generators_have_zero_syndrome(self):
        s = FIVE_QUBIT.spec
        assert syndrome(op("IIIII"), s) == 0
        for g in s.generators:
            assert syndrome(g, s) == 0

    def test_single_x_pattern(self):
        # X on position 1 anticommutes exactly with the generators having Z there
        s = FIVE_QUBIT.spec
        e = op("IXIII")
        expected = 0
        for gi, g in enumerate(s.generators):
            if not e.commutes_with(g):
                expected |= 1 << gi
        assert syndrome(e, s) == expected == 0b0001

    def test_length_mismatch(self):
        with pytest.raises(CodeAlgebraError):
            syndrome(op("XX"), FIVE_QUBIT.spec)


class TestBuildDecoder:
    def test_zero_syndrome_maps_to_identity(self):
        decoder = build_decoder(FIVE_QUBIT.spec)
        assert decoder[0] == op("IIIII")

    def test_five_qubit_corrects_all_single_errors(self):
        s = FIVE_QUBIT.spec
        decoder = build_decoder(s, ebit_preference=False)
        for pos in range(5):
            for letter in "XYZ":
                label = "I" * pos + letter + "I" * (4 - pos)
                e = op(label)
                assert decoder[syndrome(e, s)] == e

    def test_ebit_preferred_representatives_minimize_bob_weight(self):
        s = BOWEN_313.spec
        decoder = build_decoder(s, ebit_preference=True)
        best = {}
        for enc in range(4 ** 5):
            e = PauliOperator.from_encoding(3, 2, enc)
            syn = syndrome(e, s)
            best[syn] = min(best.get(syn, 99), e.bob_weight)
        for syn, rep in decoder.items():
            assert rep.bob_weight == best[syn]

    def test_determinism(self):
        a = build_decoder(EA_REPETITION_313.spec)
        b = build_decoder(EA_REPETITION_313.spec)
        assert a == b

    def test_size_cap(self):
        wide = StabilizerSpec(name="wide", n_alice=13, c_bob=0, k=13, generators=())
        with pytest.raises(CodeAlgebraError, match="cap"):
            build_decoder(wide)


class TestCorrectableCounts:
    def test_five_qubit_weight_distribution(self):
        table = FIVE_QUBIT.table()
        assert table == FIVE_QUBIT_TABLE
        assert [table.count(w, 0) for w in range(6)] == [1, 15, 0, 60, 135, 45]

    def test_bowen_coefficients(self):
        assert BOWEN_313.table() == BOWEN_TABLE
        assert sum(cnt for _, _, cnt in BOWEN_TABLE.counts) == 256

    def test_ea_repetition_coefficients(self):
        assert EA_REPETITION_313.table() == EA_REPETITION_TABLE
        assert sum(cnt for _, _, cnt in EA_REPETITION_TABLE.counts) == 256

    def test_bowen_split_marginals_match_five_qubit(self):
        # same stabilizer group, so summing over the Alice/Bob split must
        # recover the five-qubit total-weight distribution
        by_weight = collections.Counter()
        for i, j, cnt in BOWEN_TABLE.counts:
            by_weight[i + j] += cnt
        assert [by_weight[w] for w in range(6)] == [1, 15, 0, 60, 135, 45]

    @pytest.mark.parametrize("code", sorted(NAMED_CODES))
    @pytest.mark.parametrize("pref", [True, False])
    def test_group_order_identity(self, code, pref):
        s = NAMED_CODES[code].spec
        table = correctable_counts(s, build_decoder(s, ebit_preference=pref))
        assert sum(cnt for _, _, cnt in table.counts) == 1 << (2 * (s.width - s.k))
        assert table.count(0, 0) == 1

    def test_incomplete_decoder_rejected(self):
        s = FIVE_QUBIT.spec
        decoder = build_decoder(s)
        decoder.pop(3)
        with pytest.raises(CodeAlgebraError, match="cover"):
            correctable_counts(s, decoder)

    def test_table_validation(self):
        with pytest.raises(CodeAlgebraError, match="sum"):
            CorrectableTable(n=3, c=2, k=1, counts=((0, 0, 1), (1, 0, 9)))
        with pytest.raises(CodeAlgebraError, match="identity"):
            CorrectableTable(n=1, c=0, k=1, counts=((1, 0, 1),))

    def test_json_round_trip(self):
        text = BOWEN_TABLE.to_json()
        assert CorrectableTable.from_json(text) == BOWEN_TABLE
        assert text.startswith('{"n": 3, "c": 2, "k": 1, "counts": [[0, 0, 1],')


def brute_force_table(spec, ebit_preference):
    # independent route: dict-based enumeration, no vectorization
    width = spec.n_alice + spec.c_bob
    stab = set(spec.group_encodings)
    everyone = [PauliOperator.from_encoding(spec.n_alice, spec.c_bob, enc)
                for enc in range(4 ** width)]
    reps = {}
    for e in everyone:
        syn = syndrome(e, spec)
        key = ((e.bob_weight, e.alice_weight, e.encoding) if ebit_preference
               else (e.weight, e.encoding))
        if syn not in reps or key < reps[syn][0]:
            reps[syn] = (key, e)
    counts = {}
    for e in everyone:
        rep = reps[syndrome(e, spec)][1]
        if e.mul(rep).encoding in stab:
            ij = (e.alice_weight, e.bob_weight)
            counts[ij] = counts.get(ij, 0) + 1
    return CorrectableTable.from_counts(spec.n_alice, spec.c_bob, spec.k, counts)


class TestAgainstBruteForce:
    @pytest.mark.parametrize("code", sorted(NAMED_CODES))
    @pytest.mark.parametrize("pref", [True, False])
    def test_vectorized_path_matches_plain_enumeration(self, code, pref):
        spec = NAMED_CODES[code].spec
        fast = correctable_counts(spec, build_decoder(spec, ebit_preference=pref))
        assert fast == brute_force_table(spec, pref)

    @pytest.mark.parametrize("pref", [True, False])
    def test_chunked_enumeration_matches_single_pass(self, pref, monkeypatch):
        import eaqec.pauli as pauli_mod
        spec = EA_REPETITION_313.spec
        whole = correctable_counts(spec, build_decoder(spec, ebit_preference=pref))
        monkeypatch.setattr(pauli_mod, "_CHUNK", 37)  # force many ragged chunks
        chunked = correctable_counts(spec, build_decoder(spec, ebit_preference=pref))
        assert chunked == whole


class TestOracleChannelFidelity:
    def test_noiseless_channel(self):
        for table in (FIVE_QUBIT_TABLE, BOWEN_TABLE, EA_REPETITION_TABLE):
            assert oracle_channel_fidelity(table, 0.0, 0.0) == 1.0

    def test_fully_depolarizing_gives_dimension_fraction(self):
        for table in (FIVE_QUBIT_TABLE, BOWEN_TABLE, EA_REPETITION_TABLE):
            assert oracle_channel_fidelity(table, 1.0, 1.0) == pytest.approx(0.25, abs=1e-15)

    def test_five_qubit_closed_form_at_sample_point(self):
        p = 0.2
        expected = 1 - 45 * p**2 / 8 + 75 * p**3 / 8 - 45 * p**4 / 8 + 9 * p**5 / 8
        assert oracle_channel_fidelity(FIVE_QUBIT_TABLE, p, p) == pytest.approx(expected, abs=1e-15)
        assert expected == pytest.approx(0.84136, abs=1e-12)

    @given(st.floats(0.0, 1.0), st.floats(0.0, 1.0))
    def test_probability_range(self, p_a, p_b):
        value = oracle_channel_fidelity(BOWEN_TABLE, p_a, p_b)
        assert 0.0 <= value <= 1.0 + 1e-12

    def test_out_of_range_rejected(self):
        with pytest.raises(CodeAlgebraError):
            oracle_channel_fidelity(BOWEN_TABLE, 1.2, 0.0)
