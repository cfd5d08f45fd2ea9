from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from typeflow.errors import (
    MalformedRowError,
    OrderViolationError,
    TimestampInversionError,
    UnknownKeySymbolError,
)
from typeflow.keylog import (
    CSV_V1_HEADER,
    KeyEventStream,
    normalize_key_symbol,
    parse_keylog,
    serialize_keylog,
)


def make_csv(rows: list[tuple]) -> bytes:
    lines = [CSV_V1_HEADER]
    lines += [f"{i},{k},{d},{u}" for i, k, d, u in rows]
    return ("\n".join(lines) + "\n").encode()


class TestParse:
    def test_header_only_gives_empty_stream(self):
        stream = parse_keylog(make_csv([]))
        assert len(stream) == 0

    def test_three_rows_map_directly(self):
        stream = parse_keylog(
            make_csv([(0, "t", 100, 150), (1, "h", 200, 260), (2, "e", 300, 340)])
        )
        assert len(stream) == 3
        assert [e.key for e in stream] == ["t", "h", "e"]
        assert [e.keydown_ms for e in stream] == [100, 200, 300]
        assert [e.keyup_ms for e in stream] == [150, 260, 340]
        assert [e.index for e in stream] == [0, 1, 2]

    def test_timestamp_inversion_reports_row(self):
        with pytest.raises(TimestampInversionError) as err:
            parse_keylog(make_csv([(0, "t", 200, 150)]))
        assert err.value.row == 0

    def test_order_violation_reports_row(self):
        with pytest.raises(OrderViolationError) as err:
            parse_keylog(
                make_csv([(0, "a", 100, 110), (1, "b", 90, 95)])
            )
        assert err.value.row == 1

    def test_keydown_ties_are_legal(self):
        stream = parse_keylog(make_csv([(0, "a", 100, 100), (1, "b", 100, 100)]))
        assert len(stream) == 2

    def test_bad_header_rejected(self):
        with pytest.raises(MalformedRowError):
            parse_keylog(b"index,key,down,up\n0,a,1,2\n")

    @pytest.mark.parametrize(
        "row",
        ["0,a,1", "0,a,1,2,3", "x,a,1,2", "1,a,1,2", "0,a,x,2", "0,a,1,x", "0,a,-1,2"],
    )
    def test_malformed_rows(self, row):
        with pytest.raises(MalformedRowError):
            parse_keylog(f"{CSV_V1_HEADER}\n{row}\n".encode())

    def test_unknown_symbol_reported(self):
        with pytest.raises(UnknownKeySymbolError) as err:
            parse_keylog(make_csv([(0, "F13", 1, 2)]))
        assert err.value.symbol == "F13"

    def test_named_keys_and_comma_spelling(self):
        stream = parse_keylog(
            make_csv([(0, "Space", 1, 2), (1, "Comma", 3, 4), (2, "BKSP", 5, 6)])
        )
        assert [e.key for e in stream] == ["Space", ",", "Backspace"]

    def test_uppercase_letter_folds(self):
        stream = parse_keylog(make_csv([(0, "A", 1, 2)]))
        assert stream[0].key == "a"

    def test_crlf_accepted(self):
        raw = make_csv([(0, "a", 1, 2)]).replace(b"\n", b"\r\n")
        assert len(parse_keylog(raw)) == 1


class TestNormalize:
    @pytest.mark.parametrize(
        "raw,expected",
        [
            ("BKSP", "Backspace"),
            ("BackSpace", "Backspace"),
            ("SPACE", "Space"),
            ("A", "a"),
            ("z", "z"),
            ("Comma", ","),
            ("RETURN", "Enter"),
            ("DEL", "Delete"),
            ("!", "!"),
        ],
    )
    def test_aliases(self, raw, expected):
        assert normalize_key_symbol(raw) == expected

    @pytest.mark.parametrize("raw", ["F13", "", "Escape", "\x07"])
    def test_unknown(self, raw):
        with pytest.raises(UnknownKeySymbolError):
            normalize_key_symbol(raw)


class TestRoundTrip:
    def test_parse_serialize_identity(self):
        rows = [
            (0, "t", 0, 80),
            (1, "Shift", 10, 90),
            (2, "Comma", 20, 95),
            (3, "Space", 100, 130),
            (4, "Backspace", 200, 240),
            (5, "Enter", 300, 350),
        ]
        raw = make_csv(rows)
        stream = parse_keylog(raw)
        assert serialize_keylog(stream) == raw
        assert parse_keylog(serialize_keylog(stream)) == stream

    @given(
        keys=st.lists(
            st.sampled_from(
                list("abcxyz',.-")
                + ["Space", "Enter", "Tab", "Backspace", "Delete", "Left", "Right",
                   "Home", "End", "Shift", "Ctrl", "Alt"]
            ),
            max_size=60,
        ),
        start=st.integers(min_value=0, max_value=10_000),
        data=st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_round_trip_property(self, keys, start, data):
        t = start
        rows = []
        for k in keys:
            hold = data.draw(st.integers(min_value=0, max_value=300))
            rows.append((k, t, t + hold))
            t += data.draw(st.integers(min_value=0, max_value=500))
        stream = KeyEventStream.from_events(rows)
        again = parse_keylog(serialize_keylog(stream))
        assert again == stream

    def test_never_reorders(self):
        rows = [(0, "a", 5, 6), (1, "b", 5, 5), (2, "c", 5, 9), (3, "d", 7, 7)]
        stream = parse_keylog(make_csv(rows))
        assert list(stream.keydown_ms) == [5, 5, 5, 7]

    def test_event_count_matches_row_count(self):
        rows = [(i, "a", i * 10, i * 10 + 5) for i in range(57)]
        assert len(parse_keylog(make_csv(rows))) == 57


def test_stream_indexing_and_iteration():
    stream = KeyEventStream.from_events([("a", 0, 10), ("Space", 20, 30)])
    assert stream[1].key == "Space"
    assert stream[-1].index == 1
    assert [e.key for e in stream.events] == ["a", "Space"]
    assert np.array_equal(stream.codes, np.array([ord("a"), 32], dtype=np.int32))
