#!/usr/bin/env python3
#
# Copyright (c) 2020 The lrpc-runtime developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied. See the License for the
# specific language governing permissions and limitations
# under the License.

"""Wire format tests."""

import numpy as np
import pytest

from lrpc.core.code import CodeParams
from lrpc.core.code import keygen
from lrpc.core.errors import CodecError
from lrpc.core.field import FieldParams
from lrpc.wire import CODE_RECORD
from lrpc.wire import MAGIC
from lrpc.wire import PT_CODE
from lrpc.wire import PT_VERSION
from lrpc.wire import PT_WORD
from lrpc.wire import WORD_RECORD
from lrpc.wire.wire import format_word_text
from lrpc.wire.wire import pack_code
from lrpc.wire.wire import pack_word
from lrpc.wire.wire import parse_word_text
from lrpc.wire.wire import unpack_code
from lrpc.wire.wire import unpack_word


class TestCodeRecord:

    def test_round_trip(self, small_code):
        data = pack_code(small_code)

        assert data.startswith(MAGIC)
        assert unpack_code(data) == small_code

    def test_odd_characteristic(self):
        params = CodeParams(4, 2, 2, FieldParams(3, 4))
        code = keygen(params, np.random.default_rng(1))

        assert unpack_code(pack_code(code)) == code

    def test_header(self, small_code):
        msg = CODE_RECORD.parse(pack_code(small_code))

        assert msg.type == PT_CODE
        assert (msg.n, msg.k, msg.lam, msg.u) == (8, 4, 2, 2)
        assert list(msg.modulus) == list(small_code.field.modulus)

    def test_truncated(self, small_code):
        with pytest.raises(CodecError):
            unpack_code(pack_code(small_code)[:-3])

    def test_bad_magic(self, small_code):
        with pytest.raises(CodecError):
            unpack_code(b"XXXX" + pack_code(small_code)[4:])

    def test_bad_version(self, small_code):
        data = bytearray(pack_code(small_code))
        data[4] = 0x7f

        with pytest.raises(CodecError):
            unpack_code(bytes(data))

    def test_wrong_type(self):
        with pytest.raises(CodecError):
            unpack_code(pack_word([1, 2, 3]))

    def test_inconsistent_params(self, small_code):
        data = bytearray(pack_code(small_code))
        # q = 4 is not a prime
        data[6:14] = (4).to_bytes(8, 'big')

        with pytest.raises(CodecError):
            unpack_code(bytes(data))


class TestWordRecord:

    def test_round_trip(self, rng):
        values = rng.integers(0, 2 ** 30, size=17)

        assert np.array_equal(unpack_word(pack_word(values)), values)

    def test_empty(self):
        assert unpack_word(pack_word([])).shape == (0,)

    def test_wrong_type(self, small_code):
        with pytest.raises(CodecError):
            unpack_word(pack_code(small_code))

    def test_outside_field(self, gf8):
        data = pack_word([1, 7, 8])

        assert unpack_word(data).tolist() == [1, 7, 8]
        with pytest.raises(CodecError):
            unpack_word(data, gf8)

    def test_beyond_int64(self, gf8):
        data = WORD_RECORD.build(dict(version=PT_VERSION, type=PT_WORD,
                                      length=2, elements=[1, 2 ** 64 - 1]))

        with pytest.raises(CodecError):
            unpack_word(data)
        with pytest.raises(CodecError):
            unpack_word(data, gf8)

    def test_short_header(self):
        with pytest.raises(CodecError):
            unpack_word(MAGIC + b"\x01")

    def test_bad_version(self):
        data = bytearray(pack_word([1, 2]))
        data[4] = 0x02

        with pytest.raises(CodecError):
            unpack_word(bytes(data))


class TestWordText:

    def test_parse(self, gf8):
        text = "# received word\n3\n\n0x7\n0\n"

        assert parse_word_text(text, gf8).tolist() == [3, 7, 0]

    def test_round_trip(self, gf64, rng):
        values = gf64.random_array(10, rng)

        assert np.array_equal(parse_word_text(format_word_text(values), gf64),
                              values)

    def test_out_of_field(self, gf8):
        with pytest.raises(CodecError):
            parse_word_text("8\n", gf8)

    def test_garbage(self, gf8):
        with pytest.raises(CodecError):
            parse_word_text("a+1\n", gf8)
