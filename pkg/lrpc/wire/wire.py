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

"""Pack and unpack codes and received words."""

import numpy as np

from construct import Container
from construct import ConstructError

from lrpc.core.code import CodeParams
from lrpc.core.code import LrpcCode
from lrpc.core.errors import CodecError
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.core.subspace import as_values
from lrpc.wire import CODE_RECORD
from lrpc.wire import HEADER
from lrpc.wire import PT_CODE
from lrpc.wire import PT_VERSION
from lrpc.wire import PT_WORD
from lrpc.wire import WORD_RECORD


def _parse(record, data, pt_type):

    try:
        hdr = HEADER.parse(data)
    except ConstructError as ex:
        raise CodecError("malformed header: %s" % ex)

    if hdr.version != PT_VERSION:
        raise CodecError("unsupported version %u" % hdr.version)

    if hdr.type != pt_type:
        raise CodecError("unexpected record type 0x%02x" % hdr.type)

    try:
        return record.parse(data)
    except ConstructError as ex:
        raise CodecError("malformed record: %s" % ex)


def pack_code(code):
    """Serialize an LrpcCode to bytes."""

    params = code.params
    field = params.field

    msg = Container(version=PT_VERSION,
                    type=PT_CODE,
                    q=field.q,
                    m=field.m,
                    modulus=list(field.modulus),
                    n=params.n,
                    k=params.k,
                    lam=params.lam,
                    u=params.u,
                    phi=[int(x) for x in code.phi],
                    h_coeffs=code.h_coeffs.reshape(-1).tolist())

    return CODE_RECORD.build(msg)


def unpack_code(data):
    """Rebuild an LrpcCode from pack_code output.

    Raises:
        CodecError on malformed or inconsistent records
    """

    msg = _parse(CODE_RECORD, data, PT_CODE)

    try:
        field = FieldParams(msg.q, msg.m, list(msg.modulus))
        params = CodeParams(msg.n, msg.k, msg.lam, field, msg.u)
        shape = (params.redundancy, params.n, params.lam)
        h_coeffs = np.array(msg.h_coeffs, dtype=np.int64).reshape(shape)
        return LrpcCode(params, list(msg.phi), h_coeffs)
    except (ParameterError, OverflowError) as ex:
        raise CodecError(str(ex))


def pack_word(values):
    """Serialize a vector of packed field elements."""

    values = as_values(values)

    msg = Container(version=PT_VERSION,
                    type=PT_WORD,
                    length=values.shape[0],
                    elements=values.tolist())

    return WORD_RECORD.build(msg)


def unpack_word(data, field=None):
    """Return the packed elements of a WORD_RECORD.

    Raises:
        CodecError on malformed records, or on elements outside the field
        when one is given
    """

    msg = _parse(WORD_RECORD, data, PT_WORD)

    if field is None:
        limit, name = 2 ** 63, "int64"
    else:
        limit, name = field.order, repr(field)

    for idx, value in enumerate(msg.elements):
        if value >= limit:
            raise CodecError("element %u: %u outside %s" % (idx, value, name))

    return np.array(msg.elements, dtype=np.int64)


def parse_word_text(text, field):
    """Parse one packed element per line, blank lines and # ignored."""

    values = []

    for lineno, line in enumerate(text.splitlines(), 1):

        line = line.split('#', 1)[0].strip()
        if not line:
            continue

        try:
            value = int(line, 0)
        except ValueError:
            raise CodecError("line %u: not an integer: %s" % (lineno, line))

        if not 0 <= value < field.order:
            raise CodecError("line %u: %u outside %r" %
                             (lineno, value, field))

        values.append(value)

    return np.array(values, dtype=np.int64)


def format_word_text(values):
    """Return one packed element per line."""

    return "".join("%u\n" % value for value in as_values(values))
