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

"""Binary and text formats for codes and words."""

from construct import Array
from construct import Const
from construct import Int8ub
from construct import Int16ub
from construct import Int32ub
from construct import Int64ub
from construct import Struct
from construct import this

MAGIC = b"LRPC"

PT_VERSION = 0x01

PT_CODE = 0x01
PT_WORD = 0x02

HEADER = Struct("magic" / Const(MAGIC),
                "version" / Int8ub,
                "type" / Int8ub)

# Modulus coefficients run low to high, h_coeffs are flattened (i, j, l)
CODE_RECORD = Struct("magic" / Const(MAGIC),
                     "version" / Int8ub,
                     "type" / Int8ub,
                     "q" / Int64ub,
                     "m" / Int8ub,
                     "modulus" / Array(this.m + 1, Int64ub),
                     "n" / Int16ub,
                     "k" / Int16ub,
                     "lam" / Int8ub,
                     "u" / Int16ub,
                     "phi" / Array(this.lam, Int64ub),
                     "h_coeffs" / Array((this.n - this.k) * this.n * this.lam,
                                        Int64ub))

WORD_RECORD = Struct("magic" / Const(MAGIC),
                     "version" / Int8ub,
                     "type" / Int8ub,
                     "length" / Int32ub,
                     "elements" / Array(this.length, Int64ub))
