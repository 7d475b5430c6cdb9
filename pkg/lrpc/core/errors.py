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

"""lrpc exceptions."""


class LrpcError(Exception):
    """Base class for all lrpc errors."""

    pass


class ParameterError(LrpcError, ValueError):
    """Invalid or mismatched parameters."""

    pass


class DivisionByZero(LrpcError, ZeroDivisionError):
    """Inversion of the zero element."""

    pass


class ConstructionError(LrpcError):
    """A code could not be constructed."""

    pass


class DimensionDeficient(LrpcError):
    """The product basis {phi_l * gamma_r} is linearly dependent."""

    pass


class CodecError(LrpcError, ValueError):
    """Malformed serialized record."""

    pass


class OutsideProductSpace(LrpcError):
    """A syndrome entry does not lie in the span of the product basis."""

    pass


class SystemUnsolvable(LrpcError):
    """The erasure system over H_ext has no unique solution."""

    pass
