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

"""lrpc logging package."""

import inspect
import os
import logging

PATH = os.path.dirname(os.path.abspath(__file__)) + os.sep
ROOT_PATH = os.path.dirname(PATH[:-1]) + os.sep


def module_name(filename):
    """Turn a source file name into a dotted logger name.

    The name is relative to the lrpc package, so lrpc/decoder/decoder.py
    becomes "decoder" and lrpc/core/field.py becomes "core.field".
    """

    name = os.path.abspath(filename)

    if name.endswith('.py'):
        name = name[0:-3]
    elif name.endswith('.pyc'):
        name = name[0:-4]

    if name.startswith(PATH):
        name = name[len(PATH):]
    elif name.startswith(ROOT_PATH):
        name = name[len(ROOT_PATH):]

    name = name.replace('/', '.').replace('\\', '.')

    # Remove double names ("decoder.decoder" -> "decoder")
    toks = name.split('.')
    if len(toks) >= 2 and toks[-1] == toks[-2]:
        del toks[-1]
        name = '.'.join(toks)

    if name.endswith(".__init__"):
        name = name.rsplit(".__init__", 1)[0]

    return name


def get_logger(name=None, more_frames=0):
    """Logger factory."""

    if name is None:
        stack = inspect.stack()[1 + more_frames]
        name = module_name(stack[1])

    return logging.getLogger(name)
