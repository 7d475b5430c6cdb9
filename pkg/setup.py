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

"""Setup script."""

from setuptools import setup

setup(name="lrpc-runtime",
      version="1.0",
      description="Interleaved LRPC decoding runtime",
      long_description="Decoder, failure bounds and Monte-Carlo failure "
                       "rate campaigns for interleaved low-rank "
                       "parity-check codes",
      packages=['lrpc',
                'lrpc.core',
                'lrpc.channel',
                'lrpc.decoder',
                'lrpc.analysis',
                'lrpc.simulator',
                'lrpc.persistence',
                'lrpc.wire'],
      scripts=['lrpc-sim.py'],
      install_requires=['numpy>=1.17',
                        'sqlalchemy>=1.4',
                        'construct>=2.10'],
      extras_require={'test': ['pytest']})
