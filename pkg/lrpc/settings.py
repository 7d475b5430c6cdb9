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

"""lrpc global settings."""

import os.path

# Paths
DIRNAME = os.path.dirname(__file__)
ROOT_PATH = os.path.normpath(os.path.join(DIRNAME, '..'))
LOG_CONFIG = os.path.join(ROOT_PATH, "logging.cfg")

# ResultsDB
RESULTSDB_PATH = "%s/deploy/results.db" % (ROOT_PATH,)
RESULTSDB_ENGINE = "sqlite:///%s" % (RESULTSDB_PATH,)

# Field
DEFAULT_Q = 2

# Packed coefficient vectors are stored in signed 64-bit words
MAX_FIELD_BITS = 62

# Keygen
KEYGEN_ATTEMPTS = 100

# Campaigns
DEFAULT_STOP_FAILURES = 100
DEFAULT_MAX_TRIALS = 10 ** 7
TRIAL_BATCH = 256

# Serialization
FORMAT_VERSION = 1
