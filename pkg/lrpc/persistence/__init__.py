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

"""lrpc results store."""

import os

from sqlalchemy import create_engine, event
from sqlalchemy.orm import scoped_session, sessionmaker

from lrpc.settings import RESULTSDB_ENGINE

ENGINE = None

SESSION_FACTORY = sessionmaker(autoflush=True, expire_on_commit=False)
Session = scoped_session(SESSION_FACTORY)


def on_connect(conn, record):
    conn.execute('pragma foreign_keys=ON')


def init_engine(engine_url=None):
    """Bind the session factory to engine_url (the default results db)."""

    global ENGINE

    engine_url = engine_url or RESULTSDB_ENGINE

    if engine_url.startswith("sqlite:///"):
        path = engine_url[len("sqlite:///"):]
        if path and path != ":memory:" and os.path.dirname(path):
            os.makedirs(os.path.dirname(path), exist_ok=True)

    if ENGINE is not None and str(ENGINE.url) == engine_url:
        return ENGINE

    Session.remove()

    ENGINE = create_engine(engine_url, pool_recycle=6000)
    event.listen(ENGINE, 'connect', on_connect)
    SESSION_FACTORY.configure(bind=ENGINE)

    return ENGINE
