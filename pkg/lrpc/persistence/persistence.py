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

"""lrpc persistence layer."""

import json
import uuid

from datetime import datetime, timezone

from sqlalchemy import Column, String, Integer, Float, ForeignKey
from sqlalchemy.orm import declarative_base
from sqlalchemy.types import TypeDecorator, Text

import lrpc.logger
import lrpc.persistence

from lrpc.core.code import CodeParams
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.simulator.simulator import SimConfig
from lrpc.simulator.simulator import SimRecord

LOG = lrpc.logger.get_logger()

Base = declarative_base()


class UUID(TypeDecorator):
    """UUID type."""

    impl = String(32)
    cache_ok = True

    def process_bind_param(self, value, dialect=None):

        if value and isinstance(value, uuid.UUID):
            return value.hex
        elif value and not isinstance(value, uuid.UUID):
            raise ValueError('value %s is not a valid uuid.UUID' % value)
        else:
            return None

    def process_result_value(self, value, dialect=None):

        if value:
            return uuid.UUID(hex=value)
        else:
            return None


class Modulus(TypeDecorator):
    """Polynomial coefficients, low to high, as comma separated text."""

    impl = String
    cache_ok = True

    def process_bind_param(self, value, dialect=None):

        if value is None:
            return None

        return ",".join("%u" % coeff for coeff in value)

    def process_result_value(self, value, dialect=None):

        if value:
            return [int(coeff) for coeff in value.split(",")]
        else:
            return None


class EventCounts(TypeDecorator):
    """Failure counts per decoder reason, stored as JSON."""

    impl = Text
    cache_ok = True

    def process_bind_param(self, value, dialect=None):

        if value is None:
            return None

        return json.dumps(value, sort_keys=True)

    def process_result_value(self, value, dialect=None):

        if value:
            return json.loads(value)
        else:
            return {}


class TblCampaign(Base):
    """ Campaign table. """

    __tablename__ = 'campaign'

    campaign_id = Column("campaign_id",
                         UUID(),
                         primary_key=True,
                         default=uuid.uuid4)
    q = Column(Integer)
    m = Column(Integer)
    modulus = Column(Modulus())
    lam = Column("lambda", Integer)
    n = Column(Integer)
    k = Column(Integer)
    u = Column(Integer)
    # 64-bit seeds overflow signed sqlite integers
    master_seed = Column(String)
    stop_failures = Column(Integer)
    max_trials = Column(Integer)
    created = Column(String)

    def to_dict(self):
        """ Return a JSON-serializable dictionary representing the campaign """

        return {'campaign_id': self.campaign_id,
                'q': self.q,
                'm': self.m,
                'modulus': self.modulus,
                'lambda': self.lam,
                'n': self.n,
                'k': self.k,
                'u': self.u,
                'master_seed': int(self.master_seed),
                'stop_failures': self.stop_failures,
                'max_trials': self.max_trials,
                'created': self.created}


class TblRecord(Base):
    """ Per-rank campaign results. """

    __tablename__ = 'record'

    record_id = Column(Integer, primary_key=True, autoincrement=True)
    campaign_id = Column("campaign_id",
                         UUID(),
                         ForeignKey('campaign.campaign_id'),
                         nullable=False)
    t = Column(Integer)
    trials = Column(Integer)
    failures = Column(Integer)
    fer = Column(Float)
    events = Column(EventCounts())
    wall_time = Column(Float)


def get_session(engine_url=None):
    """Return a session on engine_url, creating the tables if needed."""

    engine = lrpc.persistence.init_engine(engine_url)
    Base.metadata.create_all(engine)

    return lrpc.persistence.Session()


def store_campaign(cfg, records, engine_url=None):
    """Store a campaign and its records, return the campaign id."""

    session = get_session(engine_url)
    params = cfg.params
    field = params.field

    campaign = TblCampaign(campaign_id=uuid.uuid4(),
                           q=field.q,
                           m=field.m,
                           modulus=list(field.modulus),
                           lam=params.lam,
                           n=params.n,
                           k=params.k,
                           u=params.u,
                           master_seed=str(cfg.master_seed),
                           stop_failures=cfg.stop_failures,
                           max_trials=cfg.max_trials,
                           created=datetime.now(timezone.utc).isoformat())

    try:
        session.add(campaign)
        session.flush()
        for record in records:
            session.add(TblRecord(campaign_id=campaign.campaign_id,
                                  t=record.t,
                                  trials=record.trials,
                                  failures=record.failures,
                                  fer=record.fer,
                                  events=record.events,
                                  wall_time=record.wall_time))
        session.commit()
    except Exception:
        session.rollback()
        raise

    LOG.info("Stored campaign %s (%u records)", campaign.campaign_id,
             len(records))

    return campaign.campaign_id


def load_campaign(campaign_id, engine_url=None):
    """Return (SimConfig, records) of a stored campaign.

    Raises:
        ParameterError if no such campaign exists
    """

    session = get_session(engine_url)

    if not isinstance(campaign_id, uuid.UUID):
        campaign_id = uuid.UUID(str(campaign_id))

    campaign = session.query(TblCampaign) \
        .filter(TblCampaign.campaign_id == campaign_id).first()

    if campaign is None:
        raise ParameterError("unknown campaign %s" % campaign_id)

    rows = session.query(TblRecord) \
        .filter(TblRecord.campaign_id == campaign_id) \
        .order_by(TblRecord.record_id).all()

    field = FieldParams(campaign.q, campaign.m, campaign.modulus)
    params = CodeParams(campaign.n, campaign.k, campaign.lam, field,
                        campaign.u)

    records = [SimRecord(row.t, row.trials, row.failures, row.events,
                         row.wall_time) for row in rows]

    cfg = SimConfig(params, [record.t for record in records] or [0],
                    stop_failures=campaign.stop_failures,
                    max_trials=campaign.max_trials,
                    master_seed=int(campaign.master_seed))

    return cfg, records
