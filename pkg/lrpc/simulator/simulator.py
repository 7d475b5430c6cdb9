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

"""Monte-Carlo decoding failure rate campaigns.

One code is generated per campaign. For every error rank, trials run until
stop_failures decoding failures are collected or max_trials is reached.
Every trial draws from its own generator, seeded from (master_seed, t,
trial index), and outcomes are merged in trial order, so a campaign gives
the same records for any number of workers.
"""

import csv
import math
import os
import sys
import time

from multiprocessing import Pool

import numpy as np

import lrpc.logger

from lrpc.analysis.analysis import union_bound
from lrpc.channel.channel import apply
from lrpc.channel.channel import sample_error
from lrpc.core.code import CodeParams
from lrpc.core.code import encode
from lrpc.core.code import keygen
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.decoder.decoder import DecodeOutcome
from lrpc.decoder.decoder import MISCORRECTION
from lrpc.decoder.decoder import PRODUCT_SPACE_DEFICIENT
from lrpc.decoder.decoder import REASONS
from lrpc.decoder.decoder import SUCCESS
from lrpc.decoder.decoder import SUPPORT_MISMATCH
from lrpc.decoder.decoder import SUPPORT_TOO_LARGE
from lrpc.decoder.decoder import SYNDROME_SPACE_DEFICIENT
from lrpc.decoder.decoder import SYSTEM_UNSOLVABLE
from lrpc.decoder.decoder import VERIFICATION_MISMATCH
from lrpc.decoder.decoder import decode
from lrpc.settings import DEFAULT_MAX_TRIALS
from lrpc.settings import DEFAULT_STOP_FAILURES
from lrpc.settings import TRIAL_BATCH

LOG = lrpc.logger.get_logger()

# CSV event columns and the decoder reasons counted in each
EVENT_COLUMNS = (
    ('e_product', (SUPPORT_TOO_LARGE, PRODUCT_SPACE_DEFICIENT)),
    ('e_intersection', (SUPPORT_MISMATCH,)),
    ('e_solve', (SYSTEM_UNSOLVABLE,)),
    ('e_verify', (VERIFICATION_MISMATCH, MISCORRECTION)),
    ('e_syndrome', (SYNDROME_SPACE_DEFICIENT,)),
)

CSV_HEADER = ['t', 'trials', 'failures', 'fer'] + \
    [column for column, _ in EVENT_COLUMNS]

BOUND_HEADER = ['t', 'term_product', 'term_intersection', 'term_syndrome',
                'union']

# Interleaving orders of the N=32, R=1/2 comparison family
FAMILY_ORDERS = (1, 2, 4, 8, 16)

# Code installed in every pool worker by _init_worker
_CODE = None


class SimConfig(object):
    """Campaign configuration.

    Attributes:
        params: the code parameters (CodeParams)
        t_range: list of error ranks
        stop_failures: failures to collect per rank
        max_trials: trial cap per rank
        master_seed: 64-bit campaign seed
        workers: number of worker processes
    """

    def __init__(self, params, t_range, stop_failures=DEFAULT_STOP_FAILURES,
                 max_trials=DEFAULT_MAX_TRIALS, master_seed=0, workers=1):

        t_range = [int(t) for t in t_range]

        if not isinstance(params, CodeParams):
            raise ParameterError("params must be a CodeParams instance")

        if not t_range:
            raise ParameterError("empty t range")

        limit = min(params.field.m, params.N)
        if min(t_range) < 0 or max(t_range) > limit:
            raise ParameterError("t must lie in [0, %u]" % limit)

        if stop_failures < 1:
            raise ParameterError("stop_failures must be positive")

        if max_trials < stop_failures:
            raise ParameterError("max_trials must be >= stop_failures")

        if not 0 <= master_seed < 2 ** 64:
            raise ParameterError("master_seed must be a 64-bit value")

        if workers < 1:
            raise ParameterError("workers must be positive")

        self.params = params
        self.t_range = t_range
        self.stop_failures = int(stop_failures)
        self.max_trials = int(max_trials)
        self.master_seed = int(master_seed)
        self.workers = int(workers)

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'params': self.params.to_dict(),
                't_range': self.t_range,
                'stop_failures': self.stop_failures,
                'max_trials': self.max_trials,
                'master_seed': self.master_seed,
                'workers': self.workers}

    def __repr__(self):
        return "SimConfig(%r, t=%s, seed=%u)" % (self.params, self.t_range,
                                                 self.master_seed)


class SimRecord(object):
    """Outcome counts for one error rank.

    Attributes:
        t: the error rank
        trials: number of decoded words
        failures: number of failed decodings
        events: failures per decoder reason
        wall_time: seconds spent on this rank
    """

    def __init__(self, t, trials=0, failures=0, events=None, wall_time=0.0):

        self.t = t
        self.trials = trials
        self.failures = failures
        self.events = {reason: 0 for reason in REASONS}
        self.wall_time = wall_time

        if events:
            self.events.update(events)

    @property
    def fer(self):
        """Return the frame error rate failures / trials."""

        return self.failures / self.trials if self.trials else 0.0

    @property
    def sigma(self):
        """Return the binomial standard error of fer."""

        if not self.trials:
            return 0.0

        return math.sqrt(self.fer * (1.0 - self.fer) / self.trials)

    def add(self, reason):
        """Account for one trial."""

        self.trials += 1

        if reason != SUCCESS:
            self.failures += 1
            self.events[reason] += 1

    def columns(self):
        """Return the event counts per CSV column."""

        return [sum(self.events[reason] for reason in reasons)
                for _, reasons in EVENT_COLUMNS]

    def to_dict(self):
        """Return JSON-serializable representation of the object."""

        return {'t': self.t,
                'trials': self.trials,
                'failures': self.failures,
                'fer': self.fer,
                'events': dict(self.events),
                'wall_time': self.wall_time}

    def __eq__(self, other):

        if isinstance(other, SimRecord):
            return (self.t, self.trials, self.failures, self.events) == \
                (other.t, other.trials, other.failures, other.events)

        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __repr__(self):
        return "SimRecord(t=%u, %u/%u)" % (self.t, self.failures, self.trials)


def trial_seed(master_seed, t, index):
    """Return the 64-bit seed of trial index at rank t."""

    seq = np.random.SeedSequence([master_seed, t, index])

    return int(seq.generate_state(1, np.uint64)[0])


def run_trial(code, t, seed):
    """Transmit a random codeword over a rank-t channel and decode it.

    A verified decoding to another codeword is reported as MISCORRECTION.
    """

    params = code.params
    rng = np.random.default_rng(seed)

    err = sample_error(t, params, rng)
    msg = params.field.random_array(params.K, rng)
    codeword = encode(code, msg)

    outcome = decode(code, apply(codeword, err))

    if outcome.success and not np.array_equal(outcome.codeword, codeword):
        return DecodeOutcome(MISCORRECTION,
                             syndrome_dim=outcome.syndrome_dim,
                             support_dim=outcome.support_dim)

    return outcome


def run_batch(code, t, master_seed, start, stop):
    """Return the outcome reasons of trials [start, stop) in order."""

    return [run_trial(code, t, trial_seed(master_seed, t, index)).reason
            for index in range(start, stop)]


def _init_worker(code):
    global _CODE
    _CODE = code


def _worker_batch(args):
    return run_batch(_CODE, *args)


class Campaign(object):
    """A decoding failure rate campaign over one code."""

    def __init__(self, cfg, code=None):

        self.cfg = cfg
        self.code = code
        self.log = lrpc.logger.get_logger()

    def keygen(self):
        """Generate the campaign code from the master seed."""

        rng = np.random.default_rng(self.cfg.master_seed)
        self.code = keygen(self.cfg.params, rng)

        return self.code

    def run(self):
        """Run every rank of the campaign and return the records."""

        if self.code is None:
            self.keygen()

        if self.cfg.workers == 1:
            return [self.run_rank(t, None) for t in self.cfg.t_range]

        with Pool(self.cfg.workers, _init_worker, (self.code,)) as pool:
            return [self.run_rank(t, pool) for t in self.cfg.t_range]

    def run_rank(self, t, pool=None):
        """Collect trials at rank t until the stopping rule fires."""

        cfg = self.cfg
        record = SimRecord(t)
        started = time.perf_counter()
        index = 0

        while record.trials < cfg.max_trials and \
                record.failures < cfg.stop_failures:

            stop = min(index + TRIAL_BATCH * cfg.workers, cfg.max_trials)
            batches = [(t, cfg.master_seed, start,
                        min(start + TRIAL_BATCH, stop))
                       for start in range(index, stop, TRIAL_BATCH)]

            if pool is None:
                results = [run_batch(self.code, *batch) for batch in batches]
            else:
                results = pool.map(_worker_batch, batches)

            for reason in (r for batch in results for r in batch):
                record.add(reason)
                if record.failures == cfg.stop_failures:
                    break

            index = stop

        record.wall_time = time.perf_counter() - started

        bound = union_bound(cfg.params, t).union
        self.log.info("t=%u: %u failures in %u trials, fer=%.3e "
                      "(bound %.3e)", t, record.failures, record.trials,
                      record.fer, bound)

        return record


def run_campaign(cfg, code=None):
    """Run a campaign, generating the code unless one is given."""

    return Campaign(cfg, code).run()


def _open_output(out):

    if out is None or out == "-":
        return sys.stdout, False

    if hasattr(out, 'write'):
        return out, False

    return open(out, 'w', newline=''), True


def write_csv(records, out):
    """Write campaign records as CSV to a path or file object."""

    handle, owned = _open_output(out)

    try:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        for record in records:
            writer.writerow([record.t, record.trials, record.failures,
                             repr(record.fer)] + record.columns())
    finally:
        if owned:
            handle.close()


def write_bound_csv(reports, out):
    """Write BoundReports as CSV to a path or file object."""

    handle, owned = _open_output(out)

    try:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(BOUND_HEADER)
        for report in reports:
            writer.writerow([report.t, repr(report.term_product),
                             repr(report.term_intersection),
                             repr(report.term_syndrome),
                             repr(report.union)])
    finally:
        if owned:
            handle.close()


def result_filename(params, seed):
    """Return the result file name of a campaign."""

    return "q%u_m%u_d%u_n%u_k%u_ll%u_id%u_results.txt" % \
        (params.field.q, params.field.m, params.lam, params.n, params.k,
         params.u, seed)


def result_path(out, params, seed):
    """Resolve --out: directories get the conventional file name."""

    if out is not None and os.path.isdir(out):
        return os.path.join(out, result_filename(params, seed))

    return out


def interleaving_family(field=None, lam=2):
    """Return the interleaved codes of length 32 and rate 1/2.

    Every member has u(n-k) = 16, so they share the same union bound.
    """

    if field is None:
        field = FieldParams(2, 30)

    return [CodeParams(32 // u, 16 // u, lam, field, u)
            for u in FAMILY_ORDERS]
