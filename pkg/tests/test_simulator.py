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

"""Monte-Carlo campaign tests."""

import io
import math

import numpy as np
import pytest

from lrpc.analysis.analysis import union_bound
from lrpc.core.code import CodeParams
from lrpc.core.code import keygen
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.decoder.decoder import SUCCESS
from lrpc.decoder.decoder import SYNDROME_SPACE_DEFICIENT
from lrpc.simulator.simulator import CSV_HEADER
from lrpc.simulator.simulator import Campaign
from lrpc.simulator.simulator import SimConfig
from lrpc.simulator.simulator import SimRecord
from lrpc.simulator.simulator import interleaving_family
from lrpc.simulator.simulator import result_filename
from lrpc.simulator.simulator import result_path
from lrpc.simulator.simulator import run_campaign
from lrpc.simulator.simulator import run_trial
from lrpc.simulator.simulator import trial_seed
from lrpc.simulator.simulator import write_bound_csv
from lrpc.simulator.simulator import write_csv


class TestSimConfig:

    def test_defaults(self, small_params):
        cfg = SimConfig(small_params, range(1, 4))

        assert cfg.t_range == [1, 2, 3]
        assert cfg.stop_failures == 100
        assert cfg.workers == 1

    @pytest.mark.parametrize("kwargs", [{'stop_failures': 0},
                                        {'stop_failures': 5,
                                         'max_trials': 4},
                                        {'workers': 0},
                                        {'master_seed': -1},
                                        {'master_seed': 2 ** 64}])
    def test_invalid(self, small_params, kwargs):
        with pytest.raises(ParameterError):
            SimConfig(small_params, [1], **kwargs)

    def test_invalid_range(self, small_params):
        with pytest.raises(ParameterError):
            SimConfig(small_params, [])
        with pytest.raises(ParameterError):
            SimConfig(small_params, [13])


class TestTrials:

    def test_seed(self):
        assert trial_seed(1, 2, 3) == trial_seed(1, 2, 3)
        assert len({trial_seed(1, t, idx) for t in range(3)
                    for idx in range(100)}) == 300
        assert 0 <= trial_seed(2 ** 64 - 1, 9, 10 ** 7) < 2 ** 64

    def test_zero_rank(self, small_code):
        for seed in range(20):
            assert run_trial(small_code, 0, seed).reason == SUCCESS

    def test_deterministic(self, small_code):
        for seed in range(20):
            assert run_trial(small_code, 3, seed) == \
                run_trial(small_code, 3, seed)

    def test_full_rank_fails(self, small_code):
        m = small_code.params.field.m

        for seed in range(5):
            assert not run_trial(small_code, m, seed).success


class TestRecord:

    def test_counts(self):
        record = SimRecord(3)
        for reason in [SUCCESS, SYNDROME_SPACE_DEFICIENT, SUCCESS]:
            record.add(reason)

        assert record.trials == 3
        assert record.failures == 1
        assert record.fer == pytest.approx(1 / 3)
        assert record.columns() == [0, 0, 0, 0, 1]
        assert record.sigma == pytest.approx(math.sqrt(2 / 27))

    def test_empty(self):
        assert SimRecord(1).fer == 0.0
        assert SimRecord(1).sigma == 0.0


class TestCampaign:

    def test_stopping_rule(self, small_code):
        cfg = SimConfig(small_code.params, [2, 4, 6], stop_failures=5,
                        max_trials=300, master_seed=42)

        records = run_campaign(cfg, small_code)

        assert [r.t for r in records] == [2, 4, 6]
        for record in records:
            assert record.failures <= 5
            assert record.trials <= 300
            assert record.failures == 5 or record.trials == 300
            assert sum(record.events.values()) == record.failures
            assert 0.0 <= record.fer <= 1.0

    def test_reproducible_across_workers(self, small_code):
        records = []

        for workers in (1, 2, 3):
            cfg = SimConfig(small_code.params, [3, 5], stop_failures=4,
                            max_trials=700, master_seed=7, workers=workers)
            records.append(run_campaign(cfg, small_code))

        assert records[0] == records[1] == records[2]

    def test_keygen_from_seed(self, small_params):
        cfg = SimConfig(small_params, [1], stop_failures=1, max_trials=1,
                        master_seed=11)
        campaign = Campaign(cfg)

        campaign.run()

        assert campaign.code == keygen(small_params,
                                       np.random.default_rng(11))

    def test_degenerate(self, small_code):
        cfg = SimConfig(small_code.params, [1], stop_failures=1,
                        max_trials=1)

        record = run_campaign(cfg, small_code)[0]

        assert record.trials == 1
        assert record.failures == 0

    def test_bound_consistency(self, small_code):
        params = small_code.params
        cfg = SimConfig(params, [3, 4], stop_failures=20, max_trials=2000,
                        master_seed=5)

        for record in run_campaign(cfg, small_code):
            bound = union_bound(params, record.t).union
            assert record.fer <= bound + 3 * record.sigma + 1e-12


class TestOutput:

    def test_header_only(self):
        out = io.StringIO()
        write_csv([], out)

        assert out.getvalue() == \
            "t,trials,failures,fer,e_product,e_intersection,e_solve," \
            "e_verify,e_syndrome\n"

    def test_rows(self, tmp_path):
        record = SimRecord(4, 10, 2, {SYNDROME_SPACE_DEFICIENT: 2})
        path = tmp_path / "out.csv"

        write_csv([record], str(path))

        lines = path.read_text().splitlines()
        assert lines[0].split(",") == CSV_HEADER
        assert lines[1] == "4,10,2,0.2,0,0,0,0,2"

    def test_bound_csv(self):
        params = interleaving_family()[0]
        out = io.StringIO()

        write_bound_csv([union_bound(params, t) for t in range(3)], out)

        lines = out.getvalue().splitlines()
        assert lines[0] == "t,term_product,term_intersection," \
            "term_syndrome,union"
        assert len(lines) == 4
        assert float(lines[1].split(",")[4]) == 2.0 ** -16

    def test_result_filename(self):
        params = CodeParams(32, 16, 2, FieldParams(2, 30))

        assert result_filename(params, 42) == \
            "q2_m30_d2_n32_k16_ll1_id42_results.txt"

    def test_result_path(self, tmp_path):
        params = interleaving_family()[1]

        assert result_path(str(tmp_path), params, 3) == \
            str(tmp_path / "q2_m30_d2_n16_k8_ll2_id3_results.txt")
        assert result_path("x.csv", params, 3) == "x.csv"
        assert result_path(None, params, 3) is None


@pytest.mark.slow
class TestAcceptance:

    @pytest.mark.parametrize("t", [5, 6, 7])
    def test_fer_against_bound(self, t):
        params = interleaving_family()[0]
        cfg = SimConfig(params, [t], stop_failures=100, master_seed=1,
                        workers=4)

        record = run_campaign(cfg)[0]
        bound = union_bound(params, t).union

        assert record.failures == 100
        assert record.fer <= bound + 3 * record.sigma
        assert record.fer >= bound / 30

    def test_interleaving_invariance(self):
        fers = []

        for params in interleaving_family()[:3]:
            cfg = SimConfig(params, [5], stop_failures=100, master_seed=2,
                            workers=4)
            fers.append(run_campaign(cfg)[0].fer)

        for fer_a in fers:
            for fer_b in fers:
                assert 0.5 <= fer_a / fer_b <= 2.0

    def test_self_verification_large(self, small_code):
        cfg = SimConfig(small_code.params, [2, 3, 4], stop_failures=10000,
                        max_trials=10000, master_seed=3, workers=4)

        for record in run_campaign(cfg, small_code):
            assert record.trials == 10000
            assert record.events['verification_mismatch'] == 0
