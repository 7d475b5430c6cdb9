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

"""lrpc command line."""

import json
import logging
import logging.config
import os
import sys

from argparse import ArgumentParser

import numpy as np

import lrpc.logger

from lrpc.analysis.analysis import bound_table
from lrpc.core.code import CodeParams
from lrpc.core.code import code_from_dict
from lrpc.core.code import keygen
from lrpc.core.errors import CodecError
from lrpc.core.errors import ConstructionError
from lrpc.core.errors import ParameterError
from lrpc.core.field import FieldParams
from lrpc.core.jsonserializer import dumps
from lrpc.decoder.decoder import decode
from lrpc.persistence.persistence import store_campaign
from lrpc.settings import DEFAULT_MAX_TRIALS
from lrpc.settings import DEFAULT_Q
from lrpc.settings import DEFAULT_STOP_FAILURES
from lrpc.settings import LOG_CONFIG
from lrpc.settings import RESULTSDB_ENGINE
from lrpc.simulator.simulator import SimConfig
from lrpc.simulator.simulator import interleaving_family
from lrpc.simulator.simulator import result_filename
from lrpc.simulator.simulator import result_path
from lrpc.simulator.simulator import run_campaign
from lrpc.simulator.simulator import write_bound_csv
from lrpc.simulator.simulator import write_csv
from lrpc.wire import MAGIC
from lrpc.wire.wire import pack_code
from lrpc.wire.wire import parse_word_text
from lrpc.wire.wire import unpack_code
from lrpc.wire.wire import unpack_word

LOG = lrpc.logger.get_logger()

EXIT_OK = 0
EXIT_CONSTRUCTION = 1
EXIT_USAGE = 2

_HANDLER = None


class Options(object):
    """Options parser."""

    def set(self, given_name, value):
        """Parse incoming options."""

        name = given_name.replace("-", "_")
        if name.startswith("_") or hasattr(Options, name):
            LOG.error("Illegal option: %s", given_name)
            return False

        has_field = hasattr(self, name)
        has_setter = hasattr(self, "_set_" + name)
        if has_field is False and has_setter is False:
            LOG.error("Unknown option: %s", given_name)
            return False
        if has_setter:
            setter = getattr(self, "_set_" + name)
            setter(given_name, name, value)
        else:
            if isinstance(getattr(self, name), bool):
                # Automatic bool-ization
                value = bool(value)
            setattr(self, name, value)
        return True


class LrpcOptions(Options):
    """Global lrpc options."""

    def __init__(self):
        self.log_config = None
        self.db = None

    def _set_log_config(self, given_name, name, value):
        if value is True:
            value = LOG_CONFIG
        self.log_config = value

    def _set_db(self, given_name, name, value):
        if value is True:
            value = RESULTSDB_ENGINE
        elif "://" not in value:
            value = "sqlite:///%s" % os.path.abspath(value)
        self.db = value


_HELP_TEXT = """Run the decoder tools with:
lrpc-sim.py [options] command [command options]

Notable options include:
  --log-config=<file>   Use log config file (bare: the bundled logging.cfg)
  --db=<url|file>       Store campaigns in a results database (bare: default)
"""


def _setup_logging(options):
    """ Setup logging. """

    global _HANDLER

    # one handler per process, bound to the current stderr
    if _HANDLER is not None:
        logging.getLogger().removeHandler(_HANDLER)

    _HANDLER = logging.StreamHandler()
    _HANDLER.setFormatter(logging.Formatter(logging.BASIC_FORMAT))
    logging.getLogger().addHandler(_HANDLER)
    logging.getLogger().setLevel(logging.INFO)

    if options.log_config:

        if not os.path.exists(options.log_config):
            print("Could not find logging config file:", options.log_config,
                  file=sys.stderr)
            return False

        logging.config.fileConfig(options.log_config,
                                  disable_existing_loggers=False)

    return True


def _parse_modulus(value):

    try:
        return [int(coeff) for coeff in value.split(",")]
    except ValueError:
        raise ParameterError("modulus must be comma separated integers, "
                             "lowest degree first: %s" % value)


def _add_field_args(parser, m=30):

    parser.add_argument("--q", type=int, default=DEFAULT_Q)
    parser.add_argument("--m", type=int, default=m)
    parser.add_argument("--modulus", type=_parse_modulus, default=None,
                        help="defining polynomial, lowest degree first")


def _add_code_args(parser):

    _add_field_args(parser)
    parser.add_argument("--lambda", dest="lam", type=int, default=2)
    parser.add_argument("--n", type=int, default=32)
    parser.add_argument("--k", type=int, default=16)
    parser.add_argument("--u", type=int, default=1)


def _add_campaign_args(parser):

    parser.add_argument("--t-min", type=int, default=1)
    parser.add_argument("--t-max", type=int, default=None)
    parser.add_argument("--stop-failures", type=int,
                        default=DEFAULT_STOP_FAILURES)
    parser.add_argument("--max-trials", type=int, default=DEFAULT_MAX_TRIALS)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--workers", type=int, default=1)


def _code_params(args):

    field = FieldParams(args.q, args.m, args.modulus)

    return CodeParams(args.n, args.k, args.lam, field, args.u)


def _t_range(args, params):

    t_max = args.t_max
    if t_max is None:
        t_max = min(params.field.m, params.N)

    if t_max < args.t_min:
        raise ParameterError("empty t range [%d, %d]" % (args.t_min, t_max))

    return range(args.t_min, t_max + 1)


def _read_code(path):
    """Load a code stored by keygen, binary or JSON."""

    with open(path, 'rb') as handle:
        data = handle.read()

    if data.startswith(MAGIC):
        return unpack_code(data)

    try:
        return code_from_dict(json.loads(data.decode('utf-8')))
    except (ValueError, AttributeError) as ex:
        raise CodecError("%s: %s" % (path, ex))


def _read_word(path, field):
    """Load a received word, binary or one element per line."""

    with open(path, 'rb') as handle:
        data = handle.read()

    if data.startswith(MAGIC):
        return unpack_word(data, field)

    try:
        return parse_word_text(data.decode('utf-8'), field)
    except UnicodeDecodeError as ex:
        raise CodecError("%s: %s" % (path, ex))


def pa_simulate(args, cmd):
    """ Simulate parser method. """

    parser = ArgumentParser(usage=USAGE.format(cmd), description=DESCS[cmd])
    _add_code_args(parser)
    _add_campaign_args(parser)
    parser.add_argument("--out", default=None,
                        help="CSV file or directory (default: stdout)")
    return parser.parse_args(args)


def pa_bound(args, cmd):
    """ Bound parser method. """

    parser = ArgumentParser(usage=USAGE.format(cmd), description=DESCS[cmd])
    _add_code_args(parser)
    parser.add_argument("--t-min", type=int, default=0)
    parser.add_argument("--t-max", type=int, default=None)
    parser.add_argument("--out", default=None)
    return parser.parse_args(args)


def pa_decode(args, cmd):
    """ Decode parser method. """

    usage = "%s --code <file> --word <file>" % USAGE.format(cmd)
    parser = ArgumentParser(usage=usage, description=DESCS[cmd])
    parser.add_argument("--code", required=True)
    parser.add_argument("--word", required=True)
    return parser.parse_args(args)


def pa_keygen(args, cmd):
    """ Keygen parser method. """

    parser = ArgumentParser(usage=USAGE.format(cmd), description=DESCS[cmd])
    _add_code_args(parser)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("json", "binary"),
                        default="json")
    parser.add_argument("--out", default=None)
    return parser.parse_args(args)


def pa_family(args, cmd):
    """ Family parser method. """

    usage = "%s --out <dir>" % USAGE.format(cmd)
    parser = ArgumentParser(usage=usage, description=DESCS[cmd])
    _add_field_args(parser)
    parser.add_argument("--lambda", dest="lam", type=int, default=2)
    _add_campaign_args(parser)
    parser.add_argument("--out", required=True)
    return parser.parse_args(args)


def pa_help(args, cmd):
    """ Help option parser. """

    usage = "%s <cmd>" % USAGE.format(cmd)
    parser = ArgumentParser(usage=usage)
    parser.add_argument("command", nargs="?")
    return parser.parse_args(args)


def do_help(options, args):
    """ Help execute method. """

    if args.command is None:
        print(_HELP_TEXT)
        print_available_cmds()
        return EXIT_OK

    try:
        (parse_args, _) = CMDS[args.command]
    except KeyError:
        print("Invalid command: %s is an unknown command." % args.command)
        print_available_cmds()
        return EXIT_USAGE

    parse_args(['--help'], args.command)

    return EXIT_OK


def do_simulate(options, args):
    """ Run one campaign and write its CSV. """

    params = _code_params(args)
    cfg = SimConfig(params, _t_range(args, params),
                    stop_failures=args.stop_failures,
                    max_trials=args.max_trials,
                    master_seed=args.seed,
                    workers=args.workers)

    records = run_campaign(cfg)
    write_csv(records, result_path(args.out, params, args.seed))

    if options.db:
        store_campaign(cfg, records, options.db)

    return EXIT_OK


def do_bound(options, args):
    """ Write the union bound terms for a t range. """

    params = _code_params(args)
    write_bound_csv(bound_table(params, _t_range(args, params)), args.out)

    return EXIT_OK


def do_decode(options, args):
    """ Decode one received word and print the outcome as JSON. """

    code = _read_code(args.code)
    word = _read_word(args.word, code.field)

    print(dumps(decode(code, word), sort_keys=True))

    return EXIT_OK


def do_keygen(options, args):
    """ Generate a code and serialize it. """

    params = _code_params(args)
    code = keygen(params, np.random.default_rng(args.seed))

    if args.format == "binary":
        data = pack_code(code)
    else:
        data = (dumps(code, sort_keys=True) + "\n").encode('utf-8')

    if args.out is None or args.out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(args.out, 'wb') as handle:
            handle.write(data)

    return EXIT_OK


def do_family(options, args):
    """ Run a campaign for every member of the N=32, R=1/2 family. """

    if not os.path.isdir(args.out):
        raise ParameterError("not a directory: %s" % args.out)

    field = FieldParams(args.q, args.m, args.modulus)

    for params in interleaving_family(field, args.lam):

        cfg = SimConfig(params, _t_range(args, params),
                        stop_failures=args.stop_failures,
                        max_trials=args.max_trials,
                        master_seed=args.seed,
                        workers=args.workers)

        LOG.info("Running %r", params)

        records = run_campaign(cfg)
        write_csv(records, os.path.join(args.out,
                                        result_filename(params, args.seed)))

        if options.db:
            store_campaign(cfg, records, options.db)

    return EXIT_OK


CMDS = {
    'help': (pa_help, do_help),
    'simulate': (pa_simulate, do_simulate),
    'bound': (pa_bound, do_bound),
    'decode': (pa_decode, do_decode),
    'keygen': (pa_keygen, do_keygen),
    'family': (pa_family, do_family),
}


USAGE = "%(prog)s {0}"


DESCS = {
    'help': "Print help message.",
    'simulate': "Run a decoding failure rate campaign.",
    'bound': "Print the union bound on the failure rate.",
    'decode': "Decode one received word.",
    'keygen': "Generate and serialize a code.",
    'family': "Run campaigns over the N=32, R=1/2 family.",
}


def print_available_cmds():
    """ Print list of available commands. """

    cmds = [x for x in CMDS.keys()]
    cmds.remove('help')
    cmds.sort()
    print("\nAvailable commands are: ")
    for cmd in cmds:
        print("   {0:25}     {1:10}".format(cmd, DESCS[cmd]))
    print("\nSee '%s help <command>' for more info." % sys.argv[0])


def parse_global_args(arglist, options):
    """ Parse global arguments list. """

    while len(arglist) != 0 and arglist[0] not in CMDS:

        arg = arglist.pop(0)

        if arg in ("-h", "--help"):
            print(_HELP_TEXT)
            print_available_cmds()
            raise SystemExit(EXIT_OK)

        if not arg.startswith("--"):
            LOG.error("Unknown command: %s", arg)
            return False

        toks = arg[2:].split("=", 1)
        value = toks[1] if len(toks) == 2 else True

        if options.set(toks[0], value) is False:
            return False

    return True


def cli_main(argv=None):
    """ Parse argument list, execute command and return the exit code. """

    argv = list(sys.argv[1:] if argv is None else argv)
    options = LrpcOptions()

    try:

        if not parse_global_args(argv, options):
            print_available_cmds()
            return EXIT_USAGE

        if not _setup_logging(options):
            return EXIT_USAGE

        if len(argv) < 1:
            print(_HELP_TEXT)
            print_available_cmds()
            return EXIT_USAGE

        (parse_args, do_func) = CMDS[argv[0]]
        args = parse_args(argv[1:], argv[0])

        return do_func(options, args)

    except SystemExit as ex:
        return ex.code if isinstance(ex.code, int) else EXIT_USAGE

    except (ParameterError, CodecError) as ex:
        LOG.error("%s", ex)
        return EXIT_USAGE

    except ConstructionError as ex:
        LOG.error("%s", ex)
        return EXIT_CONSTRUCTION

    except OSError as ex:
        LOG.error("%s", ex)
        return EXIT_USAGE


def main():
    """ Run the command line and exit with its code. """

    sys.exit(cli_main())


if __name__ == "__main__":
    main()
