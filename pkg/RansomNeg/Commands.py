#Copyright (C) 2026 The RansomNeg developers

#This program is free software; you can redistribute it and/or modify
#it under the terms of the GNU General Public License as published by
#the Free Software Foundation; either version 2 of the License, or
#(at your option) any later version.

#This program is distributed in the hope that it will be useful,
#but WITHOUT ANY WARRANTY; without even the implied warranty of
#MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#GNU General Public License for more details.

#You should have received a copy of the GNU General Public License
#along with this program; if not, write to the Free Software Foundation,
#Inc., 59 Temple Place, Suite 330, Boston, MA 02111-1307 USA


"""
Command line interface. The first argument selects the subcommand:

    victim, attacker      run the negotiation over TCP
    offers, horizon       solve the complete information bargaining game
    rubinstein            infinite horizon split
    mechanism eval        outcome of the mechanism for given inputs
    mechanism verify-bic  grid checks of incentive compatibility
    bench                 time negotiations over loopback
    stage-game            equilibrium of the reputation stage game
"""

import logging
import sys
from fractions import Fraction
from optparse import OptionParser

from RansomNeg import Settings
from RansomNeg.Basic.Config import configFile, toFraction
from RansomNeg.Basic.Utilities import formatMoney
from RansomNeg.Game import Bargaining, StageGame
from RansomNeg.Game.LossModel import lossProfile, victimParams
from RansomNeg.Mechanism import Incentives
from RansomNeg.Mechanism.Mechanism import mechanismParams, scaledParams, \
    report, outcomeFixed, outcomeReal
from RansomNeg.PostProcessing import Tables
from RansomNeg.Protocol import Bench, Session
from RansomNeg.Protocol.Wire import negotiationAbort, transportFailure

log = logging.getLogger(__name__)

exitSuccess = 0
exitAbort = 2
exitTransport = 3

def parseAddress(text):
    """
    Splits ``host:port``.

    :rtype: tuple
    """
    host, sep, port = text.rpartition(":")
    if not sep or not port.isdigit():
        raise ValueError("Address %s is not host:port" % text)
    return host or '127.0.0.1', int(port)

def configureLogging(verbose):
    if verbose:
        logging.basicConfig(level=logging.DEBUG, format=Settings.logFormat)

def _parser(name, usage, description=None):
    parser = OptionParser(
                            usage="usage: %%prog %s %s" % (name, usage),
                            version="%prog 1.0",
                            description=description
                        )
    parser.add_option(
                    "-v", "--verbose",
                    action="store_true",
                    dest="verbose",
                    default=False,
                    help="Log every protocol step"
                    )
    return parser

def _addProfileOptions(parser):
    parser.add_option(
                    "-c", "--config",
                    action="store",
                    dest="config",
                    type="string",
                    default=None,
                    help="Key-value file with l0, blocks, tail, r_max and r_min"
                    )
    parser.add_option(
                    "-b", "--blocks",
                    action="store",
                    dest="blocks",
                    type="string",
                    default=None,
                    help="Comma separated loss per round, e.g. \"1,1,1\""
                    )
    parser.add_option(
                    "-t", "--tail",
                    action="store",
                    dest="tail",
                    type="string",
                    default=None,
                    help="Loss after the last block (Default = 0)"
                    )
    parser.add_option(
                    "--r-max",
                    action="store",
                    dest="rMax",
                    type="string",
                    default=None,
                    help="Maximum ransom of the victim (Default = total value)"
                    )
    parser.add_option(
                    "--r-min",
                    action="store",
                    dest="rMin",
                    type="string",
                    default=None,
                    help="Minimum ransom of the attacker"
                    )

def _loadConfig(options):
    """
    Reads the config file and lets command line values override it.
    """
    overrides = {}
    for key, value in (('blocks', getattr(options, 'blocks', None)),
                       ('tail', getattr(options, 'tail', None)),
                       ('r_max', getattr(options, 'rMax', None)),
                       ('r_min', getattr(options, 'rMin', None))):
        if value is not None:
            overrides[key] = value
    return configFile(options.config, overrides)

def _loadInstance(options):
    cfg = _loadConfig(options)
    profile = lossProfile.fromConfig(cfg)
    rMax = cfg.fraction('r_max', profile.totalValue())
    return Bargaining.bargainingInstance(victimParams(rMax, profile),
                                         cfg.fraction('r_min'))

def offers(argv):
    parser = _parser("offers", "[options]",
                     "Prints the equilibrium offer of every round.")
    _addProfileOptions(parser)
    parser.add_option(
                    "-N", "--horizon",
                    action="store",
                    dest="horizon",
                    type="int",
                    default=None,
                    help="Last round, determined from r_min if omitted"
                    )
    parser.add_option(
                    "--csv",
                    action="store",
                    dest="csv",
                    type="string",
                    default=None,
                    help="Also write the schedule to this CSV file"
                    )
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)

    inst = _loadInstance(options)
    N = options.horizon if options.horizon else Bargaining.determineHorizon(inst)
    schedule = Bargaining.backwardInductionOffers(inst, N)
    if schedule != Bargaining.closedFormOffers(inst, N):
        raise ValueError("Closed form and backward induction disagree")
    Bargaining.marginalLossLint(inst.profile, N)

    print("N = %i" % N)
    print("offers: %s" % ", ".join(formatMoney(r) for r in schedule))
    print(Tables.formatSchedule(inst, N))
    if options.csv:
        with open(options.csv, "w", newline="") as f:
            Tables.scheduleCsv(inst, N, f)
    return exitSuccess

def horizon(argv):
    parser = _parser("horizon", "[options]", "Prints the last bargaining round.")
    _addProfileOptions(parser)
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)

    inst = _loadInstance(options)
    print("N = %i" % Bargaining.determineHorizon(inst))
    return exitSuccess

def rubinstein(argv):
    parser = _parser("rubinstein", "v r_max r_min",
                     "Prints the infinite horizon split.")
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)
    if len(args) != 3:
        parser.error("Expected v, r_max and r_min")

    v, rMax, rMin = (toFraction(a, name) for a, name in
                     zip(args, ('v', 'r_max', 'r_min')))
    print("r_f = %s" % formatMoney(Bargaining.rubinsteinSplit(v, rMax, rMin)))
    return exitSuccess

def _addMechanismOptions(parser):
    parser.add_option(
                    "-q",
                    action="store",
                    dest="q",
                    type="string",
                    default="1/4",
                    help="Probability q (Default = 1/4)"
                    )
    parser.add_option(
                    "-p", "--p-bar",
                    action="store",
                    dest="pBar",
                    type="string",
                    default=None,
                    help="Probability p_bar (Default = 1/(2(1-q)))"
                    )
    parser.add_option(
                    "-k",
                    action="store",
                    dest="k",
                    type="int",
                    default=Settings.k,
                    help="Bitwidth of the random words (Default = %i)"
                        % Settings.k
                    )
    parser.add_option(
                    "--k-theta",
                    action="store",
                    dest="kTheta",
                    type="int",
                    default=Settings.kTheta,
                    help="Bitwidth of the reports (Default = %i)"
                        % Settings.kTheta
                    )

def _mechanismParams(options):
    q = toFraction(options.q, 'q')
    if options.pBar is None:
        return mechanismParams.fromQ(q, options.kTheta, options.k)
    return mechanismParams(q, toFraction(options.pBar, 'p_bar'),
                           options.kTheta, options.k)

def mechanism(argv):
    if not argv or argv[0] not in ('eval', 'verify-bic'):
        print("usage: mechanism eval|verify-bic [options]", file=sys.stderr)
        return 1
    if argv[0] == 'eval':
        return mechanismEval(argv[1:])
    return mechanismVerify(argv[1:])

def mechanismEval(argv):
    parser = _parser("mechanism eval", "[options]",
                     "Evaluates the fixed-point mechanism outcome.")
    _addMechanismOptions(parser)
    for flag, dest, text in (("--theta-v", "thetaV", "Report of the victim"),
                             ("--theta-a", "thetaA", "Report of the attacker"),
                             ("--s0", "s0", "Random word of round 2"),
                             ("--s1", "s1", "Random word of round 4")):
        parser.add_option(
                    flag,
                    action="store",
                    dest=dest,
                    type="int",
                    default=0,
                    help=text
                    )
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)

    params = _mechanismParams(options)
    scaled = scaledParams.fromParams(params)
    rep = report(options.thetaV, options.thetaA)
    fixed = outcomeFixed(params, scaled, rep, options.s0, options.s1)
    scale = Fraction(1, 1 << params.k)
    real = outcomeReal(params, rep, options.s0 * scale, options.s1 * scale)

    print("%r" % scaled)
    print("r_f = %s" % formatMoney(fixed.rF))
    print("alpha = %i" % fixed.alpha)
    print("sigma = %i" % fixed.sigma)
    print("exact r_f = %s" % formatMoney(real.rF))
    return exitSuccess

def mechanismVerify(argv):
    parser = _parser("mechanism verify-bic", "[options]",
                     "Grid checks that truthful reports are optimal.")
    _addMechanismOptions(parser)
    parser.add_option(
                    "-g", "--grid",
                    action="store",
                    dest="grid",
                    type="int",
                    default=64,
                    help="Points of the attacker grid on [0,1] (Default = 64)"
                    )
    parser.add_option(
                    "-s", "--steps",
                    action="store",
                    dest="steps",
                    type="int",
                    default=1024,
                    help="Report steps of the victim grid (Default = 1024)"
                    )
    parser.add_option(
                    "-a", "--all-types",
                    action="store_true",
                    dest="allTypes",
                    default=False,
                    help="""Include attacker types whose truthful utility is
negative. These gain by reporting above the victim's report."""
                    )
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)

    params = _mechanismParams(options)
    grid = [Fraction(i, options.grid - 1) for i in range(options.grid)]
    victimReports = [Fraction(i, 8) for i in range(9)]
    attacker = Incentives.verifyAttackerDominance(
                    params, grid, victimReports,
                    rationalOnly=not options.allTypes
                    )
    thetas = [Fraction(i, 20) for i in range(21)]
    victim = Incentives.verifyVictimOptimality(params, thetas,
                                               Fraction(1, options.steps))

    print("attacker dominance: %s (worst gap %s, %i points)" % (
        "pass" if attacker else "FAIL", formatMoney(attacker.worstGap),
        attacker.checked))
    if attacker.violations:
        print("  %i violations, first at (theta_a, report_a, theta_v) = (%s)"
              % (len(attacker.violations),
                 ", ".join(formatMoney(x) for x in attacker.violations[0])))
    print("victim optimality:  %s (worst gap %s, %i points)" % (
        "pass" if victim else "FAIL", formatMoney(victim.worstGap),
        victim.checked))
    return exitSuccess if attacker and victim else 1

def bench(argv):
    parser = _parser("bench", "[options]",
                     "Times complete negotiations over loopback.")
    parser.add_option(
                    "-n", "--repetitions",
                    action="store",
                    dest="repetitions",
                    type="int",
                    default=Settings.benchRepetitions,
                    help="Runs per bitwidth pair (Default = %i)"
                        % Settings.benchRepetitions
                    )
    parser.add_option(
                    "--plot",
                    action="store",
                    dest="plot",
                    type="string",
                    default=None,
                    help="Save a plot of the medians to this file"
                    )
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)

    rows = Bench.benchmark(Settings.benchGrid, options.repetitions)
    print(Tables.timingTable(rows))
    if options.plot:
        Tables.plotTiming(rows, options.plot)
    return exitSuccess

def stageGame(argv):
    parser = _parser("stage-game", "[options]",
                     "Prints the equilibrium of the stage game.")
    for flag, dest, default, text in (
            ("--tau-g", "tauG", "0", "Trust gained by cooperating"),
            ("--tau-l", "tauL", "0", "Trust lost by defecting"),
            ("--kappa-g", "kappaG", "0", "Credibility gained by punishing"),
            ("--kappa-l", "kappaL", "0", "Credibility lost by releasing"),
            ("--c-r", "cR", "1", "Cost to release the data"),
            ("--c-d", "cD", "0", "Cost to delete the data"),
            ("--r-f", "rF", "0", "Final ransom"),
            ("--value", "value", "0", "Value of the data"),
            ("--r-max", "rMax", "0", "Maximum ransom of the victim")):
        parser.add_option(
                    flag,
                    action="store",
                    dest=dest,
                    type="string",
                    default=default,
                    help="%s (Default = %s)" % (text, default)
                    )
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)

    num = lambda name: toFraction(getattr(options, name), name)
    rep = StageGame.reputationParams(num('tauG'), num('tauL'), num('kappaG'),
                                     num('kappaL'), num('cR'), num('cD'))
    outcome = StageGame.spne(rep, num('rF'), num('value'), num('rMax'))
    held = StageGame.premises(rep)
    print("equilibrium: (%s, %s)" % outcome.actions)
    print("payoffs: victim %s, attacker %s" % (
        formatMoney(outcome.victimPayoff), formatMoney(outcome.attackerPayoff)))
    print("premises: %s" % (", ".join(k for k in sorted(held) if held[k]) or "none"))
    return exitSuccess

def _negotiate(argv, role):
    parser = _parser(role, "[options]",
                     "Runs the negotiation as the %s." % role)
    parser.add_option(
                    "-c", "--config",
                    action="store",
                    dest="config",
                    type="string",
                    default=None,
                    help="Key-value file with q, p_bar, k, k_theta, t_e and"
                        " theta_hex or the loss profile"
                    )
    parser.add_option(
                    "--listen" if role == 'victim' else "--connect",
                    action="store",
                    dest="address",
                    type="string",
                    default="%s:%i" % Settings.listenAddress,
                    help="Address as host:port (Default = %s:%i)"
                        % Settings.listenAddress
                    )
    parser.add_option(
                    "--seed",
                    action="store",
                    dest="seed",
                    type="string",
                    default=None,
                    help="Hex seed for a reproducible test run"
                    )
    parser.add_option(
                    "--transcript",
                    action="store",
                    dest="transcript",
                    type="string",
                    default=None,
                    help="Write the session transcript to this file"
                    )
    (options, args) = parser.parse_args(argv)
    configureLogging(options.verbose)
    if options.config is None:
        parser.error("A config file is required")

    config = Session.negotiationConfig.fromConfig(
        configFile(options.config), role, parseAddress(options.address))
    seed = bytes.fromhex(options.seed) if options.seed else None
    run = Session.runVictim if role == 'victim' else Session.runAttacker
    try:
        result = run(config, seed, options.transcript)
    except negotiationAbort as e:
        print("aborted at %s: %s" % (e.stage, e.reason), file=sys.stderr)
        return exitAbort
    except transportFailure as e:
        print("transport failure at %s: %s" % (e.stage, e.reason),
              file=sys.stderr)
        return exitTransport

    print("r_f = %s" % formatMoney(result.rF))
    print("alpha = %i" % result.alpha)
    print("sigma = %i" % result.sigma)
    return exitSuccess

def victim(argv):
    return _negotiate(argv, 'victim')

def attacker(argv):
    return _negotiate(argv, 'attacker')

commands = {
    'victim': victim,
    'attacker': attacker,
    'offers': offers,
    'horizon': horizon,
    'rubinstein': rubinstein,
    'mechanism': mechanism,
    'bench': bench,
    'stage-game': stageGame
    }

def main(argv=None):
    """
    Dispatches to the subcommand and returns the exit code.
    """
    if argv is None:
        argv = sys.argv[1:]
    if not argv or argv[0] not in commands:
        print("usage: ransomNeg.py {%s} [options]" % ",".join(sorted(commands)),
              file=sys.stderr)
        return 1
    try:
        return commands[argv[0]](argv[1:])
    except (ValueError, KeyError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
