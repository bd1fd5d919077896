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


import os
import shutil
import socket
import tempfile
import threading
import unittest
from fractions import Fraction as F

import numpy as np

from RansomNeg import Settings
from RansomNeg.Basic.Config import configFile
from RansomNeg.Circuit.MechanismCircuit import buildMechanismCircuit
from RansomNeg.Crypto import Garbling
from RansomNeg.Crypto.ObliviousTransfer import otSender
from RansomNeg.Mechanism.Mechanism import mechanismParams, scaledParams, \
    report, outcomeFixed, mechanismOutcome
from RansomNeg.Protocol import Session, Wire
from RansomNeg.Protocol.Session import negotiationConfig, victimListener, \
    victimSession, attackerSession, runAttacker, runVictim
from RansomNeg.Protocol.Transcript import sessionTranscript
from RansomNeg.Protocol.Wire import negotiationAbort, transportFailure

def negotiate(params, thetaV, thetaA, victimSeed=None, attackerSeed=None,
              victimClass=victimSession, attackerClass=attackerSession,
              attackerParams=None):
    """
    Runs one negotiation on loopback. Returns the result or exception of
    each side.
    """
    victim = negotiationConfig(params, thetaV, 'victim')
    outcome = {}
    with victimListener(victim, ('127.0.0.1', 0)) as listener:
        listener.sessionClass = victimClass
        attacker = negotiationConfig(attackerParams or params, thetaA,
                                     'attacker', address=listener.address)

        def serve():
            try:
                outcome['victim'] = listener.serveOne(victimSeed)
            except (negotiationAbort, transportFailure) as e:
                outcome['victim'] = e

        thread = threading.Thread(target=serve)
        thread.start()
        try:
            outcome['attacker'] = runAttacker(attacker, attackerSeed,
                                              sessionClass=attackerClass)
        except (negotiationAbort, transportFailure) as e:
            outcome['attacker'] = e
        thread.join()
    return outcome['victim'], outcome['attacker']

class tamperedTableVictim(victimSession):

    def sendCircuit(self, gc):
        tables = [[r ^ 0xff for r in rows] for rows in gc.tables]
        victimSession.sendCircuit(self, Garbling.garbledCircuit(
            gc.baseDigest, gc.gateCount, tables, gc.decode))

class wrongProfileVictim(victimSession):

    def garbleCircuit(self):
        self.stage('step2')
        other = mechanismParams.fromQ(F(1, 8), self.params.kTheta, self.params.k)
        circ = buildMechanismCircuit(other)
        gc, inputLabels, outputLabels = Garbling.garble(circ)
        return circ, gc, inputLabels, outputLabels

class forgingAttacker(attackerSession):

    def sendOutput(self, labels):
        attackerSession.sendOutput(self, [l ^ (1 << 100) for l in labels])

class droppingVictim(victimSession):

    def serveTransfer(self, inputLabels):
        self.stage('step3')
        sender = otSender(inputLabels[self.ownWidth():], self.source.derive('ot'))
        self.channel.send(Wire.OT_MSG1, sender.firstMessage())
        self.channel.sock.shutdown(socket.SHUT_RDWR)
        raise transportFailure('step3', "dropped on purpose")

class impatientAttacker(attackerSession):

    def acknowledgeProfile(self):
        self.stage('step1')
        self.channel.expect(Wire.HELLO)
        self.channel.send(Wire.OUTPUT_LABELS, b"\x00" * 16)
        self.channel.expect(Wire.CIRCUIT)

class HonestRuns(unittest.TestCase):

    def testSeededRuns(self):
        """
        Both parties agree on the fixed-point outcome of the combined coins
        """
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        scaled = scaledParams.fromParams(params)
        rng = np.random.default_rng(51)
        for run in range(500):
            thetaV, thetaA = (int(x) for x in rng.integers(0, 16, 2))
            victim, attacker = negotiate(params, thetaV, thetaA,
                                         b"victim %i" % run, b"attacker %i" % run)
            self.assertIsInstance(victim, Session.sessionResult)
            self.assertIsInstance(attacker, Session.sessionResult)
            s0 = victim.shares[0] ^ attacker.shares[0]
            s1 = victim.shares[1] ^ attacker.shares[1]
            expected = outcomeFixed(params, scaled, report(thetaV, thetaA), s0, s1)
            self.assertEqual(expected, victim.outcome)
            self.assertEqual(expected, attacker.outcome)

    def testDefaultWidths(self):
        params = mechanismParams.fromQ(F(1, 4), 8, 8)
        victim, attacker = negotiate(params, 200, 10)
        self.assertEqual(victim.outcome, attacker.outcome)
        self.assertTrue(attacker.alpha)
        self.assertIn(attacker.rF, (50, 200))
        self.assertIsNone(attacker.shares)

    def testTranscripts(self):
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        victim, attacker = negotiate(params, 12, 3, b"v", b"a")
        kinds = ['HELLO', 'PI_ACK', 'CIRCUIT', 'GARBLER_INPUT_LABELS',
                 'OT_MSG1', 'OT_MSG2', 'OT_MSG3', 'OUTPUT_LABELS', 'RESULT_ACK']
        self.assertEqual(kinds, victim.transcript.kinds())
        self.assertEqual(kinds, attacker.transcript.kinds())
        self.assertEqual(victim.transcript.payloadDigests(),
                         attacker.transcript.payloadDigests())
        self.assertEqual(['sent', 'received'],
                         [r.direction for r in victim.transcript][:2])

    def testSeededDeterminism(self):
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        first = negotiate(params, 9, 4, b"v", b"a")
        second = negotiate(params, 9, 4, b"v", b"a")
        for a, b in zip(first, second):
            self.assertEqual(a.outcome, b.outcome)
            self.assertEqual(a.shares, b.shares)
            self.assertEqual(a.transcript.payloadDigests(),
                             b.transcript.payloadDigests())

    def testLengthsHideReports(self):
        """
        Message lengths do not depend on the attacker's report
        """
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        lengths = set()
        for thetaA in (0, 7, 15):
            victim, attacker = negotiate(params, 10, thetaA, b"v", b"a")
            lengths.add(tuple(victim.transcript.lengths()))
            lengths.add(tuple(attacker.transcript.lengths()))
        self.assertEqual(2, len(lengths))

    def testThreadedListener(self):
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        victim = negotiationConfig(params, 12, 'victim')
        with victimListener(victim, ('127.0.0.1', 0)) as listener:
            attacker = negotiationConfig(params, 3, 'attacker',
                                         address=listener.address)
            server = threading.Thread(target=lambda: [
                t.join() for t in listener.serve(3)])
            server.start()
            results = [runAttacker(attacker) for _ in range(3)]
            server.join()
        self.assertEqual(3, len(listener.results))
        self.assertEqual([], listener.errors)
        self.assertEqual(sorted(r.rF for r in results),
                         sorted(r.rF for r in listener.results))

class Tampering(unittest.TestCase):

    params = mechanismParams.fromQ(F(1, 4), 4, 4)

    def assertAbort(self, error, stage, remote=None):
        self.assertIsInstance(error, negotiationAbort)
        self.assertEqual(stage, error.stage)
        if remote is not None:
            self.assertEqual(remote, error.remote)

    def testModifiedTable(self):
        victim, attacker = negotiate(self.params, 12, 3,
                                     victimClass=tamperedTableVictim)
        self.assertAbort(attacker, 'step4', remote=False)
        self.assertTrue(attacker.transcript.endsWithAbort())
        self.assertAbort(victim, 'step4', remote=True)

    def testWrongProfileCircuit(self):
        victim, attacker = negotiate(self.params, 12, 3,
                                     victimClass=wrongProfileVictim)
        self.assertAbort(attacker, 'step4', remote=False)
        self.assertNotIn('OT_MSG2', attacker.transcript.kinds())
        self.assertIsInstance(victim, (negotiationAbort, transportFailure))

    def testForgedOutputLabels(self):
        victim, attacker = negotiate(self.params, 12, 3,
                                     attackerClass=forgingAttacker)
        self.assertAbort(victim, 'step5', remote=False)
        self.assertTrue(victim.transcript.endsWithAbort())
        self.assertAbort(attacker, 'step5', remote=True)

    def testProfileMismatch(self):
        victim, attacker = negotiate(
            self.params, 12, 3,
            attackerParams=mechanismParams.fromQ(F(1, 8), 4, 4))
        self.assertAbort(attacker, 'step1', remote=False)
        self.assertAbort(victim, 'step1', remote=True)

    def testUnexpectedMessage(self):
        victim, attacker = negotiate(self.params, 12, 3,
                                     attackerClass=impatientAttacker)
        self.assertAbort(victim, 'step1', remote=False)
        self.assertTrue(victim.transcript.endsWithAbort())
        self.assertAbort(attacker, 'step1', remote=True)

    def testConnectionDrop(self):
        victim, attacker = negotiate(self.params, 12, 3,
                                     victimClass=droppingVictim)
        self.assertIsInstance(attacker, transportFailure)
        self.assertEqual('step3', attacker.stage)
        self.assertIsInstance(victim, transportFailure)

    def testNoVictim(self):
        with victimListener(negotiationConfig(self.params, 1, 'victim'),
                            ('127.0.0.1', 0)) as listener:
            address = listener.address
        attacker = negotiationConfig(self.params, 1, 'attacker', address=address)
        self.assertRaises(transportFailure, runAttacker, attacker)

    def testNoAttacker(self):
        victim = negotiationConfig(self.params, 1, 'victim')
        with victimListener(victim, ('127.0.0.1', 0),
                            acceptTimeout=0.2) as listener:
            try:
                listener.serve(1)
            except transportFailure as e:
                self.assertEqual('step1', e.stage)
            else:
                self.fail("serve returned without a connection")
            self.assertRaises(transportFailure, listener.serveOne)

    def testAcceptTimeout(self):
        victim = negotiationConfig(self.params, 1, 'victim')
        with victimListener(victim, ('127.0.0.1', 0)) as listener:
            self.assertEqual(Settings.acceptTimeout, listener.acceptTimeout)
        self.assertGreater(Settings.acceptTimeout, Settings.stepTimeout)

class Configuration(unittest.TestCase):

    entries = {'blocks': '4, 4, 4, 4', 'tail': '0', 'r_max': '10',
               'r_min': '2.5', 'q': '1/4', 'k': '8', 'k_theta': '8',
               't_e': '1.5'}

    def testDefaultReports(self):
        cfg = configFile(entries=self.entries)
        victim = negotiationConfig.fromConfig(cfg, 'victim')
        attacker = negotiationConfig.fromConfig(cfg, 'attacker')
        self.assertEqual(10, victim.theta)
        self.assertEqual(3, attacker.theta)
        self.assertEqual(F(3, 2), victim.tE)
        self.assertEqual("q=1/4;p_bar=2/3;k=8;k_theta=8;t_e=3/2",
                         victim.profileText())

    def testHexReport(self):
        cfg = configFile(entries=dict(self.entries, theta_hex='0x1f'))
        self.assertEqual(31, negotiationConfig.fromConfig(cfg, 'victim').theta)
        self.assertEqual(31, negotiationConfig.fromConfig(cfg, 'attacker').theta)

    def testInvalid(self):
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        self.assertRaises(ValueError, negotiationConfig, params, 16, 'victim')
        self.assertRaises(ValueError, negotiationConfig, params, 1, 'judge')

    def testPacking(self):
        data = Session.packResult(mechanismOutcome.fromPayment(200))
        self.assertEqual(10, len(data))
        self.assertEqual((200, True, False), Session.unpackResult(data))
        self.assertEqual((0, True, True), Session.unpackResult(
            Session.packResult(mechanismOutcome.fromPayment(0, sigma=True))))
        labels = [1, 2**128 - 1, 12345]
        self.assertEqual(labels, Session.unpackLabels(
            Session.packLabels(labels), 3))
        self.assertRaises(ValueError, Session.unpackLabels, b"\x00" * 15, 1)

class Persistence(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def testRunVictimSavesTranscripts(self):
        params = mechanismParams.fromQ(F(1, 4), 4, 4)
        victimPath = os.path.join(self.directory, "victim.log")
        attackerPath = os.path.join(self.directory, "attacker.log")
        victim = negotiationConfig(params, 12, 'victim')
        with victimListener(victim, ('127.0.0.1', 0)) as listener:
            attacker = negotiationConfig(params, 3, 'attacker',
                                         address=listener.address)
            results = {}
            thread = threading.Thread(target=lambda: results.update(
                victim=runVictim(victim, b"v", victimPath, listener)))
            thread.start()
            results['attacker'] = runAttacker(attacker, b"a", attackerPath)
            thread.join()
        self.assertEqual(results['victim'].transcript,
                         sessionTranscript.load(victimPath))
        self.assertEqual(results['attacker'].transcript,
                         sessionTranscript.load(attackerPath))


if __name__ == "__main__":
    unittest.main()
