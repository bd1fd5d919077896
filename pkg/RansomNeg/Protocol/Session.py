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


import logging
import math
import socket
import struct
import threading
from fractions import Fraction

from RansomNeg import Constants, Settings
from RansomNeg.Basic.Utilities import toBits
from RansomNeg.Circuit.MechanismCircuit import buildMechanismCircuit, \
    decodeOutcome
from RansomNeg.Crypto import Garbling
from RansomNeg.Crypto.Entropy import randomSource
from RansomNeg.Crypto.ObliviousTransfer import otSender, otReceiver
from RansomNeg.Game.LossModel import lossProfile
from RansomNeg.Mechanism.Mechanism import mechanismParams
from RansomNeg.Protocol import Wire
from RansomNeg.Protocol.Transcript import sessionTranscript
from RansomNeg.Protocol.Wire import negotiationAbort, transportFailure

"""
The five step negotiation over TCP. The victim listens, garbles and serves
the oblivious transfers; the attacker connects and evaluates.

    1. The victim proposes the strategy profile, the attacker acknowledges.
    2. The victim garbles the mechanism circuit and sends it.
    3. The victim sends the labels of its inputs; the attacker fetches
       its own labels by oblivious transfer.
    4. The attacker rebuilds the circuit, compares digests, evaluates and
       reads the outcome.
    5. The attacker returns the output labels, the victim checks them and
       acknowledges the result.
"""

log = logging.getLogger(__name__)

class negotiationConfig():
    """
    Settings of one party.

    :param params: Agreed mechanism parameters
    :type params: :class:`~RansomNeg.Mechanism.Mechanism.mechanismParams`
    :param theta: Private report, an integer below :math:`2^{k_\\theta}`
    :type theta: int
    :param role: 'victim' or 'attacker'
    :param tE: Agreed exchange time
    :type tE: Fraction
    :param address: Listen or peer address
    :type address: tuple
    """

    def __init__(self, params, theta, role, tE=0, address=None):
        if role not in ('victim', 'attacker'):
            raise ValueError("Unknown role %s" % role)
        self.params = params
        self.theta = int(theta)
        self.role = role
        self.tE = Fraction(tE)
        self.address = address if address is not None else Settings.listenAddress

        if not 0 <= self.theta < (1 << params.kTheta):
            raise ValueError("Report %i does not fit %i bits"
                             % (self.theta, params.kTheta))

    def __repr__(self):
        return "negotiationConfig(%s, %r, tE=%s)" % (self.role, self.params,
                                                     self.tE)

    @classmethod
    def fromConfig(cls, cfg, role, address=None):
        """
        Reads the mechanism keys, ``t_e`` and the report. The report is
        ``theta_hex`` if present. Otherwise a victim reports
        :math:`\\lfloor \\psi(t_e) \\rfloor` from the loss profile and an
        attacker :math:`\\lceil r_{min} \\rceil`.
        """
        params = mechanismParams.fromConfig(cfg)
        tE = cfg.fraction('t_e', 0)
        if 'theta_hex' in cfg:
            theta = cfg.hexInteger('theta_hex')
        elif role == 'victim':
            profile = lossProfile.fromConfig(cfg)
            value = profile.residualValueAt(tE)
            if 'r_max' in cfg:
                value = min(value, cfg.fraction('r_max'))
            theta = math.floor(value)
        else:
            theta = math.ceil(cfg.fraction('r_min'))
        return cls(params, theta, role, tE, address)

    def profileText(self):
        """
        Text of the proposal in the handshake.
        """
        return "%s;t_e=%s" % (self.params.describe(), self.tE)

class sessionResult():
    """
    Outcome of a finished negotiation as seen by one party.

    :param shares: This party's random words (s0, s1), kept only for seeded
        runs
    """

    def __init__(self, outcome, transcript, shares=None):
        self.outcome = outcome
        self.transcript = transcript
        self.shares = shares

    @property
    def rF(self):
        return self.outcome.rF

    @property
    def alpha(self):
        return self.outcome.alpha

    @property
    def sigma(self):
        return self.outcome.sigma

    def __repr__(self):
        return "sessionResult(%r)" % self.outcome

def packLabels(labels):
    return b"".join(Garbling.toBlock(l) for l in labels)

def unpackLabels(data, count):
    size = Constants.labelBytes
    if len(data) != count * size:
        raise ValueError("Expected %i labels" % count)
    return [Garbling.fromBlock(data[i*size:(i+1)*size]) for i in range(count)]

def packResult(outcome):
    """
    Fixed size form of the outcome for RESULT_ACK.
    """
    return struct.pack("<QBB", int(outcome.rF), outcome.alpha, outcome.sigma)

def unpackResult(data):
    rF, alpha, sigma = struct.unpack("<QBB", data)
    return rF, bool(alpha), bool(sigma)

class _session():
    """
    Shared state of both roles.
    """

    def __init__(self, config, sock, source=None, transcript=None):
        self.config = config
        self.params = config.params
        self.source = source if source is not None else randomSource()
        self.transcript = transcript if transcript is not None \
            else sessionTranscript()
        self.channel = Wire.messenger(sock, self.transcript, Settings.stepTimeout)
        self.shares = None

    def stage(self, name):
        self.channel.stage = name

    def drawShares(self):
        """
        This party's k-bit words :math:`S_0` and :math:`S_1`.
        """
        shares = self.source.derive('shares')
        k = self.params.k
        self.shares = (shares.integer(k), shares.integer(k))
        if self.source.seeded:
            log.debug("%s shares s0=%i s1=%i", self.config.role, *self.shares)
        return self.shares

    def inputBits(self):
        s0, s1 = self.shares
        k, kTheta = self.params.k, self.params.kTheta
        return toBits(s0, k) + toBits(s1, k) + toBits(self.config.theta, kTheta)

    def result(self, outcome):
        shares = self.shares if self.source.seeded else None
        log.info("%s finished with %r", self.config.role, outcome)
        return sessionResult(outcome, self.transcript, shares)

    def run(self):
        try:
            return self.steps()
        finally:
            self.channel.close()

class victimSession(_session):
    """
    Garbler side. The steps are separate methods so that tests can replace
    single steps.
    """

    def steps(self):
        self.proposeProfile()
        self.drawShares()
        circ, gc, inputLabels, outputLabels = self.garbleCircuit()
        self.sendCircuit(gc)
        self.sendInputLabels(inputLabels)
        self.serveTransfer(inputLabels)
        outcome = self.checkOutput(circ, outputLabels)
        self.acknowledge(outcome)
        return self.result(outcome)

    def proposeProfile(self):
        self.stage('step1')
        self.channel.send(Wire.HELLO, self.config.profileText().encode("ascii"))
        self.channel.expect(Wire.PI_ACK)

    def garbleCircuit(self):
        self.stage('step2')
        circ = buildMechanismCircuit(self.params)
        gc, inputLabels, outputLabels = Garbling.garble(
            circ, source=self.source.derive('garbling'))
        return circ, gc, inputLabels, outputLabels

    def sendCircuit(self, gc):
        self.stage('step2')
        self.channel.send(Wire.CIRCUIT, gc.serialize())

    def ownWidth(self):
        return 2*self.params.k + self.params.kTheta

    def sendInputLabels(self, inputLabels):
        self.stage('step3')
        own = inputLabels[:self.ownWidth()]
        self.channel.send(Wire.GARBLER_INPUT_LABELS, packLabels(
            Garbling.encodeInputs(own, self.inputBits())))

    def serveTransfer(self, inputLabels):
        self.stage('step3')
        sender = otSender(inputLabels[self.ownWidth():],
                          self.source.derive('ot'))
        self.channel.send(Wire.OT_MSG1, sender.firstMessage())
        request = self.channel.expect(Wire.OT_MSG2)
        try:
            answer = sender.respond(request)
        except ValueError as e:
            self.channel.abort("bad transfer request: %s" % e)
        self.channel.send(Wire.OT_MSG3, answer)

    def checkOutput(self, circ, outputLabels):
        """
        Verifies the labels returned by the attacker against the garbler's
        own label pairs.
        """
        self.stage('step5')
        payload = self.channel.expect(Wire.OUTPUT_LABELS)
        try:
            labels = unpackLabels(payload, len(outputLabels))
            bits = Garbling.verifyOutputLabels(outputLabels, labels)
        except ValueError as e:
            self.channel.abort("invalid output labels: %s" % e)
        return decodeOutcome(circ.decodeOutputs(bits))

    def acknowledge(self, outcome):
        self.stage('step5')
        self.channel.send(Wire.RESULT_ACK,
                          packResult(outcome))

class attackerSession(_session):
    """
    Evaluator side.
    """

    def steps(self):
        self.acknowledgeProfile()
        self.drawShares()
        gc = self.receiveCircuit()
        circ = self.checkCircuit(gc)
        garblerLabels = self.receiveInputLabels()
        ownLabels = self.requestTransfer()
        labels = self.evaluateCircuit(gc, circ, garblerLabels + ownLabels)
        outcome = self.readOutcome(gc, circ, labels)
        self.sendOutput(labels)
        self.awaitResult(outcome)
        return self.result(outcome)

    def acknowledgeProfile(self):
        self.stage('step1')
        proposal = self.channel.expect(Wire.HELLO).decode("ascii", "replace")
        expected = self.config.profileText()
        if proposal != expected:
            self.channel.abort("profile %s, expected %s" % (proposal, expected))
        self.channel.send(Wire.PI_ACK)

    def receiveCircuit(self):
        self.stage('step2')
        payload = self.channel.expect(Wire.CIRCUIT)
        try:
            return Garbling.garbledCircuit.deserialize(payload)
        except ValueError as e:
            self.channel.abort("malformed circuit: %s" % e)

    def checkCircuit(self, gc):
        """
        Rebuilds the circuit from the agreed profile and compares digests
        before anything is evaluated.
        """
        self.stage('step4')
        circ = buildMechanismCircuit(self.params)
        if circ.digest() != gc.baseDigest:
            self.channel.abort("circuit does not match the agreed mechanism")
        return circ

    def ownWidth(self):
        return 2*self.params.k + self.params.kTheta

    def receiveInputLabels(self):
        self.stage('step3')
        payload = self.channel.expect(Wire.GARBLER_INPUT_LABELS)
        try:
            return unpackLabels(payload, self.ownWidth())
        except ValueError as e:
            self.channel.abort(str(e))

    def requestTransfer(self):
        self.stage('step3')
        receiver = otReceiver(self.inputBits(), self.source.derive('ot'))
        first = self.channel.expect(Wire.OT_MSG1)
        try:
            request = receiver.respond(first)
        except ValueError as e:
            self.channel.abort("bad transfer message: %s" % e)
        self.channel.send(Wire.OT_MSG2, request)
        answer = self.channel.expect(Wire.OT_MSG3)
        try:
            return receiver.finish(answer)
        except ValueError as e:
            self.channel.abort("bad transfer answer: %s" % e)

    def evaluateCircuit(self, gc, circ, inputLabels):
        self.stage('step4')
        try:
            return Garbling.evaluate(gc, circ, inputLabels)
        except ValueError as e:
            self.channel.abort(str(e))

    def readOutcome(self, gc, circ, labels):
        self.stage('step4')
        try:
            bits, _ = Garbling.decodeAndProve(gc, labels)
        except Garbling.invalidOutputLabel as e:
            self.channel.abort(str(e))
        return decodeOutcome(circ.decodeOutputs(bits))

    def sendOutput(self, labels):
        self.stage('step5')
        self.channel.send(Wire.OUTPUT_LABELS, packLabels(labels))

    def awaitResult(self, outcome):
        self.stage('step5')
        payload = self.channel.expect(Wire.RESULT_ACK)
        try:
            confirmed = unpackResult(payload)
        except struct.error:
            self.channel.abort("malformed result")
        if confirmed != (int(outcome.rF), outcome.alpha, outcome.sigma):
            self.channel.abort("victim reports a different outcome")

class victimListener():
    """
    Listening socket of the victim. Each accepted connection runs one
    independent :class:`victimSession`.

    :param config: Victim settings
    :type config: :class:`negotiationConfig`
    :param address: Address to bind, port 0 picks a free port
    :type address: tuple
    :param acceptTimeout: Seconds to wait for each connection, Default =
        :data:`RansomNeg.Settings.acceptTimeout`
    :type acceptTimeout: float
    """

    sessionClass = victimSession

    def __init__(self, config, address=None, acceptTimeout=None):
        self.config = config
        self.acceptTimeout = acceptTimeout if acceptTimeout is not None \
            else Settings.acceptTimeout
        self.sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        self.sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        self.sock.bind(address if address is not None else config.address)
        self.sock.listen(8)
        self.results = []
        self.errors = []
        self._lock = threading.Lock()

    def __enter__(self):
        return self

    def __exit__(self, *args):
        self.close()

    @property
    def address(self):
        return self.sock.getsockname()

    def serveOne(self, seed=None, transcript=None):
        """
        Accepts one connection and runs the session in this thread.

        :rtype: :class:`sessionResult`
        """
        conn = self.accept()
        return self.sessionClass(self.config, conn, randomSource(seed),
                                 transcript).run()

    def accept(self):
        """
        Waits :attr:`acceptTimeout` seconds for the next attacker.

        :raises transportFailure: if nobody connects in time
        """
        self.sock.settimeout(self.acceptTimeout)
        try:
            conn, peer = self.sock.accept()
        except socket.timeout:
            raise transportFailure('step1', "no attacker connected within %g s"
                                   % self.acceptTimeout)
        except OSError as e:
            raise transportFailure('step1', str(e))
        log.debug("Accepted %s", peer)
        return conn

    def _serveThread(self, conn, seed):
        try:
            result = self.sessionClass(self.config, conn, randomSource(seed)).run()
            with self._lock:
                self.results.append(result)
        except (negotiationAbort, transportFailure) as e:
            with self._lock:
                self.errors.append(e)

    def serve(self, count, seed=None):
        """
        Accepts count connections and runs a thread per session. Results and
        errors are collected in :attr:`results` and :attr:`errors`.

        :returns: Session threads
        :rtype: list
        """
        threads = []
        for _ in range(count):
            conn = self.accept()
            thread = threading.Thread(target=self._serveThread, args=(conn, seed))
            thread.start()
            threads.append(thread)
        return threads

    def close(self):
        self.sock.close()

def connect(address):
    try:
        return socket.create_connection(address, timeout=Settings.stepTimeout)
    except OSError as e:
        raise transportFailure('step1', "cannot connect to %s:%s: %s"
                               % (address[0], address[1], e))

def runVictim(config, seed=None, transcriptPath=None, listener=None):
    """
    Listens on the configured address and negotiates with one attacker.

    :rtype: :class:`sessionResult`
    """
    own = listener is None
    if own:
        listener = victimListener(config)
    transcript = sessionTranscript()
    try:
        return listener.serveOne(seed, transcript)
    finally:
        if own:
            listener.close()
        if transcriptPath:
            transcript.save(transcriptPath)

def runAttacker(config, seed=None, transcriptPath=None, sessionClass=attackerSession):
    """
    Connects to the victim and negotiates.

    :rtype: :class:`sessionResult`
    """
    transcript = sessionTranscript()
    try:
        sock = connect(config.address)
        return sessionClass(config, sock, randomSource(seed), transcript).run()
    finally:
        if transcriptPath:
            transcript.save(transcriptPath)
