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
import socket
import struct

"""
Framing of protocol messages: a 4-byte little-endian payload length, a
1-byte message type and the payload.
"""

log = logging.getLogger(__name__)

HELLO = 1
PI_ACK = 2
CIRCUIT = 3
GARBLER_INPUT_LABELS = 4
OT_MSG1 = 5
OT_MSG2 = 6
OT_MSG3 = 7
OUTPUT_LABELS = 8
RESULT_ACK = 9
ABORT = 10

messageNames = {
    HELLO: 'HELLO',
    PI_ACK: 'PI_ACK',
    CIRCUIT: 'CIRCUIT',
    GARBLER_INPUT_LABELS: 'GARBLER_INPUT_LABELS',
    OT_MSG1: 'OT_MSG1',
    OT_MSG2: 'OT_MSG2',
    OT_MSG3: 'OT_MSG3',
    OUTPUT_LABELS: 'OUTPUT_LABELS',
    RESULT_ACK: 'RESULT_ACK',
    ABORT: 'ABORT'
    }

maxPayload = 1 << 26
"""
Largest payload accepted from the peer, in bytes.

:type: int
"""

class negotiationAbort(Exception):
    """
    The negotiation stopped at a protocol check, on either side.

    :param stage: Protocol step, e.g. 'step4'
    :param reason: Description
    :param remote: True if the peer sent the ABORT
    """

    def __init__(self, stage, reason, remote=False, transcript=None):
        Exception.__init__(self, "Aborted at %s: %s" % (stage, reason))
        self.stage = stage
        self.reason = reason
        self.remote = remote
        self.transcript = transcript

class transportFailure(IOError):
    """
    The connection failed, no result exists.
    """

    def __init__(self, stage, reason, transcript=None):
        IOError.__init__(self, "Transport failure at %s: %s" % (stage, reason))
        self.stage = stage
        self.reason = reason
        self.transcript = transcript

def messageName(kind):
    return messageNames.get(kind, "UNKNOWN(%i)" % kind)

def frame(kind, payload):
    return struct.pack("<IB", len(payload), kind) + payload

class wireMessage():

    def __init__(self, kind, payload=b""):
        self.kind = kind
        self.payload = bytes(payload)

    def __repr__(self):
        return "%s[%i]" % (self.name, len(self.payload))

    @property
    def name(self):
        return messageName(self.kind)

class messenger():
    """
    Sends and receives framed messages on a connected socket and records
    them in a transcript.

    :param sock: Connected socket
    :param transcript: Transcript to append to
    :type transcript: :class:`~RansomNeg.Protocol.Transcript.sessionTranscript`
    :param timeout: Seconds to wait for a message
    :type timeout: float
    """

    def __init__(self, sock, transcript, timeout=None):
        self.sock = sock
        self.transcript = transcript
        self.stage = 'step1'
        if timeout is not None:
            sock.settimeout(timeout)

    def send(self, kind, payload=b""):
        try:
            self.sock.sendall(frame(kind, payload))
        except socket.timeout:
            raise negotiationAbort(self.stage, "timeout while sending",
                                   transcript=self.transcript)
        except OSError as e:
            raise transportFailure(self.stage, str(e), self.transcript)
        self.transcript.record('sent', messageName(kind), payload)
        log.debug("%s sent %s (%i bytes)", self.stage, messageName(kind),
                  len(payload))

    def _recvExact(self, length):
        chunks = []
        got = 0
        while got < length:
            try:
                chunk = self.sock.recv(min(length - got, 1 << 16))
            except socket.timeout:
                raise
            except OSError as e:
                raise transportFailure(self.stage, str(e), self.transcript)
            if not chunk:
                raise transportFailure(self.stage, "connection closed by peer",
                                       self.transcript)
            chunks.append(chunk)
            got += len(chunk)
        return b"".join(chunks)

    def recv(self):
        """
        Waits for the next message. A timeout sends ABORT to the peer.

        :rtype: :class:`wireMessage`
        """
        try:
            length, kind = struct.unpack("<IB", self._recvExact(5))
            if length > maxPayload:
                self.abort("frame of %i bytes" % length)
            payload = self._recvExact(length)
        except socket.timeout:
            self.abort("timeout")
        self.transcript.record('received', messageName(kind), payload)
        log.debug("%s received %s (%i bytes)", self.stage, messageName(kind),
                  length)
        return wireMessage(kind, payload)

    def expect(self, kind):
        """
        Receives the next message and returns its payload. An ABORT from the
        peer raises :class:`negotiationAbort`, any other unexpected message is
        answered with ABORT.

        :rtype: bytes
        """
        message = self.recv()
        if message.kind == ABORT:
            text = message.payload.decode("utf-8", "replace")
            stage, _, reason = text.partition(":")
            raise negotiationAbort(stage or self.stage, reason, remote=True,
                                   transcript=self.transcript)
        if message.kind != kind:
            self.abort("expected %s, got %s" % (messageName(kind), message.name))
        return message.payload

    def abort(self, reason, stage=None):
        """
        Sends ABORT with a stage tag if the connection still works and raises
        :class:`negotiationAbort`.
        """
        stage = stage or self.stage
        try:
            self.send(ABORT, ("%s:%s" % (stage, reason)).encode("utf-8"))
        except (transportFailure, negotiationAbort):
            pass
        log.info("Negotiation aborted at %s: %s", stage, reason)
        raise negotiationAbort(stage, reason, transcript=self.transcript)

    def close(self):
        try:
            self.sock.close()
        except OSError:
            pass
