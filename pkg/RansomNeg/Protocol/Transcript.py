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


import hashlib
import time

from RansomNeg import Settings

"""
Audit record of one negotiation. Every framed message sent or received is
kept as direction, type, payload length, SHA-256 of the payload and the time
it passed the socket. Payloads themselves are never stored.
"""

transcriptHeader = "# ransomneg transcript 1"

class transcriptRecord():
    """
    :param direction: 'sent' or 'received'
    :param kind: Message type name
    :param length: Payload length in bytes
    :param digest: Hex SHA-256 of the payload
    :param timestamp: Seconds since the epoch
    """

    def __init__(self, direction, kind, length, digest, timestamp):
        if direction not in ('sent', 'received'):
            raise ValueError("Unknown direction %s" % direction)
        self.direction = direction
        self.kind = kind
        self.length = int(length)
        self.digest = digest
        self.timestamp = float(timestamp)

    def __eq__(self, other):
        return self.line() == other.line()

    def __repr__(self):
        return "transcriptRecord(%s)" % self.line()

    def line(self):
        return "%s %s %i %s %r" % (self.direction, self.kind, self.length,
                                   self.digest, self.timestamp)

    @classmethod
    def fromLine(cls, line):
        fields = line.split()
        if len(fields) != 5:
            raise ValueError("Malformed transcript line: %s" % line)
        return cls(*fields)

class sessionTranscript():
    """
    Append-only list of :class:`transcriptRecord`.
    """

    def __init__(self, records=()):
        self._records = list(records)

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    def __getitem__(self, index):
        return self._records[index]

    def __eq__(self, other):
        return list(self) == list(other)

    def record(self, direction, kind, payload, timestamp=None):
        """
        Appends a message.

        :param payload: Message payload
        :type payload: bytes
        """
        if timestamp is None:
            timestamp = time.time()
        self._records.append(transcriptRecord(
            direction, kind, len(payload),
            hashlib.sha256(payload).hexdigest(), timestamp))

    def kinds(self):
        return [r.kind for r in self._records]

    def payloadDigests(self):
        return [r.digest for r in self._records]

    def lengths(self):
        return [(r.direction, r.kind, r.length) for r in self._records]

    def endsWithAbort(self):
        return bool(self._records) and self._records[-1].kind == 'ABORT'

    def save(self, path):
        """
        Writes one record per line after a comment header.
        """
        with open(path, "w") as f:
            f.write(transcriptHeader + "\n")
            for r in self._records:
                f.write(r.line() + "\n")

    @classmethod
    def load(cls, path):
        records = []
        with open(path, "r") as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith(Settings.commentSymbols):
                    continue
                records.append(transcriptRecord.fromLine(line))
        return cls(records)
