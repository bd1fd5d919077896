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
import tempfile
import unittest

from RansomNeg.Protocol.Transcript import sessionTranscript, transcriptRecord, \
    transcriptHeader

class KnownValues(unittest.TestCase):

    # sha256 of the empty string and of b"abc"
    emptyDigest = \
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    abcDigest = \
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"

    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def testRecord(self):
        t = sessionTranscript()
        t.record('sent', 'HELLO', b"abc", timestamp=1.5)
        t.record('received', 'PI_ACK', b"", timestamp=2.0)
        self.assertEqual(2, len(t))
        self.assertEqual(['HELLO', 'PI_ACK'], t.kinds())
        self.assertEqual([self.abcDigest, self.emptyDigest], t.payloadDigests())
        self.assertEqual([('sent', 'HELLO', 3), ('received', 'PI_ACK', 0)],
                         t.lengths())
        self.assertFalse(t.endsWithAbort())

    def testEndsWithAbort(self):
        t = sessionTranscript()
        self.assertFalse(t.endsWithAbort())
        t.record('sent', 'HELLO', b"x")
        t.record('received', 'ABORT', b"step1:bad")
        self.assertTrue(t.endsWithAbort())

    def testSaveLoad(self):
        t = sessionTranscript()
        t.record('sent', 'HELLO', b"abc", timestamp=1700000000.25)
        t.record('received', 'CIRCUIT', bytes(100), timestamp=1700000001.5)
        path = os.path.join(self.tmp, "run.transcript")
        t.save(path)
        with open(path) as f:
            self.assertEqual(transcriptHeader, f.readline().strip())
        loaded = sessionTranscript.load(path)
        self.assertEqual(t, loaded)
        self.assertEqual(100, loaded[1].length)

    def testLoadSkipsComments(self):
        path = os.path.join(self.tmp, "commented.transcript")
        with open(path, "w") as f:
            f.write("# header\n\n// note\nsent HELLO 3 %s 1.0\n" % self.abcDigest)
        t = sessionTranscript.load(path)
        self.assertEqual(1, len(t))
        self.assertEqual('HELLO', t[0].kind)

    def testMalformedLine(self):
        self.assertRaises(ValueError, transcriptRecord.fromLine, "sent HELLO 3")
        self.assertRaises(ValueError, transcriptRecord.fromLine,
                          "sent HELLO three abc 1.0")

    def testInvalidDirection(self):
        self.assertRaises(ValueError, transcriptRecord, 'lost', 'HELLO', 0,
                          self.emptyDigest, 0.0)

    def testLineRoundTrip(self):
        r = transcriptRecord('received', 'OT_MSG2', 32, self.abcDigest, 3.25)
        self.assertEqual(r, transcriptRecord.fromLine(r.line()))

if __name__ == "__main__":
    unittest.main()
