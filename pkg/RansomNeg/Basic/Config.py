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


from fractions import Fraction

from RansomNeg import Settings

class configFile():
    """
    Representation of a plain-text key-value file. Every non-comment line holds
    one entry in the form ``key = value``; comment lines start with one of
    :data:`RansomNeg.Settings.commentSymbols`. Values are kept as strings and
    converted on access, decimals become exact :class:`fractions.Fraction`.

    An example for a victim::

        # loss profile
        l0 = 1
        round_length = 1
        blocks = 1, 1, 1, 1, 1
        tail = 0
        r_max = 10
    """

    _path = None
    """
    Path to the configuration file

    :type: string
    """

    _entries = None
    """
    Parsed entries, key to raw string value

    :type: dict
    """

    def __init__(self, path=None, entries=None):
        """
        :param path: Path to the configuration file
        :type path: string
        :param entries: Entries to use instead of a file (optional)
        :type entries: dict
        """
        self._path = path
        self._entries = {}

        if path is not None:
            with open(path, "r") as f:
                self.parse(f.read().splitlines())
        if entries:
            for key, value in entries.items():
                self._entries[key] = str(value)

    def __getitem__(self, key):
        return self._entries[key]

    def __contains__(self, key):
        return key in self._entries

    def keys(self):
        return list(self._entries.keys())

    def parse(self, lines):
        """
        Splits each line at the first ``=`` and stores the stripped key and
        value. Skips empty lines and all lines that start with a comment symbol.

        :param lines: Lines of the file
        :type lines: list
        """
        for number, line in enumerate(lines, 1):
            line = line.strip()
            if not line or line.startswith(Settings.commentSymbols):
                continue
            if "=" not in line:
                raise ValueError("Line %i of %s is not a key = value entry"
                                 % (number, self._path))
            key, value = line.split("=", 1)
            self._entries[key.strip()] = value.strip()

    def get(self, key, default=None):
        return self._entries.get(key, default)

    def fraction(self, key, default=None):
        """
        Returns the entry as an exact rational number. Accepts integers,
        decimals and ``a/b`` notation.

        :param key: Name of the entry
        :type key: string
        :param default: Returned if the key is missing (optional)
        :rtype: Fraction
        """
        if key not in self._entries:
            if default is not None:
                return Fraction(default)
            raise KeyError("Missing entry %s" % key)
        return toFraction(self._entries[key], key)

    def fractions(self, key, default=None):
        """
        Returns a comma separated entry as a list of exact rationals. An empty
        value gives an empty list.

        :rtype: list
        """
        if key not in self._entries:
            if default is not None:
                return [Fraction(x) for x in default]
            raise KeyError("Missing entry %s" % key)
        raw = self._entries[key].strip()
        if not raw:
            return []
        return [toFraction(x, key) for x in raw.split(",")]

    def integer(self, key, default=None):
        if key not in self._entries:
            if default is not None:
                return default
            raise KeyError("Missing entry %s" % key)
        try:
            return int(self._entries[key], 0)
        except ValueError:
            raise ValueError("Entry %s is not an integer: %s"
                             % (key, self._entries[key]))

    def hexInteger(self, key, default=None):
        """
        Returns an entry written in hexadecimal digits, with or without a
        leading ``0x``.

        :rtype: int
        """
        if key not in self._entries:
            if default is not None:
                return default
            raise KeyError("Missing entry %s" % key)
        try:
            return int(self._entries[key], 16)
        except ValueError:
            raise ValueError("Entry %s is not hexadecimal: %s"
                             % (key, self._entries[key]))

def toFraction(text, key=""):
    """
    Converts a decimal or rational string into an exact rational number.

    :param text: String to convert
    :type text: string
    :rtype: Fraction
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ValueError("Entry %s is not a number: %s" % (key, text))
