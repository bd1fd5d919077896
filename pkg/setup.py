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


from setuptools import setup

import glob

scriptlist = glob.glob('bin/*.py')


setup(name='RansomNeg',
      version='1.0',
      packages=[
                'RansomNeg',
                'RansomNeg.Basic',
                'RansomNeg.Game',
                'RansomNeg.Mechanism',
                'RansomNeg.Circuit',
                'RansomNeg.Crypto',
                'RansomNeg.Protocol',
                'RansomNeg.PostProcessing'
                ],
      description='Bargaining models and a privacy preserving negotiation '
                  'protocol for ransomware incidents',
      author='The RansomNeg developers',
      python_requires='>=3.8',
      install_requires=[
                'numpy',
                'scipy',
                'matplotlib',
                'cryptography'
                ],
      scripts=scriptlist,
      )
