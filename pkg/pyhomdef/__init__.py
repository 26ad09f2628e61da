# http://www.python.org/dev/peps/pep-0396/
__version__ = '0.1.0'

import sys

if sys.version_info[:2] < (3, 6):
    raise RuntimeError('pyhomdef requires Python 3.6 or later')
