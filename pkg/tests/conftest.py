import os
import sys

# let test modules import the sibling naive.py oracle helpers
sys.path.insert(0, os.path.dirname(__file__))
