# -*- coding: utf-8 -*-
import sys

from cli.main import run

sys.exit(run(sys.argv[1:]))
