#!/usr/bin/env python3
"""
Standalone entry point, same commands as `flask <command>`:

    python quasiwords.py word analyze abaababaabaababaaba
    python quasiwords.py stream analyze fibonacci --prefix 200 --max-qp 12 --json
    python quasiwords.py sturmian decide 'per=[(1,0)(1,1)]'
    python quasiwords.py morphism classify 'La Ra'
    python quasiwords.py verify all
"""

from cli_commands import cli

if __name__ == '__main__':
    cli(prog_name='quasiwords')
